#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "f1hall/amodule.hpp"
#include "f1hall/numeric.hpp"
#include "f1hall/report.hpp"

namespace f1hall {

// Directed action graph of a single-generator module: edges m -> t.m for
// t.m != 0.
struct ModuleGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;       // 1-based elements
  std::vector<std::pair<int, int>> types;       // per vertex: (in, out); [0] unused
  int h1 = 0;                                   // first betti number
  std::vector<int> cycle;                       // cycle vertices in order, or empty
};

ModuleGraph module_to_graph(const AModule& m);

struct Classification {
  enum Kind { NilpotentTree, CycleWithTrees } kind = NilpotentTree;
  int height = 0;                           // NilpotentTree
  int cycle_length = 0;                     // CycleWithTrees
  std::vector<std::string> attached_trees;  // tree encodings, sorted
};

// Exactly one variant per indecomposable single-generator module.
Classification classify(const AModule& m);

// Canonical rooted-forest encoding: a tree is "(" + sorted child encodings
// + ")"; a forest is the sorted concatenation of its trees.  The empty
// string is the empty forest.
struct Forest {
  std::string enc;
  int vertices = 0;
};

// Parses and normalizes (children re-sorted); throws on unbalanced text.
Forest parse_forest(const std::string& text);

Forest module_to_forest(const AModule& m);  // nilpotent single-generator only
AModule forest_to_module(SpecPtr spec, const Forest& f);

// A cut names each cut edge by its child vertex in the parsed forest's
// depth-first numbering (vertices 1..n).  A root vertex in the list stands
// for the virtual edge above that root, pruning the whole tree.
struct Cut {
  Forest host;
  std::vector<int> edge_children;
};

// DFS numbering used by cuts: parent[v] for v in 1..n (0 = root).
std::vector<int> forest_parents(const Forest& f);

// All subsets of real edges meeting each root-directed path at most once,
// ordered by size then child list.  Includes the empty cut.
std::vector<Cut> admissible_cuts(const Forest& f);

// Real-edge cuts plus whole-tree prunes; these are in bijection with the
// submodules of forest_to_module(f).
std::vector<Cut> admissible_cuts_extended(const Forest& f);

// (pruned part Lf, root part Rt).
std::pair<Forest, Forest> apply_cut(const Cut& c);

// Single-edge cuts on a connected module graph; edges on the oriented cycle
// are never cut.  rt_mask carries the root/cycle side.
struct SimpleCut {
  int from = 0;  // source vertex of the cut edge
  SubsetMask rt_mask = 0;
  SubsetMask lf_mask = 0;
};

std::vector<SimpleCut> simple_cuts(const AModule& m);  // m indecomposable

// Sum over extended admissible cuts of Lf (x) Rt, keyed by forest encoding;
// the empty forest "" is the unit.  Coefficient = number of cuts producing
// the pair.
using ForestTensor = std::map<std::pair<std::string, std::string>, Int>;

ForestTensor kreimer_coproduct(const Forest& f);

// For every forest with <= max_vertices vertices, checks that hall_number
// agrees with the matching kreimer_coproduct coefficient (root side =
// submodule, pruned side = quotient).
Report verify_duality(int max_vertices);

// Canonical encodings of all rooted trees / forests on exactly n vertices,
// generated directly (independent of module enumeration).
std::vector<std::string> rooted_trees(int n);
std::vector<std::string> rooted_forests(int n);

}  // namespace f1hall
