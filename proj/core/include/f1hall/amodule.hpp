#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "f1hall/semigroup.hpp"

namespace f1hall {

// A finite pointed A-set.  Elements are 1..dim with basepoint 0; rows[g][x]
// is the action of generator g on x, rows[g][0] == 0 always.
struct AModule {
  SpecPtr spec;
  int dim = 0;
  std::vector<std::vector<int>> rows;  // one per generator, each of size dim+1
};

// Bitmask over the nonzero elements of a host module; bit (x-1) <=> element x.
using SubsetMask = std::uint32_t;

// Canonical text encoding of an isomorphism class.  Indecomposable:
// "d|g1:r1|g2:r2|..." with the minimal action rows over relabelings.
// Decomposable: the sorted component keys joined by the direct-sum marker.
// The zero module has key "0|".
using IsoKey = std::string;

struct ModuleMorphism {
  AModule dom, cod;
  std::vector<int> map;  // size dim(dom)+1, map[0] == 0
};

// Per-generator 0/1 matrices of the base change to a free R-module on the
// nonzero elements; mat[g][r][c] == 1 iff generator g sends c+1 to r+1.
using LinearizedModule = std::vector<std::vector<std::vector<int>>>;

// --- construction and validation ---------------------------------------

// Checks rows against every relation of the spec; for finite-table specs,
// also expands the full element action and checks (ab).x == a.(b.x) on all
// element pairs.  Throws std::invalid_argument with the failing relation.
AModule validate_module(SpecPtr spec, std::vector<std::vector<int>> rows);

AModule zero_module(SpecPtr spec);

// --- categorical toolkit -------------------------------------------------

AModule direct_sum(const AModule& m, const AModule& n);

// Connected components of the action graph, as indecomposable modules.
std::vector<AModule> decompose(const AModule& m);

bool is_indecomposable(const AModule& m);

// All action-closed subsets including empty and full, ordered by popcount
// then mask value.
std::vector<SubsetMask> submodules(const AModule& m);

bool is_closed(const AModule& m, SubsetMask s);

// Module carried by a closed subset, with the ambient action restricted.
AModule sub_module(const AModule& m, SubsetMask s);

// M with every element of the closed subset identified to the basepoint.
AModule quotient(const AModule& m, SubsetMask s);

// Canonical key plus a relabeling witness: perm[old] = new, perm[0] = 0.
std::pair<IsoKey, std::vector<int>> canonical_form(const AModule& m);

IsoKey canonical_key(const AModule& m);

bool is_isomorphic(const AModule& m, const AModule& n);

// Key helpers: keys carry enough to rebuild a representative module.
int key_dim(const IsoKey& key);
std::vector<IsoKey> key_components(const IsoKey& key);
IsoKey join_components(std::vector<IsoKey> components);
AModule module_from_key(SpecPtr spec, const IsoKey& key);
bool key_is_indecomposable(const IsoKey& key);

// --- morphisms ------------------------------------------------------------

// Throws on a non-pointed or non-equivariant map.
ModuleMorphism validate_morphism(const AModule& dom, const AModule& cod,
                                 std::vector<int> map);

struct KernelImageCokernel {
  SubsetMask kernel;  // subset of dom
  SubsetMask image;   // subset of cod
  AModule cokernel;
};

KernelImageCokernel kernel_image_cokernel(const ModuleMorphism& f);

// True iff every fibre over a nonzero element has at most one element.
bool is_normal(const ModuleMorphism& f);

// --- enumeration -----------------------------------------------------------

enum class ModuleFilter { All, Indecomposable, Nilpotent };

// One key per isomorphism class of dimension d matching the filter, in key
// order.  Nilpotent is only meaningful for single-generator specs.
std::vector<IsoKey> enumerate_modules(SpecPtr spec, int d,
                                      ModuleFilter filter = ModuleFilter::All);

struct Extension {
  AModule total;       // carrier: 1..dim(N) is the embedded N, rest the M part
  SubsetMask sub_mask;  // mask of the embedded N copy
};

// All admissible extensions of M by N (N the submodule), deduplicated by
// canonical key of the total module and sorted by key.
std::vector<Extension> enumerate_extensions(const AModule& m, const AModule& n);

LinearizedModule linearize(const AModule& m);

}  // namespace f1hall
