#pragma once

#include <string>
#include <vector>

#include "f1hall/amodule.hpp"
#include "f1hall/numeric.hpp"
#include "f1hall/report.hpp"
#include "f1hall/semigroup.hpp"

namespace f1hall {

struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  int identity = 0;
};

GroupTable cyclic_group(int n);
GroupTable symmetric_group(int n);  // n <= 4

// "zN" | "sN" | "trivial"
GroupTable parse_group_name(const std::string& name);

struct SubgroupClass {
  std::vector<int> representative;  // sorted element indices, closed set
  int class_size = 0;
  std::string label;  // e.g. "H0:{e}" — deterministic across runs
};

// All subgroups up to conjugacy, ordered by size then canonical element set.
// Bounded at |G| <= 24.
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const GroupTable& g);

// Coset modules G/H u {*} over the group-with-zero spec, one per class,
// in class order.
std::vector<AModule> irreducibles_for_group_with_zero(const GroupTable& g,
                                                      SpecPtr spec);

struct BurnsideTable {
  std::vector<std::string> labels;
  std::vector<IsoKey> irreducible_keys;
  // entry[i][j]: multiplicity of each irreducible in M_i smash M_j.
  std::vector<std::vector<std::vector<Int>>> entry;
};

BurnsideTable burnside_table(const GroupTable& g, SpecPtr spec);

// Checks that every admissible SES of total dim <= max_dim splits and that
// Hall products of irreducibles are delta functions on sums.
Report verify_semisimplicity(const GroupTable& g, SpecPtr spec, int max_dim);

}  // namespace f1hall
