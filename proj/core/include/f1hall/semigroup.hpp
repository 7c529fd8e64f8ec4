#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace f1hall {

// A word over the generator alphabet, as indices into SemigroupSpec::generators.
// The empty word stands for the unit (when the spec has one).
using Word = std::vector<int>;

// One defining relation: lhs acts like rhs, where an absent rhs means the
// zero element (constant-basepoint action on modules).
struct Relation {
  Word lhs;
  std::optional<Word> rhs;
};

enum class SpecKind {
  FreeMonoidOnK,
  TCongruence,
  FiniteTable,
  PathSemigroup,
  GroupWithZero,
};

struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (source, target), 0-based
};

// A validated presentation of a finitely generated semigroup with zero.
// Immutable after construction; shared by reference across modules.
//
// Finite kinds carry the full multiplication table on `elements` (index 0 is
// always the zero element) plus a witness word over the generators for every
// nonzero element.  Infinite kinds (free monoids, path semigroups of quivers
// with cycles) carry relations only and evaluate words by rewriting.
class SemigroupSpec {
 public:
  SpecKind kind;
  std::vector<std::string> generators;  // order fixes all canonical encodings
  std::vector<Relation> relations;
  bool has_unit = false;
  bool commutative = false;

  // Finite part; empty `elements` means the spec is infinite.
  std::vector<std::string> elements;      // [0] = "0"
  std::vector<std::vector<int>> table;    // elements x elements
  int unit_index = -1;                    // -1 if no unit
  std::vector<Word> witness;              // per element; witness[0] unused
  std::vector<int> generator_element;     // element index of each generator

  std::optional<Quiver> quiver;  // PathSemigroup only

  std::string fingerprint;  // digest of the normalized presentation

  bool is_finite() const { return !elements.empty(); }
  int num_generators() const { return static_cast<int>(generators.size()); }
};

using SpecPtr = std::shared_ptr<const SemigroupSpec>;

// Builders.  All throw std::invalid_argument on malformed input.
SpecPtr build_free_monoid(int k);

// t^n identified with 0 (m_is_zero) or with t^m, 0 <= m < n.
SpecPtr build_t_congruence(int n, int m, bool m_is_zero);

// Generic finite carrier.  `zero_index`/`unit_index` refer to `elements`;
// unit_index < 0 means no unit.  Default generator set: all nonzero,
// non-unit elements.  The builder renumbers so that zero lands at index 0.
SpecPtr build_finite_table(const std::vector<std::string>& elements,
                           const std::vector<std::vector<int>>& table,
                           int zero_index, int unit_index = -1);

SpecPtr build_path_semigroup(const Quiver& q);

// Group table on `names` with `table[i][j] = names index of g_i g_j`.
SpecPtr build_group_with_zero(const std::vector<std::string>& names,
                              const std::vector<std::vector<int>>& table);

// Product of the letters of `w` in `spec`, as the display name of the
// resulting element ("0" for the zero element).  Empty word evaluates to
// the unit when present and throws otherwise.
std::string evaluate_word(const SemigroupSpec& spec, const Word& w);

// Spec mini-language used by the CLI and file formats:
//   free:k | tcong:n,m | tcong:n,0 | gz:zN | gz:s3 | gz:table@FILE |
//   path:@FILE | table@FILE
SpecPtr parse_spec(const std::string& text);

Quiver parse_quiver_file(const std::string& path);

}  // namespace f1hall
