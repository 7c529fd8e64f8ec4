#include <doctest.h>

#include "f1hall/semigroup.hpp"

using namespace f1hall;

TEST_CASE("free monoid on one generator") {
  auto spec = build_free_monoid(1);
  CHECK(!spec->is_finite());
  CHECK(spec->has_unit);
  CHECK(spec->commutative);
  CHECK(spec->generators == std::vector<std::string>{"t"});
  CHECK(evaluate_word(*spec, {0, 0, 0}) == "t^3");
  CHECK(evaluate_word(*spec, {}) == "1");
  CHECK(spec->fingerprint == build_free_monoid(1)->fingerprint);
  CHECK(spec->fingerprint != build_free_monoid(2)->fingerprint);
}

TEST_CASE("t-congruence monoids") {
  auto n3x0 = build_t_congruence(3, 0, true);  // t^3 = 0
  REQUIRE(n3x0->is_finite());
  CHECK(n3x0->elements == std::vector<std::string>{"0", "1", "t", "t^2"});
  CHECK(evaluate_word(*n3x0, {0, 0, 0}) == "0");
  CHECK(evaluate_word(*n3x0, {0, 0}) == "t^2");

  auto n3m1 = build_t_congruence(3, 1, false);  // t^3 = t
  CHECK(evaluate_word(*n3m1, {0, 0, 0}) == "t");
  CHECK(evaluate_word(*n3m1, {0, 0, 0, 0}) == "t^2");

  // The expanded table re-ingested as a raw table gives the same
  // fingerprint: the digest depends only on table structure.
  auto again = build_finite_table(n3m1->elements, n3m1->table, 0, n3m1->unit_index);
  CHECK(again->fingerprint == n3m1->fingerprint);
}

TEST_CASE("finite tables") {
  // F1 = {0, 1}.
  auto f1 = build_finite_table({"0", "1"}, {{0, 0}, {0, 1}}, 0, 1);
  CHECK(f1->has_unit);
  CHECK(f1->commutative);

  // (a.a).a != a.(a.a) forced by a cyclic-shift table.
  std::vector<std::vector<int>> bad = {{0, 0, 0}, {0, 2, 1}, {0, 1, 1}};
  CHECK_THROWS_AS(build_finite_table({"0", "a", "b"}, bad, 0), std::invalid_argument);

  // Zero must absorb.
  std::vector<std::vector<int>> nonabs = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(build_finite_table({"0", "1"}, nonabs, 0, 1), std::invalid_argument);
}

TEST_CASE("groups with zero") {
  auto z2 = parse_spec("gz:z2");
  CHECK(z2->is_finite());
  CHECK(z2->elements.size() == 3);
  CHECK(z2->has_unit);
  CHECK(z2->num_generators() == 1);  // the non-identity element

  // A monoid that is not a group is rejected.
  std::vector<std::vector<int>> semilattice = {{0, 0}, {0, 1}};
  CHECK_THROWS_AS(build_group_with_zero({"e", "a"}, semilattice),
                  std::invalid_argument);
}

TEST_CASE("path semigroups") {
  // Jordan quiver: one vertex, one self-loop; infinite.
  Quiver jordan{1, {{0, 0}}};
  auto aj = build_path_semigroup(jordan);
  CHECK(!aj->is_finite());
  CHECK(!aj->has_unit);
  REQUIRE(aj->generators.size() == 2);  // v1 then e1
  CHECK(evaluate_word(*aj, {0}) == "v1");
  CHECK(evaluate_word(*aj, {1}) == "e1");
  CHECK(evaluate_word(*aj, {1, 1}) == "e1^2");
  CHECK(evaluate_word(*aj, {1, 0}) == "e1");  // e1 . v1, v1 initial
  CHECK(evaluate_word(*aj, {0, 0}) == "v1");

  // A2 quiver: acyclic, so the table materializes.
  Quiver a2{2, {{0, 1}}};
  auto aa = build_path_semigroup(a2);
  REQUIRE(aa->is_finite());
  // Elements: 0, v1, v2, e1.
  CHECK(aa->elements.size() == 4);
  // Generators are v1, v2, e1 in order; v_i e_l = e_l iff i is initial,
  // e_l v_i = e_l iff i is terminal.
  CHECK(evaluate_word(*aa, {0, 2}) == "e1");  // v1 . e1
  CHECK(evaluate_word(*aa, {2, 1}) == "e1");  // e1 . v2
  CHECK(evaluate_word(*aa, {2, 0}) == "0");   // e1 . v1
  CHECK(evaluate_word(*aa, {1, 2}) == "0");   // v2 . e1
  CHECK(evaluate_word(*aa, {2, 2}) == "0");   // e1 . e1 not composable
}

TEST_CASE("spec mini-language") {
  CHECK(parse_spec("free:2")->num_generators() == 2);
  CHECK(parse_spec("tcong:2,0")->elements.size() == 3);
  CHECK(parse_spec("tcong:3,1")->elements.size() == 4);
  CHECK(parse_spec("gz:s3")->elements.size() == 7);
  CHECK_THROWS_AS(parse_spec("nonsense:1"), std::invalid_argument);
}
