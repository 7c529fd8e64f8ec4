#include <doctest.h>

#include "f1hall/hall.hpp"

using namespace f1hall;

namespace {

AModule mod1(SpecPtr spec, std::vector<int> row) {
  row.insert(row.begin(), 0);
  return validate_module(std::move(spec), {std::move(row)});
}

// Full-scan oracle: structure constants by scanning every class of the
// right dimension and counting submodules directly.
std::map<IsoKey, Int> product_by_full_scan(SpecPtr spec, const IsoKey& mk,
                                           const IsoKey& nk) {
  AModule m = module_from_key(spec, mk);
  AModule n = module_from_key(spec, nk);
  std::map<IsoKey, Int> out;
  for (const auto& rk : enumerate_modules(spec, m.dim + n.dim)) {
    Int c = hall_number(module_from_key(spec, rk), m, n);
    if (c != 0) out[rk] = c;
  }
  return out;
}

}  // namespace

TEST_CASE("frozen hall numbers") {
  auto free1 = build_free_monoid(1);
  AModule pt = mod1(free1, {0});
  CHECK(hall_number(mod1(free1, {2, 0}), pt, pt) == 1);  // L2
  CHECK(hall_number(mod1(free1, {0, 0}), pt, pt) == 2);  // two points
  CHECK(hall_number(mod1(free1, {2, 1}), pt, pt) == 0);  // 2-cycle
}

TEST_CASE("delta product of two points") {
  auto free1 = build_free_monoid(1);
  IsoKey pt = canonical_key(mod1(free1, {0}));
  auto prod = delta_product(free1, pt, pt);
  REQUIRE(prod.size() == 2);
  CHECK(prod.at(canonical_key(mod1(free1, {0, 0}))) == 2);
  CHECK(prod.at(canonical_key(mod1(free1, {2, 0}))) == 1);
}

TEST_CASE("gluing product equals full-scan product") {
  auto check_spec = [](SpecPtr spec, int max_total) {
    std::vector<IsoKey> keys;
    for (int d = 1; d < max_total; ++d)
      for (const auto& k : enumerate_modules(spec, d)) keys.push_back(k);
    for (const auto& mk : keys)
      for (const auto& nk : keys) {
        if (key_dim(mk) + key_dim(nk) > max_total) continue;
        CHECK(delta_product(spec, mk, nk) == product_by_full_scan(spec, mk, nk));
      }
  };
  check_spec(build_free_monoid(1), 4);
  check_spec(parse_spec("gz:z2"), 3);
}

TEST_CASE("product is graded") {
  auto free1 = build_free_monoid(1);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (const auto& mk : enumerate_modules(free1, a))
        for (const auto& nk : enumerate_modules(free1, b))
          for (const auto& [rk, c] : delta_product(free1, mk, nk))
            CHECK(key_dim(rk) == a + b);
}

TEST_CASE("coproduct and counit") {
  auto free1 = build_free_monoid(1);
  IsoKey pt = canonical_key(mod1(free1, {0}));
  IsoKey two = canonical_key(mod1(free1, {0, 0}));
  IsoKey zero = canonical_key(zero_module(free1));

  auto d = coproduct(hall_delta(free1, two));
  REQUIRE(d.coeffs.size() == 3);
  CHECK(d.coeffs.at({zero, two}) == 1);
  CHECK(d.coeffs.at({pt, pt}) == 1);
  CHECK(d.coeffs.at({two, zero}) == 1);

  CHECK(counit(hall_delta(free1, zero)) == 1);
  CHECK(counit(hall_delta(free1, pt)) == 0);
}

TEST_CASE("antipode hand values") {
  auto free1 = build_free_monoid(1);
  IsoKey pt = canonical_key(mod1(free1, {0}));
  IsoKey two = canonical_key(mod1(free1, {0, 0}));
  IsoKey l2 = canonical_key(mod1(free1, {2, 0}));

  auto s_pt = antipode(hall_delta(free1, pt));
  REQUIRE(s_pt.coeffs.size() == 1);
  CHECK(s_pt.coeffs.at(pt) == -1);

  auto s_two = antipode(hall_delta(free1, two));
  REQUIRE(s_two.coeffs.size() == 2);
  CHECK(s_two.coeffs.at(two) == 1);
  CHECK(s_two.coeffs.at(l2) == 1);
}

TEST_CASE("lie bracket on indecomposables") {
  auto free1 = build_free_monoid(1);
  IsoKey pt = canonical_key(mod1(free1, {0}));
  IsoKey c1 = canonical_key(mod1(free1, {1}));  // 1-cycle

  auto br = lie_bracket(free1, pt, c1);
  // [point, loop] = the loop-with-tail class.
  IsoKey loop_tail = canonical_key(mod1(free1, {1, 1}));
  REQUIRE(br.coeffs.size() == 1);
  CHECK(br.coeffs.at(loop_tail) == 1);

  // Bracket closure: supported on indecomposables for all small pairs.
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 5 && b <= 4 - a + 1; ++b)
      for (const auto& mk : enumerate_modules(free1, a, ModuleFilter::Indecomposable))
        for (const auto& nk : enumerate_modules(free1, b, ModuleFilter::Indecomposable))
          for (const auto& [rk, c] : lie_bracket(free1, mk, nk).coeffs)
            CHECK(key_is_indecomposable(rk));

  CHECK_THROWS_AS(lie_bracket(free1, canonical_key(mod1(free1, {0, 0})), pt),
                  std::invalid_argument);
}

TEST_CASE("gz:z2 brackets vanish") {
  auto z2 = parse_spec("gz:z2");
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (const auto& mk : enumerate_modules(z2, a, ModuleFilter::Indecomposable))
        for (const auto& nk : enumerate_modules(z2, b, ModuleFilter::Indecomposable))
          CHECK(lie_bracket(z2, mk, nk).coeffs.empty());
}

TEST_CASE("hopf axioms at small grade") {
  auto rep = verify_hopf_axioms(build_free_monoid(1), 3);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
}

TEST_CASE("pbw at small grade with spot values") {
  auto free1 = build_free_monoid(1);
  auto rep = verify_pbw(free1, 3);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
  CHECK(enumerate_modules(free1, 2).size() == 6);
  CHECK(enumerate_modules(free1, 2, ModuleFilter::Indecomposable).size() == 3);
}

TEST_CASE("k0 truncation of the one-point-action monoid") {
  auto tc10 = parse_spec("tcong:1,0");  // t = 0: modules are pointed sets
  for (int d = 1; d <= 4; ++d) {
    auto k0 = k0_truncated(tc10, d);
    CHECK(static_cast<int>(k0.classes.size()) == d);
    int free_factors = 0;
    for (const auto& f : k0.invariant_factors) {
      if (f == 0)
        ++free_factors;
      else
        CHECK(f == 1);
    }
    CHECK(free_factors == 1);
  }
}

TEST_CASE("smith normal form basics") {
  CHECK(smith_normal_form_diagonal({{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
  CHECK(smith_normal_form_diagonal({{2, 4}, {4, 8}}) == std::vector<Int>{2, 0});
  CHECK(rational_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
}
