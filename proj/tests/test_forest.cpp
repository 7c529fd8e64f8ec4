#include <doctest.h>

#include <map>

#include "f1hall/forest.hpp"
#include "f1hall/hall.hpp"

using namespace f1hall;

namespace {

AModule mod1(SpecPtr spec, std::vector<int> row) {
  row.insert(row.begin(), 0);
  return validate_module(std::move(spec), {std::move(row)});
}

}  // namespace

TEST_CASE("forest parsing and normalization") {
  CHECK(parse_forest("(()())").enc == "(()())");
  CHECK(parse_forest("(()())").vertices == 3);
  CHECK(parse_forest("((()))").enc == "((()))");
  // Children sort lexicographically; '(' < ')' puts heavier trees first.
  CHECK(parse_forest("(()(()))").enc == "((())())");
  // Forest of two trees sorts by encoding the same way.
  CHECK(parse_forest("()(())").enc == "(())()");
  CHECK_THROWS_AS(parse_forest("(()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest(")("), std::invalid_argument);
}

TEST_CASE("forest / module dictionary round trips") {
  auto free1 = build_free_monoid(1);
  for (int n = 1; n <= 5; ++n)
    for (const auto& enc : rooted_forests(n)) {
      Forest f{enc, n};
      AModule m = forest_to_module(free1, f);
      CHECK(module_to_forest(m).enc == enc);
    }
  // Non-nilpotent modules have no forest.
  CHECK_THROWS_AS(module_to_forest(mod1(free1, {1})), std::invalid_argument);
}

TEST_CASE("module graphs and classification") {
  auto free1 = build_free_monoid(1);

  auto g = module_to_graph(mod1(free1, {2, 3, 0}));  // ladder3
  CHECK(g.vertices == 3);
  CHECK(g.edges.size() == 2);
  CHECK(g.h1 == 0);
  CHECK(g.cycle.empty());

  auto c = classify(mod1(free1, {2, 3, 0}));
  CHECK(c.kind == Classification::NilpotentTree);
  CHECK(c.height == 2);

  auto lt = classify(mod1(free1, {1, 1}));  // loop with tail
  CHECK(lt.kind == Classification::CycleWithTrees);
  CHECK(lt.cycle_length == 1);
  CHECK(lt.attached_trees == std::vector<std::string>{"()"});

  auto g2 = module_to_graph(mod1(free1, {2, 1}));  // 2-cycle
  CHECK(g2.h1 == 1);
  CHECK(g2.cycle.size() == 2);
}

TEST_CASE("admissible cut counts") {
  CHECK(admissible_cuts(parse_forest("((()))")).size() == 3);  // ladder3
  CHECK(admissible_cuts(parse_forest("(()())")).size() == 4);  // cherry
  CHECK(admissible_cuts(parse_forest("()")).size() == 1);      // single vertex
}

TEST_CASE("extended cuts are in bijection with submodules") {
  auto free1 = build_free_monoid(1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& enc : rooted_forests(n)) {
      Forest f{enc, n};
      AModule r = forest_to_module(free1, f);
      auto cuts = admissible_cuts_extended(f);
      auto subs = submodules(r);
      REQUIRE(cuts.size() == subs.size());
      // The (quotient, sub) class multisets agree.
      std::map<std::pair<std::string, std::string>, int> by_cut, by_sub;
      for (const auto& cut : cuts) {
        auto [lf, rt] = apply_cut(cut);
        by_cut[{lf.enc, rt.enc}] += 1;
      }
      for (SubsetMask s : subs)
        by_sub[{module_to_forest(quotient(r, s)).enc,
                module_to_forest(sub_module(r, s)).enc}] += 1;
      CHECK(by_cut == by_sub);
    }
}

TEST_CASE("simple cuts") {
  auto free1 = build_free_monoid(1);
  CHECK(simple_cuts(mod1(free1, {2, 3, 0})).size() == 2);  // ladder3
  CHECK(simple_cuts(mod1(free1, {1, 1})).size() == 1);     // loop with tail
  CHECK(simple_cuts(mod1(free1, {0})).empty());            // single vertex
  CHECK(simple_cuts(mod1(free1, {2, 1})).empty());         // pure 2-cycle
}

TEST_CASE("kreimer coproduct hand values") {
  auto dk = [](const std::string& enc) { return kreimer_coproduct(parse_forest(enc)); };

  ForestTensor l2 = {{{"", "(())"}, 1}, {{"(())", ""}, 1}, {{"()", "()"}, 1}};
  CHECK(dk("(())") == l2);

  ForestTensor cherry = {{{"", "(()())"}, 1},
                         {{"(()())", ""}, 1},
                         {{"()", "(())"}, 2},
                         {{"()()", "()"}, 1}};
  CHECK(dk("(()())") == cherry);

  // Multiplicativity over forest factors: two single vertices.
  ForestTensor dots = {{{"", "()()"}, 1}, {{"()", "()"}, 2}, {{"()()", ""}, 1}};
  CHECK(dk("()()") == dots);
}

TEST_CASE("duality at small size") {
  auto rep = verify_duality(4);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
}

TEST_CASE("tree and forest census") {
  std::vector<size_t> trees, forests;
  for (int n = 1; n <= 6; ++n) {
    trees.push_back(rooted_trees(n).size());
    forests.push_back(rooted_forests(n).size());
  }
  CHECK(trees == std::vector<size_t>{1, 1, 2, 4, 9, 20});
  CHECK(forests == std::vector<size_t>{1, 2, 4, 9, 20, 48});
}

TEST_CASE("hall coefficients on indecomposable trees count simple cuts") {
  auto free1 = build_free_monoid(1);
  for (int n = 2; n <= 5; ++n)
    for (const auto& enc : rooted_trees(n)) {
      AModule r = forest_to_module(free1, parse_forest(enc));
      std::map<std::pair<IsoKey, IsoKey>, int> cut_counts;
      for (const auto& sc : simple_cuts(r))
        cut_counts[{canonical_key(quotient(r, sc.rt_mask)),
                    canonical_key(sub_module(r, sc.rt_mask))}] += 1;
      for (const auto& [pair, count] : cut_counts) {
        auto prod = delta_product(free1, pair.first, pair.second);
        CHECK(prod.at(canonical_key(r)) == count);
      }
    }
}
