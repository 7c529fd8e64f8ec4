#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "f1hall/serialize.hpp"

using namespace f1hall;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(F1HALL_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("module text round trip") {
  auto free1 = build_free_monoid(1);
  AModule m = module_from_text(free1, "2;t:[2,0]");
  CHECK(m.dim == 2);
  CHECK(module_to_text(m) == "2; t:[2,0]");
  CHECK(canonical_key(module_from_text(free1, module_to_text(m))) ==
        canonical_key(m));
  CHECK_THROWS_AS(module_from_text(free1, "2;t:[3,0]"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_text(free1, "x;t:[0]"), std::invalid_argument);

  auto free2 = build_free_monoid(2);
  AModule m2 = module_from_text(free2, "2; x1:[2,0]; x2:[0,1]");
  CHECK(canonical_key(module_from_json(free2, module_to_json(m2))) ==
        canonical_key(m2));
}

TEST_CASE("rational strings") {
  CHECK(rational_to_string(Rational(3, 2)) == "3/2");
  CHECK(rational_to_string(Rational(-4, 2)) == "-2");
  CHECK(rational_from_string("3/2") == Rational(3, 2));
  CHECK(rational_from_string("-7") == Rational(-7));
}

TEST_CASE("hall and tensor element JSON round trips") {
  auto free1 = build_free_monoid(1);
  HallElement e{free1, {{"1|t:0", Rational(3, 2)}, {"1|t:1", Rational(-1)}}};
  CHECK(hall_from_json(free1, hall_to_json(e)).coeffs == e.coeffs);

  TensorElement t{free1, {{{"0|", "1|t:0"}, Rational(5, 7)}}};
  CHECK(tensor_from_json(free1, tensor_to_json(t)).coeffs == t.coeffs);

  RepElement r{{"1|t:0", Int(4)}};
  CHECK(rep_from_json(rep_to_json(r)) == r);
}

TEST_CASE("cli product example") {
  auto r = run_cli("product --spec free:1 --left \"1;t:[0]\" --right \"1;t:[0]\" --format json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["coeff"] == "2");
  CHECK(j[1]["coeff"] == "1");
}

TEST_CASE("cli enumerate example") {
  auto r = run_cli("enumerate --spec free:1 --dim 1");
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out).size() == 2);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("product --spec "
                "bogus:9 --left \"1;t:[0]\" --right \"1;t:[0]\"").exit_code == 2);
  CHECK(run_cli("decompose --spec free:1 --module \"1;t:[9]\"").exit_code == 2);
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);
  // Domain error: classify needs an indecomposable module.
  CHECK(run_cli("classify --spec free:1 --module \"2;t:[0,0]\"").exit_code == 1);
  // Infinite spec has no table.
  CHECK(run_cli("table --spec free:1").exit_code == 1);
}

TEST_CASE("cold and warm cache runs are byte-identical") {
  std::string cache = std::string(F1HALL_TEST_TMPDIR) + "/cli_cache.json";
  std::remove(cache.c_str());
  std::string args = "duality --max-vertices 4 --cache " + cache;
  auto cold = run_cli(args);
  auto warm = run_cli(args);
  CHECK(cold.exit_code == 0);
  CHECK(warm.exit_code == 0);
  CHECK(cold.out == warm.out);

  // A corrupted cache file is ignored, not trusted.
  {
    std::ofstream f(cache);
    f << "{not json";
  }
  auto recovered = run_cli(args);
  CHECK(recovered.exit_code == 0);
  CHECK(recovered.out == cold.out);

  // An entry under a different spec fingerprint never matches: keys embed
  // the full argument list including the spec text.
  auto other = run_cli("enumerate --spec tcong:2,0 --dim 2 --cache " + cache);
  auto fresh = run_cli("enumerate --spec tcong:2,0 --dim 2");
  CHECK(other.out == fresh.out);
  std::remove(cache.c_str());
}

TEST_CASE("concurrent cache writers do not corrupt the file") {
  std::string cache = std::string(F1HALL_TEST_TMPDIR) + "/cli_cache_mt.json";
  std::remove(cache.c_str());
  std::string cmd = std::string(F1HALL_CLI_PATH) +
                    " enumerate --spec free:1 --dim 3 --cache " + cache +
                    " > /dev/null 2>&1 & ";
  std::string all;
  for (int i = 0; i < 6; ++i) all += cmd;
  all += "wait";
  REQUIRE(std::system(all.c_str()) == 0);
  std::ifstream f(cache);
  REQUIRE(f.good());
  Json parsed;
  CHECK_NOTHROW(parsed = Json::parse(f));
  CHECK(parsed.is_object());
  std::remove(cache.c_str());
}
