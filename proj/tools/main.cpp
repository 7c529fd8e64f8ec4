#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "f1hall/forest.hpp"
#include "f1hall/group.hpp"
#include "f1hall/hall.hpp"
#include "f1hall/rep_ring.hpp"
#include "f1hall/serialize.hpp"

namespace {

using namespace f1hall;

constexpr int kCacheVersion = 1;

// Single JSON file guarded by a lock file; anything suspicious is treated
// as a miss and recomputed.
class Cache {
 public:
  explicit Cache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in.good()) return;
    try {
      Json j = Json::parse(in);
      if (j.at("version").get<int>() != kCacheVersion)
        throw std::runtime_error("version mismatch");
      entries_ = j.at("entries");
      if (!entries_.is_object()) throw std::runtime_error("bad entries");
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring unusable cache " << path_ << " (" << e.what()
                << ")\n";
      entries_ = Json::object();
    }
  }

  std::string get_or_compute(const std::string& op, const std::string& inputs,
                             const std::function<std::string()>& compute) {
    std::string key = op + "\x1f" + inputs;
    if (!path_.empty()) {
      auto it = entries_.find(key);
      if (it != entries_.end() && it->is_string()) return it->get<std::string>();
    }
    std::string result = compute();
    if (!path_.empty()) {
      entries_[key] = result;
      flush();
    }
    return result;
  }

  const Json& entries() const { return entries_; }

 private:
  void flush() {
    std::string lock = path_ + ".lock";
    int fd = -1;
    for (int attempt = 0; attempt < 200; ++attempt) {
      fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd >= 0) break;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    if (fd < 0) {
      std::cerr << "warning: could not acquire cache lock " << lock << "\n";
      return;
    }
    {
      // Re-merge entries written by other processes while we computed.
      std::ifstream in(path_);
      if (in.good()) {
        try {
          Json j = Json::parse(in);
          if (j.at("version").get<int>() == kCacheVersion && j.at("entries").is_object())
            for (auto& [k, v] : j.at("entries").items())
              if (!entries_.contains(k)) entries_[k] = v;
        } catch (...) {
        }
      }
      Json out;
      out["version"] = kCacheVersion;
      out["entries"] = entries_;
      std::string tmp = path_ + ".tmp";
      std::ofstream o(tmp);
      o << out.dump(2) << "\n";
      o.close();
      std::rename(tmp.c_str(), path_.c_str());
    }
    ::close(fd);
    std::remove(lock.c_str());
  }

  std::string path_;
  Json entries_ = Json::object();
};

// Errors in user-supplied text (spec/module/forest encodings) are usage
// errors (exit 2); everything else thrown during compute is a domain error
// (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SpecPtr parse_spec_arg(const std::string& text) {
  try {
    return parse_spec(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --spec: ") + e.what());
  }
}

AModule parse_module_arg(SpecPtr spec, const std::string& text) {
  try {
    return module_from_text(std::move(spec), text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad module text '") + text + "': " + e.what());
  }
}

Forest parse_forest_arg(const std::string& text) {
  try {
    return parse_forest(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad forest text '") + text + "': " + e.what());
  }
}

ModuleFilter parse_filter(const std::string& f) {
  if (f == "all") return ModuleFilter::All;
  if (f == "indecomposable") return ModuleFilter::Indecomposable;
  if (f == "nilpotent") return ModuleFilter::Nilpotent;
  throw UsageError("bad --filter: " + f);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json module_summary(const AModule& m) {
  Json j;
  j["text"] = module_to_text(m);
  j["key"] = canonical_key(m);
  Json comps = Json::array();
  for (const auto& c : decompose(m)) comps.push_back(canonical_key(c));
  j["components"] = std::move(comps);
  return j;
}

std::string spec_table_output(const SemigroupSpec& spec, const std::string& format) {
  if (!spec.is_finite()) throw std::runtime_error("spec is infinite; no table");
  const auto& e = spec.elements;
  if (format == "json") {
    Json j;
    j["elements"] = e;
    j["unit_index"] = spec.unit_index;
    Json rows = Json::array();
    for (const auto& row : spec.table) rows.push_back(row);
    j["table"] = std::move(rows);
    j["fingerprint"] = spec.fingerprint;
    return dump(j);
  }
  std::ostringstream out;
  if (format == "csv") {
    out << "*";
    for (const auto& n : e) out << "," << n;
    out << "\n";
    for (size_t i = 0; i < e.size(); ++i) {
      out << e[i];
      for (size_t j = 0; j < e.size(); ++j) out << "," << e[spec.table[i][j]];
      out << "\n";
    }
  } else {
    out << "| * |";
    for (const auto& n : e) out << " " << n << " |";
    out << "\n|---|";
    for (size_t i = 0; i < e.size(); ++i) out << "---|";
    out << "\n";
    for (size_t i = 0; i < e.size(); ++i) {
      out << "| " << e[i] << " |";
      for (size_t j = 0; j < e.size(); ++j) out << " " << e[spec.table[i][j]] << " |";
      out << "\n";
    }
  }
  return out.str();
}

std::string paper_examples_output() {
  auto spec = build_free_monoid(1);
  auto cherry = forest_to_module(spec, parse_forest("(()())"));
  auto ladder3 = forest_to_module(spec, parse_forest("((()))"));

  struct Row {
    std::string label;
    AModule lhs, rhs;
    bool is_tensor;
    std::string reference;
  };
  std::vector<Row> rows = {
      {"cherry ^ ladder3", cherry, ladder3, false, "(()()) + 6*()"},
      {"cherry ^ cherry", cherry, cherry, false, "(()()()()) + 4*()"},
      {"cherry (x) ladder3", cherry, ladder3, true, "(()())"},
      {"cherry (x) cherry", cherry, cherry, true, "(()()()())"},
  };

  std::ostringstream out;
  out << "# Forest product identities: computed vs. reference display\n";
  out << "# ^ = smash, (x) = tensor; entries are multisets of forest components\n";
  bool any_diff = false;
  for (const auto& r : rows) {
    AModule p = r.is_tensor ? tensor_product(r.lhs, r.rhs)
                            : smash_product(r.lhs, r.rhs);
    std::map<std::string, int> comps;
    for (const auto& c : decompose(p)) comps[module_to_forest(c).enc] += 1;
    std::string computed;
    for (const auto& [enc, n] : comps) {
      if (!computed.empty()) computed += " + ";
      if (n != 1) computed += std::to_string(n) + "*";
      computed += enc;
    }
    if (computed.empty()) computed = "0";
    bool match = computed == r.reference;
    if (!match) any_diff = true;
    out << r.label << "\n";
    out << "  computed:  " << computed << "\n";
    out << "  reference: " << r.reference << "\n";
    out << "  " << (match ? "MATCH" : "DIFFERS") << "\n";
  }
  if (any_diff)
    out << "# Computed values follow the printed definitions (diagonal smash\n"
           "# action; literal tensor congruence including zero instances) and\n"
           "# agree with the brute-force oracles in the test suite; rows\n"
           "# marked DIFFERS disagree with the reference display itself.\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f1hall: Hall algebras of finite semigroup representations over F1"};
  app.require_subcommand(1);

  std::string spec_text, format = "json", cache_path, module_text, left_text,
              right_text, forest_text, group_name = "z2", filter_text = "all";
  int max_dim = 4, dim = 1, max_vertices = 5;
  long seed = 0;
  bool extended = false;
  std::string kind_text = "smash";

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec) sub->add_option("--spec", spec_text, "semigroup spec")->required();
    sub->add_option("--cache", cache_path, "JSON cache file");
    sub->add_option("--format", format, "json|csv|md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--max-dim", max_dim, "dimension bound");
    sub->add_option("--seed", seed, "RNG seed (reserved for randomized modes)");
    return sub;
  };

  auto* c_enumerate = add_common(app.add_subcommand("enumerate", "isomorphism classes of a given dimension"), true);
  c_enumerate->add_option("--dim", dim, "dimension")->required();
  c_enumerate->add_option("--filter", filter_text, "all|indecomposable|nilpotent");
  auto* c_decompose = add_common(app.add_subcommand("decompose", "split a module into indecomposables"), true);
  c_decompose->add_option("--module", module_text)->required();
  auto* c_submodules = add_common(app.add_subcommand("submodules", "list submodules with sub/quotient classes"), true);
  c_submodules->add_option("--module", module_text)->required();
  auto* c_product = add_common(app.add_subcommand("product", "Hall product of two classes"), true);
  c_product->add_option("--left", left_text)->required();
  c_product->add_option("--right", right_text)->required();
  auto* c_coproduct = add_common(app.add_subcommand("coproduct", "coproduct of a class"), true);
  c_coproduct->add_option("--module", module_text)->required();
  auto* c_antipode = add_common(app.add_subcommand("antipode", "antipode of a class"), true);
  c_antipode->add_option("--module", module_text)->required();
  auto* c_bracket = add_common(app.add_subcommand("bracket", "Lie bracket of two indecomposable classes"), true);
  c_bracket->add_option("--left", left_text)->required();
  c_bracket->add_option("--right", right_text)->required();
  add_common(app.add_subcommand("table", "multiplication table of a finite spec"), true);
  add_common(app.add_subcommand("axioms", "Hopf axiom suite up to --max-dim"), true);
  add_common(app.add_subcommand("pbw", "PBW basis rank check up to --max-dim"), true);
  auto* c_k0 = add_common(app.add_subcommand("k0", "truncated K0 presentation"), true);
  c_k0->add_option("--filter", filter_text, "all|indecomposable|nilpotent");
  auto* c_classify = add_common(app.add_subcommand("classify", "structure of an indecomposable module"), true);
  c_classify->add_option("--module", module_text)->required();
  auto* c_cuts = add_common(app.add_subcommand("cuts", "admissible cuts of a forest"), false);
  c_cuts->add_option("--forest", forest_text)->required();
  c_cuts->add_flag("--extended", extended, "include whole-tree prunes");
  auto* c_kreimer = add_common(app.add_subcommand("kreimer", "cut coproduct of a forest"), false);
  c_kreimer->add_option("--forest", forest_text)->required();
  auto* c_duality = add_common(app.add_subcommand("duality", "cut coproduct vs Hall numbers"), false);
  c_duality->add_option("--max-vertices", max_vertices);
  for (const char* name : {"smash", "tensor", "cartesian"}) {
    auto* c = add_common(app.add_subcommand(name, std::string(name) + " product of two modules"), true);
    c->add_option("--left", left_text)->required();
    c->add_option("--right", right_text)->required();
  }
  auto* c_reptable = add_common(app.add_subcommand("reptable", "products of indecomposables up to --max-dim"), true);
  c_reptable->add_option("--kind", kind_text, "smash|tensor|cartesian");
  auto* c_burnside = add_common(app.add_subcommand("burnside", "Burnside ring table of a finite group"), false);
  c_burnside->add_option("--group", group_name, "trivial|zN|sN (N<=4)");
  add_common(app.add_subcommand("paper-examples", "forest product identities vs reference displays"), false);
  app.add_subcommand("cache-info", "summarize a cache file")
      ->add_option("--cache", cache_path, "JSON cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Cache cache(cache_path);
  CLI::App* sub = app.get_subcommands().front();
  const std::string& cmd = sub->get_name();

  // Cache key: the full normalized argument list of this invocation.
  std::ostringstream inputs;
  inputs << spec_text << "|" << format << "|" << module_text << "|" << left_text
         << "|" << right_text << "|" << forest_text << "|" << group_name << "|"
         << filter_text << "|" << max_dim << "|" << dim << "|" << max_vertices
         << "|" << extended << "|" << kind_text;

  try {
    std::string out = cache.get_or_compute(cmd, inputs.str(), [&]() -> std::string {
      if (cmd == "enumerate") {
        auto spec = parse_spec_arg(spec_text);
        Json j = enumerate_modules(spec, dim, parse_filter(filter_text));
        return dump(j);
      }
      if (cmd == "decompose") {
        auto spec = parse_spec_arg(spec_text);
        return dump(module_summary(parse_module_arg(spec, module_text)));
      }
      if (cmd == "submodules") {
        auto spec = parse_spec_arg(spec_text);
        AModule m = parse_module_arg(spec, module_text);
        Json j = Json::array();
        for (SubsetMask s : submodules(m)) {
          Json row;
          row["mask"] = s;
          row["sub"] = canonical_key(sub_module(m, s));
          row["quotient"] = canonical_key(quotient(m, s));
          j.push_back(std::move(row));
        }
        return dump(j);
      }
      if (cmd == "product") {
        auto spec = parse_spec_arg(spec_text);
        auto l = hall_delta(spec, canonical_key(parse_module_arg(spec, left_text)));
        auto r = hall_delta(spec, canonical_key(parse_module_arg(spec, right_text)));
        return dump(hall_to_json(hall_product(l, r)));
      }
      if (cmd == "coproduct") {
        auto spec = parse_spec_arg(spec_text);
        auto d = hall_delta(spec, canonical_key(parse_module_arg(spec, module_text)));
        return dump(tensor_to_json(coproduct(d)));
      }
      if (cmd == "antipode") {
        auto spec = parse_spec_arg(spec_text);
        auto d = hall_delta(spec, canonical_key(parse_module_arg(spec, module_text)));
        return dump(hall_to_json(antipode(d)));
      }
      if (cmd == "bracket") {
        auto spec = parse_spec_arg(spec_text);
        return dump(hall_to_json(lie_bracket(
            spec, canonical_key(parse_module_arg(spec, left_text)),
            canonical_key(parse_module_arg(spec, right_text)))));
      }
      if (cmd == "table") {
        auto spec = parse_spec_arg(spec_text);
        return spec_table_output(*spec, format);
      }
      if (cmd == "axioms") {
        auto spec = parse_spec_arg(spec_text);
        return dump(report_to_json(verify_hopf_axioms(spec, max_dim)));
      }
      if (cmd == "pbw") {
        auto spec = parse_spec_arg(spec_text);
        return dump(report_to_json(verify_pbw(spec, max_dim)));
      }
      if (cmd == "k0") {
        auto spec = parse_spec_arg(spec_text);
        return dump(k0_to_json(k0_truncated(spec, max_dim, parse_filter(filter_text))));
      }
      if (cmd == "classify") {
        auto spec = parse_spec_arg(spec_text);
        Classification c = classify(parse_module_arg(spec, module_text));
        Json j;
        if (c.kind == Classification::NilpotentTree) {
          j["kind"] = "nilpotent-tree";
          j["height"] = c.height;
        } else {
          j["kind"] = "cycle-with-trees";
          j["cycle_length"] = c.cycle_length;
          j["attached_trees"] = c.attached_trees;
        }
        return dump(j);
      }
      if (cmd == "cuts") {
        Forest f = parse_forest_arg(forest_text);
        auto cuts = extended ? admissible_cuts_extended(f) : admissible_cuts(f);
        Json j = Json::array();
        for (const auto& c : cuts) {
          auto [lf, rt] = apply_cut(c);
          Json row;
          row["edges"] = c.edge_children;
          row["lf"] = lf.enc;
          row["rt"] = rt.enc;
          j.push_back(std::move(row));
        }
        return dump(j);
      }
      if (cmd == "kreimer") {
        Forest f = parse_forest_arg(forest_text);
        return dump(forest_tensor_to_json(kreimer_coproduct(f)));
      }
      if (cmd == "duality") {
        return dump(report_to_json(verify_duality(max_vertices)));
      }
      if (cmd == "smash" || cmd == "tensor" || cmd == "cartesian") {
        auto spec = parse_spec_arg(spec_text);
        AModule l = parse_module_arg(spec, left_text);
        AModule r = parse_module_arg(spec, right_text);
        AModule p = cmd == "smash"    ? smash_product(l, r)
                    : cmd == "tensor" ? tensor_product(l, r)
                                      : cartesian_product(l, r);
        return dump(module_summary(p));
      }
      if (cmd == "reptable") {
        auto spec = parse_spec_arg(spec_text);
        RepProductKind kind = kind_text == "smash"    ? RepProductKind::Smash
                              : kind_text == "tensor" ? RepProductKind::Tensor
                              : kind_text == "cartesian"
                                  ? RepProductKind::Cartesian
                                  : throw UsageError("bad --kind: " + kind_text);
        std::vector<IsoKey> basis;
        for (int d = 1; d <= max_dim; ++d)
          for (const auto& k : enumerate_modules(spec, d, ModuleFilter::Indecomposable))
            basis.push_back(k);
        Json j = Json::array();
        for (const auto& a : basis)
          for (const auto& b : basis) {
            Json row;
            row["left"] = a;
            row["right"] = b;
            row["product"] = rep_to_json(
                rep_product(spec, RepElement{{a, 1}}, RepElement{{b, 1}}, kind));
            j.push_back(std::move(row));
          }
        return dump(j);
      }
      if (cmd == "burnside") {
        GroupTable g = parse_group_name(group_name);
        auto spec = build_group_with_zero(g.names, g.table);
        BurnsideTable t = burnside_table(g, spec);
        if (format == "csv") return burnside_to_csv(t);
        if (format == "md") return burnside_to_md(t);
        return dump(burnside_to_json(t));
      }
      if (cmd == "paper-examples") {
        return paper_examples_output();
      }
      if (cmd == "cache-info") {
        Json j;
        j["path"] = cache_path;
        j["version"] = kCacheVersion;
        j["entries"] = cache.entries().size();
        return dump(j);
      }
      throw std::runtime_error("unhandled command: " + cmd);
    });
    std::cout << out;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
