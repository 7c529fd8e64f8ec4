#include "f1hall/forest.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace f1hall {

namespace {

void require_single_generator(const AModule& m) {
  if (m.spec->num_generators() != 1)
    throw std::invalid_argument("operation needs a single-generator spec");
}

// Vertices lying on cycles of the functional graph, in orbit order starting
// from the smallest cycle vertex of each component.
std::vector<int> cycle_vertices(const AModule& m) {
  const auto& t = m.rows[0];
  std::vector<bool> on_cycle(m.dim + 1, false);
  for (int v = 1; v <= m.dim; ++v) {
    int x = v;
    for (int step = 0; step <= m.dim && x != 0; ++step) x = t[x];
    if (x != 0) continue;  // unreachable; x==0 means v drains to basepoint
  }
  // A vertex is on a cycle iff following t for dim steps never hits 0 and
  // returns to it eventually.
  for (int v = 1; v <= m.dim; ++v) {
    int x = v;
    bool dead = false;
    for (int step = 0; step < m.dim; ++step) {
      x = t[x];
      if (x == 0) {
        dead = true;
        break;
      }
    }
    if (!dead) {
      // x now lies on a cycle; walk it.
      int start = x;
      do {
        on_cycle[x] = true;
        x = t[x];
      } while (x != start);
    }
  }
  std::vector<int> out;
  std::vector<bool> seen(m.dim + 1, false);
  for (int v = 1; v <= m.dim; ++v) {
    if (!on_cycle[v] || seen[v]) continue;
    int x = v;
    do {
      out.push_back(x);
      seen[x] = true;
      x = t[x];
    } while (x != v);
  }
  return out;
}

std::string encode_subtree(int v, const std::vector<std::vector<int>>& children) {
  std::vector<std::string> parts;
  for (int c : children[v]) parts.push_back(encode_subtree(c, children));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace

ModuleGraph module_to_graph(const AModule& m) {
  require_single_generator(m);
  const auto& t = m.rows[0];
  ModuleGraph g;
  g.vertices = m.dim;
  g.types.assign(m.dim + 1, {0, 0});
  for (int v = 1; v <= m.dim; ++v)
    if (t[v] != 0) {
      g.edges.emplace_back(v, t[v]);
      g.types[v].second += 1;
      g.types[t[v]].first += 1;
    }
  int components = static_cast<int>(decompose(m).size());
  g.h1 = static_cast<int>(g.edges.size()) - g.vertices + components;
  g.cycle = cycle_vertices(m);
  return g;
}

Classification classify(const AModule& m) {
  require_single_generator(m);
  if (!is_indecomposable(m))
    throw std::invalid_argument("classify needs an indecomposable module");
  const auto& t = m.rows[0];
  auto cyc = cycle_vertices(m);
  Classification out;
  if (cyc.empty()) {
    out.kind = Classification::NilpotentTree;
    for (int v = 1; v <= m.dim; ++v) {
      int depth = -1, x = v;
      while (x != 0) {
        x = t[x];
        ++depth;
      }
      out.height = std::max(out.height, depth);
    }
    return out;
  }
  out.kind = Classification::CycleWithTrees;
  out.cycle_length = static_cast<int>(cyc.size());
  std::vector<bool> on_cycle(m.dim + 1, false);
  for (int v : cyc) on_cycle[v] = true;
  std::vector<std::vector<int>> children(m.dim + 1);
  for (int v = 1; v <= m.dim; ++v)
    if (!on_cycle[v] && t[v] != 0) children[t[v]].push_back(v);
  // Attached trees are rooted at the non-cycle children of cycle vertices.
  for (int v : cyc)
    for (int c : children[v]) out.attached_trees.push_back(encode_subtree(c, children));
  std::sort(out.attached_trees.begin(), out.attached_trees.end());
  return out;
}

namespace {

// Recursive descent over "(...)(...)", returning the canonical encoding.
std::string normalize_tree(const std::string& s, size_t& pos, int& vertices) {
  if (pos >= s.size() || s[pos] != '(')
    throw std::invalid_argument("forest text: expected '('");
  ++pos;
  ++vertices;
  std::vector<std::string> parts;
  while (pos < s.size() && s[pos] == '(')
    parts.push_back(normalize_tree(s, pos, vertices));
  if (pos >= s.size() || s[pos] != ')')
    throw std::invalid_argument("forest text: expected ')'");
  ++pos;
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace

Forest parse_forest(const std::string& text) {
  std::vector<std::string> trees;
  int vertices = 0;
  size_t pos = 0;
  while (pos < text.size())
    trees.push_back(normalize_tree(text, pos, vertices));
  std::sort(trees.begin(), trees.end());
  std::string enc;
  for (const auto& t : trees) enc += t;
  return Forest{enc, vertices};
}

Forest module_to_forest(const AModule& m) {
  require_single_generator(m);
  if (!cycle_vertices(m).empty())
    throw std::invalid_argument("module is not nilpotent");
  const auto& t = m.rows[0];
  std::vector<std::vector<int>> children(m.dim + 1);
  std::vector<int> roots;
  for (int v = 1; v <= m.dim; ++v) {
    if (t[v] == 0)
      roots.push_back(v);
    else
      children[t[v]].push_back(v);
  }
  std::vector<std::string> trees;
  for (int r : roots) trees.push_back(encode_subtree(r, children));
  std::sort(trees.begin(), trees.end());
  std::string enc;
  for (const auto& tr : trees) enc += tr;
  return Forest{enc, m.dim};
}

std::vector<int> forest_parents(const Forest& f) {
  std::vector<int> parent(f.vertices + 1, 0);
  std::vector<int> stack;  // current ancestor chain
  int next = 0;
  for (char c : f.enc) {
    if (c == '(') {
      ++next;
      parent[next] = stack.empty() ? 0 : stack.back();
      stack.push_back(next);
    } else {
      stack.pop_back();
    }
  }
  return parent;
}

AModule forest_to_module(SpecPtr spec, const Forest& f) {
  if (spec->num_generators() != 1)
    throw std::invalid_argument("forest modules need a single-generator spec");
  auto parent = forest_parents(f);
  std::vector<std::vector<int>> rows(1, std::vector<int>(f.vertices + 1, 0));
  for (int v = 1; v <= f.vertices; ++v) rows[0][v] = parent[v];
  return validate_module(std::move(spec), std::move(rows));
}

namespace {

bool is_weak_ancestor(const std::vector<int>& parent, int u, int w) {
  // true iff u lies on the path w -> root (including w itself)
  for (int x = w; x != 0; x = parent[x])
    if (x == u) return true;
  return false;
}

std::vector<Cut> cuts_impl(const Forest& f, bool include_roots) {
  auto parent = forest_parents(f);
  std::vector<int> candidates;
  for (int v = 1; v <= f.vertices; ++v)
    if (include_roots || parent[v] != 0) candidates.push_back(v);

  std::vector<Cut> out;
  const size_t k = candidates.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> chosen;
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) chosen.push_back(candidates[i]);
    bool ok = true;
    for (size_t i = 0; i < chosen.size() && ok; ++i)
      for (size_t j = 0; j < chosen.size() && ok; ++j)
        if (i != j && is_weak_ancestor(parent, chosen[i], chosen[j])) ok = false;
    if (ok) out.push_back(Cut{f, std::move(chosen)});
  }
  std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
    return a.edge_children.size() != b.edge_children.size()
               ? a.edge_children.size() < b.edge_children.size()
               : a.edge_children < b.edge_children;
  });
  return out;
}

}  // namespace

std::vector<Cut> admissible_cuts(const Forest& f) { return cuts_impl(f, false); }

std::vector<Cut> admissible_cuts_extended(const Forest& f) {
  return cuts_impl(f, true);
}

std::pair<Forest, Forest> apply_cut(const Cut& c) {
  auto parent = forest_parents(c.host);
  const int n = c.host.vertices;
  std::vector<std::vector<int>> children(n + 1);
  std::vector<int> roots;
  for (int v = 1; v <= n; ++v) {
    if (parent[v] == 0)
      roots.push_back(v);
    else
      children[parent[v]].push_back(v);
  }
  std::vector<bool> pruned_root(n + 1, false);
  for (int v : c.edge_children) pruned_root[v] = true;

  std::function<std::string(int)> enc_skip = [&](int v) -> std::string {
    std::vector<std::string> parts;
    for (int ch : children[v])
      if (!pruned_root[ch]) parts.push_back(enc_skip(ch));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
  };

  std::vector<std::string> lf_trees;
  int lf_vertices = 0;
  for (int v : c.edge_children) {
    // The subtree below a cut edge is intact: admissibility forbids a
    // second cut edge on the same path.
    std::string enc = encode_subtree(v, children);
    lf_vertices += static_cast<int>(std::count(enc.begin(), enc.end(), '('));
    lf_trees.push_back(std::move(enc));
  }
  std::sort(lf_trees.begin(), lf_trees.end());
  std::string lf;
  for (const auto& t : lf_trees) lf += t;

  std::vector<std::string> rt_trees;
  for (int r : roots)
    if (!pruned_root[r]) rt_trees.push_back(enc_skip(r));
  std::sort(rt_trees.begin(), rt_trees.end());
  std::string rt;
  for (const auto& t : rt_trees) rt += t;

  return {Forest{lf, lf_vertices}, Forest{rt, n - lf_vertices}};
}

std::vector<SimpleCut> simple_cuts(const AModule& m) {
  require_single_generator(m);
  if (!is_indecomposable(m))
    throw std::invalid_argument("simple_cuts needs an indecomposable module");
  const auto& t = m.rows[0];
  auto cyc = cycle_vertices(m);
  std::vector<bool> on_cycle(m.dim + 1, false);
  for (int v : cyc) on_cycle[v] = true;

  std::vector<SimpleCut> out;
  for (int u = 1; u <= m.dim; ++u) {
    if (t[u] == 0 || on_cycle[u]) continue;  // cycle edges are never cut
    // Lf = everything whose forward orbit passes through u, including u.
    SubsetMask lf = 0;
    for (int z = 1; z <= m.dim; ++z) {
      int x = z;
      for (int step = 0; step <= m.dim; ++step) {
        if (x == u) {
          lf |= 1u << (z - 1);
          break;
        }
        x = t[x];
        if (x == 0) break;
      }
    }
    SubsetMask full = m.dim == 0 ? 0u : ((1u << m.dim) - 1u);
    out.push_back(SimpleCut{u, static_cast<SubsetMask>(full & ~lf), lf});
  }
  return out;
}

ForestTensor kreimer_coproduct(const Forest& f) {
  ForestTensor out;
  for (const auto& cut : admissible_cuts_extended(f)) {
    auto [lf, rt] = apply_cut(cut);
    out[{lf.enc, rt.enc}] += 1;
  }
  return out;
}

namespace {

std::vector<std::vector<std::string>>& tree_cache() {
  static std::vector<std::vector<std::string>> cache{{" "}};  // [0] unused
  return cache;
}

void gen_forests(int n, const std::string& min_enc, std::vector<std::string>& stack,
                 std::vector<std::string>& out);

void ensure_trees(int n) {
  auto& cache = tree_cache();
  for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
    std::vector<std::string> trees;
    if (k == 1) {
      trees.push_back("()");
    } else {
      for (const auto& f : rooted_forests(k - 1)) trees.push_back("(" + f + ")");
    }
    std::sort(trees.begin(), trees.end());
    cache.push_back(std::move(trees));
  }
}

void gen_forests(int n, const std::string& min_enc, std::vector<std::string>& stack,
                 std::vector<std::string>& out) {
  if (n == 0) {
    std::string enc;
    for (const auto& t : stack) enc += t;
    out.push_back(std::move(enc));
    return;
  }
  for (int k = 1; k <= n; ++k)
    for (const auto& t : tree_cache()[k]) {
      if (t < min_enc) continue;  // keep trees sorted within the forest
      stack.push_back(t);
      gen_forests(n - k, t, stack, out);
      stack.pop_back();
    }
}

}  // namespace

std::vector<std::string> rooted_trees(int n) {
  if (n < 1) return {};
  ensure_trees(n);
  return tree_cache()[n];
}

std::vector<std::string> rooted_forests(int n) {
  if (n == 0) return {""};
  ensure_trees(n);
  std::vector<std::string> out;
  std::vector<std::string> stack;
  gen_forests(n, "", stack, out);
  std::sort(out.begin(), out.end());
  return out;
}

Report verify_duality(int max_vertices) {
  Report report;
  report.title = "kreimer-duality";
  // Convention under test: Rt (right tensor factor) is the submodule, Lf
  // (left factor) the quotient.
  auto spec = build_free_monoid(1);
  for (int n = 1; n <= max_vertices; ++n) {
    bool pass = true;
    std::string witness;
    int pairs = 0;
    for (const auto& enc : rooted_forests(n)) {
      Forest f{enc, n};
      AModule r = forest_to_module(spec, f);
      ForestTensor from_cuts = kreimer_coproduct(f);
      ForestTensor from_submodules;
      for (SubsetMask s : submodules(r)) {
        Forest sub = module_to_forest(sub_module(r, s));
        Forest quot = module_to_forest(quotient(r, s));
        from_submodules[{quot.enc, sub.enc}] += 1;
      }
      pairs += static_cast<int>(from_submodules.size());
      if (from_cuts != from_submodules) {
        pass = false;
        witness = enc;
        break;
      }
    }
    std::ostringstream name;
    name << "vertices=" << n << " (" << rooted_forests(n).size() << " forests, "
         << pairs << " coefficient checks)";
    report.add(name.str(), pass, witness);
  }
  return report;
}

}  // namespace f1hall
