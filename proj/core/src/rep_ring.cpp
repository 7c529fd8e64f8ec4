#include "f1hall/rep_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace f1hall {

namespace {

void require_same_spec(const AModule& a, const AModule& b) {
  if (a.spec->fingerprint != b.spec->fingerprint)
    throw std::invalid_argument("modules live over different semigroups");
}

}  // namespace

AModule cartesian_product(const AModule& a, const AModule& b) {
  require_same_spec(a, b);
  const int d1 = a.dim, d2 = b.dim;
  // Carrier: pairs over (M u *) x (N u *) minus (*,*).
  std::vector<std::pair<int, int>> elems;
  std::vector<std::vector<int>> index(d1 + 1, std::vector<int>(d2 + 1, 0));
  for (int x = 0; x <= d1; ++x)
    for (int y = 0; y <= d2; ++y) {
      if (x == 0 && y == 0) continue;
      elems.emplace_back(x, y);
      index[x][y] = static_cast<int>(elems.size());
    }
  const int g = a.spec->num_generators();
  std::vector<std::vector<int>> rows(g, std::vector<int>(elems.size() + 1, 0));
  for (int gi = 0; gi < g; ++gi)
    for (size_t e = 0; e < elems.size(); ++e) {
      auto [x, y] = elems[e];
      int xr = x == 0 ? 0 : a.rows[gi][x];
      int yr = y == 0 ? 0 : b.rows[gi][y];
      rows[gi][e + 1] = (xr == 0 && yr == 0) ? 0 : index[xr][yr];
    }
  return validate_module(a.spec, std::move(rows));
}

AModule smash_product(const AModule& a, const AModule& b) {
  require_same_spec(a, b);
  const int d1 = a.dim, d2 = b.dim;
  auto idx = [d2](int x, int y) { return (x == 0 || y == 0) ? 0 : (x - 1) * d2 + y; };
  const int g = a.spec->num_generators();
  std::vector<std::vector<int>> rows(g, std::vector<int>(d1 * d2 + 1, 0));
  for (int gi = 0; gi < g; ++gi)
    for (int x = 1; x <= d1; ++x)
      for (int y = 1; y <= d2; ++y)
        rows[gi][idx(x, y)] = idx(a.rows[gi][x], b.rows[gi][y]);
  return validate_module(a.spec, std::move(rows));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);  // keep 0 (the basepoint) as its own root
    parent[y] = x;
    return true;
  }
};

}  // namespace

AModule tensor_product(const AModule& a, const AModule& b) {
  require_same_spec(a, b);
  if (!a.spec->commutative)
    throw std::invalid_argument("tensor product needs a commutative semigroup");
  const int d1 = a.dim, d2 = b.dim;
  const int g = a.spec->num_generators();
  auto idx = [d2](int x, int y) { return (x == 0 || y == 0) ? 0 : (x - 1) * d2 + y; };

  UnionFind uf(d1 * d2 + 1);
  // Generator instances of a.m ^ n ~ m ^ a.n.
  for (int gi = 0; gi < g; ++gi)
    for (int x = 1; x <= d1; ++x)
      for (int y = 1; y <= d2; ++y)
        uf.unite(idx(a.rows[gi][x], y), idx(x, b.rows[gi][y]));

  // Saturate so the left-slot action descends to classes: u ~ v forces
  // g.u ~ g.v.
  auto act = [&](int gi, int e) {
    if (e == 0) return 0;
    int x = (e - 1) / d2 + 1, y = (e - 1) % d2 + 1;
    return idx(a.rows[gi][x], y);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 1; u <= d1 * d2; ++u) {
      int v = uf.find(u);
      if (v == u) continue;
      for (int gi = 0; gi < g; ++gi)
        if (uf.unite(act(gi, u), act(gi, v))) changed = true;
    }
  }

  std::vector<int> rep_index(d1 * d2 + 1, -1);
  rep_index[0] = 0;
  std::vector<int> reps;
  for (int e = 1; e <= d1 * d2; ++e)
    if (uf.find(e) == e) {
      reps.push_back(e);
      rep_index[e] = static_cast<int>(reps.size());
    }
  std::vector<std::vector<int>> rows(g, std::vector<int>(reps.size() + 1, 0));
  for (int gi = 0; gi < g; ++gi)
    for (size_t r = 0; r < reps.size(); ++r)
      rows[gi][r + 1] = rep_index[uf.find(act(gi, reps[r]))];
  return validate_module(a.spec, std::move(rows));
}

RepElement decompose_classes(const AModule& m) {
  RepElement out;
  for (const auto& c : decompose(m)) out[canonical_key(c)] += 1;
  return out;
}

RepElement rep_add(const RepElement& a, const RepElement& b) {
  RepElement out = a;
  for (const auto& [k, c] : b) {
    out[k] += c;
    if (out[k] == 0) out.erase(k);
  }
  return out;
}

RepElement rep_product(SpecPtr spec, const RepElement& a, const RepElement& b,
                       RepProductKind kind) {
  RepElement out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      AModule ma = module_from_key(spec, ka);
      AModule mb = module_from_key(spec, kb);
      AModule p = kind == RepProductKind::Smash     ? smash_product(ma, mb)
                  : kind == RepProductKind::Tensor  ? tensor_product(ma, mb)
                                                    : cartesian_product(ma, mb);
      for (const auto& [k, c] : decompose_classes(p)) {
        out[k] += ca * cb * c;
        if (out[k] == 0) out.erase(k);
      }
    }
  return out;
}

std::string rep_to_string(const RepElement& e) {
  if (e.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : e) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c.str() << "*";
    out << "[" << k << "]";
  }
  return out.str();
}

Report verify_rep_ring(SpecPtr spec, RepProductKind kind, int max_dim) {
  Report report;
  report.title = kind == RepProductKind::Smash      ? "smash-ring"
                 : kind == RepProductKind::Tensor   ? "tensor-ring"
                                                    : "cartesian-ring";
  auto mul = [&](const AModule& x, const AModule& y) {
    return kind == RepProductKind::Smash     ? smash_product(x, y)
           : kind == RepProductKind::Tensor  ? tensor_product(x, y)
                                             : cartesian_product(x, y);
  };
  std::vector<AModule> mods;
  for (int d = 1; d <= max_dim; ++d)
    for (const auto& k : enumerate_modules(spec, d, ModuleFilter::All))
      mods.push_back(module_from_key(spec, k));

  {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < mods.size() && pass; ++i)
      for (size_t j = i; j < mods.size() && pass; ++j)
        if (decompose_classes(mul(mods[i], mods[j])) !=
            decompose_classes(mul(mods[j], mods[i]))) {
          pass = false;
          witness = canonical_key(mods[i]) + " , " + canonical_key(mods[j]);
        }
    report.add("commutative", pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    // Triples get expensive; cap the sample.
    size_t cap = std::min<size_t>(mods.size(), 8);
    for (size_t i = 0; i < cap && pass; ++i)
      for (size_t j = 0; j < cap && pass; ++j)
        for (size_t k = 0; k < cap && pass; ++k)
          if (decompose_classes(mul(mul(mods[i], mods[j]), mods[k])) !=
              decompose_classes(mul(mods[i], mul(mods[j], mods[k])))) {
            pass = false;
            witness = canonical_key(mods[i]) + " , " + canonical_key(mods[j]) +
                      " , " + canonical_key(mods[k]);
          }
    report.add("associative", pass, witness);
  }
  if (kind != RepProductKind::Cartesian) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < mods.size() && pass; ++i)
      for (size_t j = 0; j < mods.size() && pass; ++j)
        for (size_t k = 0; k < std::min<size_t>(mods.size(), 6) && pass; ++k)
          if (decompose_classes(mul(direct_sum(mods[i], mods[j]), mods[k])) !=
              rep_add(decompose_classes(mul(mods[i], mods[k])),
                      decompose_classes(mul(mods[j], mods[k])))) {
            pass = false;
            witness = canonical_key(mods[i]) + " , " + canonical_key(mods[j]) +
                      " , " + canonical_key(mods[k]);
          }
    report.add("distributes-over-sum", pass, witness);
  }
  return report;
}

}  // namespace f1hall
