#include "f1hall/hall.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace f1hall {

namespace {

void prune(std::map<IsoKey, Rational>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
}

void prune(std::map<std::pair<IsoKey, IsoKey>, Rational>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
}

void require_same_spec(const HallElement& a, const HallElement& b) {
  if (a.spec->fingerprint != b.spec->fingerprint)
    throw std::invalid_argument("elements live over different specs");
}

}  // namespace

HallElement hall_delta(SpecPtr spec, const IsoKey& key) {
  HallElement out{std::move(spec), {}};
  out.coeffs[key] = 1;
  return out;
}

HallElement hall_zero(SpecPtr spec) { return HallElement{std::move(spec), {}}; }

HallElement hall_add(const HallElement& a, const HallElement& b) {
  require_same_spec(a, b);
  HallElement out = a;
  for (const auto& [k, c] : b.coeffs) out.coeffs[k] += c;
  prune(out.coeffs);
  return out;
}

HallElement hall_scale(const HallElement& a, const Rational& c) {
  HallElement out{a.spec, {}};
  if (c == 0) return out;
  for (const auto& [k, v] : a.coeffs) out.coeffs[k] = v * c;
  return out;
}

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a;
  for (const auto& [k, c] : b.coeffs) out.coeffs[k] += c;
  prune(out.coeffs);
  return out;
}

TensorElement tensor_scale(const TensorElement& a, const Rational& c) {
  TensorElement out{a.spec, {}};
  if (c == 0) return out;
  for (const auto& [k, v] : a.coeffs) out.coeffs[k] = v * c;
  return out;
}

Int hall_number(const AModule& r, const AModule& m, const AModule& n) {
  if (r.spec->fingerprint != m.spec->fingerprint ||
      r.spec->fingerprint != n.spec->fingerprint)
    throw std::invalid_argument("hall_number across different specs");
  if (m.dim + n.dim != r.dim) return 0;
  const IsoKey key_m = canonical_key(m);
  const IsoKey key_n = canonical_key(n);
  Int count = 0;
  for (SubsetMask s : submodules(r)) {
    if (__builtin_popcount(s) != n.dim) continue;
    if (canonical_key(sub_module(r, s)) == key_n &&
        canonical_key(quotient(r, s)) == key_m)
      ++count;
  }
  return count;
}

namespace {

std::mutex g_product_mutex;
std::map<std::tuple<std::string, IsoKey, IsoKey>, std::map<IsoKey, Int>>
    g_product_cache;

}  // namespace

std::map<IsoKey, Int> delta_product(SpecPtr spec, const IsoKey& m, const IsoKey& n) {
  const auto cache_key = std::make_tuple(spec->fingerprint, m, n);
  {
    std::lock_guard<std::mutex> lock(g_product_mutex);
    auto it = g_product_cache.find(cache_key);
    if (it != g_product_cache.end()) return it->second;
  }
  AModule mm = module_from_key(spec, m);
  AModule nn = module_from_key(spec, n);
  std::map<IsoKey, Int> out;
  for (const auto& ext : enumerate_extensions(mm, nn)) {
    Int c = hall_number(ext.total, mm, nn);
    if (c != 0) out[canonical_key(ext.total)] = c;
  }
  std::lock_guard<std::mutex> lock(g_product_mutex);
  g_product_cache.emplace(cache_key, out);
  return out;
}

HallElement hall_product(const HallElement& a, const HallElement& b) {
  require_same_spec(a, b);
  HallElement out{a.spec, {}};
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs)
      for (const auto& [kr, n] : delta_product(a.spec, ka, kb))
        out.coeffs[kr] += ca * cb * Rational(n);
  prune(out.coeffs);
  return out;
}

namespace {

// Ordered splits of the indecomposable multiset of `key`, each with
// coefficient 1 (indicator convention).
std::vector<std::pair<IsoKey, IsoKey>> key_splits(const IsoKey& key) {
  auto comps = key_components(key);
  std::map<IsoKey, int> mult;
  for (const auto& c : comps) ++mult[c];
  std::vector<std::pair<IsoKey, int>> distinct(mult.begin(), mult.end());

  std::vector<std::pair<IsoKey, IsoKey>> out;
  std::vector<int> take(distinct.size(), 0);
  while (true) {
    std::vector<IsoKey> left, right;
    for (size_t i = 0; i < distinct.size(); ++i) {
      for (int j = 0; j < take[i]; ++j) left.push_back(distinct[i].first);
      for (int j = take[i]; j < distinct[i].second; ++j)
        right.push_back(distinct[i].first);
    }
    out.emplace_back(join_components(std::move(left)),
                     join_components(std::move(right)));
    size_t p = 0;
    while (p < distinct.size() && take[p] == distinct[p].second) take[p++] = 0;
    if (p == distinct.size()) break;
    ++take[p];
  }
  return out;
}

}  // namespace

TensorElement coproduct(const HallElement& a) {
  TensorElement out{a.spec, {}};
  for (const auto& [key, c] : a.coeffs)
    for (const auto& [l, r] : key_splits(key)) out.coeffs[{l, r}] += c;
  prune(out.coeffs);
  return out;
}

Rational counit(const HallElement& a) {
  auto it = a.coeffs.find("0|");
  return it == a.coeffs.end() ? Rational(0) : it->second;
}

namespace {

std::mutex g_antipode_mutex;
std::map<std::pair<std::string, IsoKey>, std::map<IsoKey, Rational>> g_antipode_cache;

std::map<IsoKey, Rational> antipode_delta(SpecPtr spec, const IsoKey& key);

std::map<IsoKey, Rational> antipode_delta_impl(SpecPtr spec, const IsoKey& key) {
  std::map<IsoKey, Rational> out;
  if (key == "0|") {
    out[key] = 1;
    return out;
  }
  // S(x) = -x - sum S(x') * x'' over the reduced coproduct.
  out[key] = -1;
  for (const auto& [l, r] : key_splits(key)) {
    if (l == "0|" || r == "0|") continue;
    auto sl = antipode_delta(spec, l);
    for (const auto& [k1, c1] : sl)
      for (const auto& [k2, n] : delta_product(spec, k1, r))
        out[k2] -= c1 * Rational(n);
  }
  prune(out);
  return out;
}

std::map<IsoKey, Rational> antipode_delta(SpecPtr spec, const IsoKey& key) {
  const auto cache_key = std::make_pair(spec->fingerprint, key);
  {
    std::lock_guard<std::mutex> lock(g_antipode_mutex);
    auto it = g_antipode_cache.find(cache_key);
    if (it != g_antipode_cache.end()) return it->second;
  }
  auto out = antipode_delta_impl(spec, key);
  std::lock_guard<std::mutex> lock(g_antipode_mutex);
  g_antipode_cache.emplace(cache_key, out);
  return out;
}

}  // namespace

HallElement antipode(const HallElement& a) {
  HallElement out{a.spec, {}};
  for (const auto& [key, c] : a.coeffs)
    for (const auto& [k, s] : antipode_delta(a.spec, key)) out.coeffs[k] += c * s;
  prune(out.coeffs);
  return out;
}

HallElement lie_bracket(SpecPtr spec, const IsoKey& m, const IsoKey& n) {
  if (!key_is_indecomposable(m) || !key_is_indecomposable(n))
    throw std::invalid_argument("lie_bracket needs indecomposable classes");
  HallElement out{spec, {}};
  for (const auto& [k, c] : delta_product(spec, m, n)) out.coeffs[k] += Rational(c);
  for (const auto& [k, c] : delta_product(spec, n, m)) out.coeffs[k] -= Rational(c);
  prune(out.coeffs);
  return out;
}

namespace {

using Triple = std::tuple<IsoKey, IsoKey, IsoKey>;
using TripleTensor = std::map<Triple, Rational>;

TripleTensor expand_left(const TensorElement& t) {  // (Delta x id)
  TripleTensor out;
  for (const auto& [lr, c] : t.coeffs)
    for (const auto& [a, b] : key_splits(lr.first)) {
      out[{a, b, lr.second}] += c;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

TripleTensor expand_right(const TensorElement& t) {  // (id x Delta)
  TripleTensor out;
  for (const auto& [lr, c] : t.coeffs)
    for (const auto& [a, b] : key_splits(lr.second)) {
      out[{lr.first, a, b}] += c;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  TensorElement out{a.spec, {}};
  for (const auto& [p1, c1] : a.coeffs)
    for (const auto& [p2, c2] : b.coeffs)
      for (const auto& [kl, nl] : delta_product(a.spec, p1.first, p2.first))
        for (const auto& [kr, nr] : delta_product(a.spec, p1.second, p2.second))
          out.coeffs[{kl, kr}] += c1 * c2 * Rational(nl) * Rational(nr);
  prune(out.coeffs);
  return out;
}

std::string show(const HallElement& e) {
  std::ostringstream os;
  for (const auto& [k, c] : e.coeffs) os << c << "*[" << k << "] ";
  return os.str();
}

}  // namespace

Report verify_hopf_axioms(SpecPtr spec, int max_dim) {
  Report report;
  report.title = "hopf-axioms";

  std::vector<std::vector<IsoKey>> by_grade(max_dim + 1);
  for (int d = 0; d <= max_dim; ++d) by_grade[d] = enumerate_modules(spec, d);

  auto delta = [&](const IsoKey& k) { return hall_delta(spec, k); };

  // Associativity over all basis triples with total dim <= max_dim.
  {
    bool pass = true;
    std::string witness;
    for (int da = 1; da <= max_dim - 2 && pass; ++da)
      for (int db = 1; da + db <= max_dim - 1 && pass; ++db)
        for (int dc = 1; da + db + dc <= max_dim && pass; ++dc)
          for (const auto& a : by_grade[da])
            for (const auto& b : by_grade[db])
              for (const auto& c : by_grade[dc]) {
                auto lhs = hall_product(hall_product(delta(a), delta(b)), delta(c));
                auto rhs = hall_product(delta(a), hall_product(delta(b), delta(c)));
                if (lhs.coeffs != rhs.coeffs) {
                  pass = false;
                  witness = "(" + a + ")*(" + b + ")*(" + c + ")";
                  goto assoc_done;
                }
              }
  assoc_done:
    report.add("associativity", pass, witness);
  }

  // Unit: delta at the zero class.
  {
    bool pass = true;
    std::string witness;
    auto unit = delta("0|");
    for (int d = 0; d <= max_dim && pass; ++d)
      for (const auto& k : by_grade[d]) {
        auto x = delta(k);
        if (hall_product(unit, x).coeffs != x.coeffs ||
            hall_product(x, unit).coeffs != x.coeffs) {
          pass = false;
          witness = k;
          break;
        }
      }
    report.add("unit", pass, witness);
  }

  // Coassociativity and cocommutativity on every basis class.
  {
    bool coassoc = true, cocomm = true;
    std::string w1, w2;
    for (int d = 0; d <= max_dim; ++d)
      for (const auto& k : by_grade[d]) {
        auto dx = coproduct(delta(k));
        if (expand_left(dx) != expand_right(dx) && coassoc) {
          coassoc = false;
          w1 = k;
        }
        TensorElement swapped{spec, {}};
        for (const auto& [lr, c] : dx.coeffs)
          swapped.coeffs[{lr.second, lr.first}] += c;
        if (swapped.coeffs != dx.coeffs && cocomm) {
          cocomm = false;
          w2 = k;
        }
      }
    report.add("coassociativity", coassoc, w1);
    report.add("cocommutativity", cocomm, w2);
  }

  // Counit: (eps x id) Delta = id.
  {
    bool pass = true;
    std::string witness;
    for (int d = 0; d <= max_dim && pass; ++d)
      for (const auto& k : by_grade[d]) {
        auto dx = coproduct(delta(k));
        HallElement folded{spec, {}};
        for (const auto& [lr, c] : dx.coeffs)
          if (lr.first == "0|") folded.coeffs[lr.second] += c;
        prune(folded.coeffs);
        if (folded.coeffs != delta(k).coeffs) {
          pass = false;
          witness = k;
          break;
        }
      }
    report.add("counit", pass, witness);
  }

  // Bialgebra compatibility on all pairs with total dim <= max_dim.
  {
    bool pass = true;
    std::string witness;
    for (int da = 1; da <= max_dim - 1 && pass; ++da)
      for (int db = 1; da + db <= max_dim && pass; ++db)
        for (const auto& a : by_grade[da])
          for (const auto& b : by_grade[db]) {
            auto lhs = coproduct(hall_product(delta(a), delta(b)));
            auto rhs = tensor_product(coproduct(delta(a)), coproduct(delta(b)));
            if (lhs.coeffs != rhs.coeffs) {
              pass = false;
              witness = "Delta((" + a + ")*(" + b + "))";
              goto compat_done;
            }
          }
  compat_done:
    report.add("compatibility", pass, witness);
  }

  // Antipode: m (S x id) Delta = unit . counit.
  {
    bool pass = true;
    std::string witness;
    for (int d = 0; d <= max_dim && pass; ++d)
      for (const auto& k : by_grade[d]) {
        auto dx = coproduct(delta(k));
        HallElement acc = hall_zero(spec);
        for (const auto& [lr, c] : dx.coeffs) {
          auto s = antipode(hall_delta(spec, lr.first));
          acc = hall_add(acc, hall_scale(hall_product(s, delta(lr.second)), c));
        }
        HallElement expect = hall_zero(spec);
        if (d == 0) expect = delta("0|");
        if (acc.coeffs != expect.coeffs) {
          pass = false;
          witness = k + " -> " + show(acc);
          break;
        }
      }
    report.add("antipode", pass, witness);
  }
  return report;
}

Report verify_pbw(SpecPtr spec, int max_dim) {
  Report report;
  report.title = "pbw";

  std::vector<std::vector<IsoKey>> indec(max_dim + 1);
  for (int d = 1; d <= max_dim; ++d)
    indec[d] = enumerate_modules(spec, d, ModuleFilter::Indecomposable);
  std::vector<IsoKey> all_indec;
  for (int d = 1; d <= max_dim; ++d)
    all_indec.insert(all_indec.end(), indec[d].begin(), indec[d].end());
  std::sort(all_indec.begin(), all_indec.end());

  for (int grade = 1; grade <= max_dim; ++grade) {
    auto classes = enumerate_modules(spec, grade);
    std::map<IsoKey, int> col;
    for (size_t i = 0; i < classes.size(); ++i) col[classes[i]] = static_cast<int>(i);

    // Non-decreasing sequences (key order) of indecomposables of total
    // dimension `grade`; one monomial per multiset.
    std::vector<std::vector<Rational>> rows;
    std::vector<IsoKey> word;
    std::function<void(size_t, int)> build = [&](size_t start, int remaining) {
      if (remaining == 0) {
        HallElement prod = hall_delta(spec, "0|");
        for (const auto& k : word) prod = hall_product(prod, hall_delta(spec, k));
        std::vector<Rational> row(classes.size(), 0);
        for (const auto& [k, c] : prod.coeffs) row[col.at(k)] = c;
        rows.push_back(std::move(row));
        return;
      }
      for (size_t i = start; i < all_indec.size(); ++i) {
        int d = key_dim(all_indec[i]);
        if (d > remaining) continue;
        word.push_back(all_indec[i]);
        build(i, remaining - d);
        word.pop_back();
      }
    };
    build(0, grade);

    std::ostringstream name;
    name << "grade-" << grade << " span";
    bool square = rows.size() == classes.size();
    int rank = rational_rank(rows);
    bool pass = square && rank == static_cast<int>(classes.size());
    std::ostringstream w;
    if (!pass)
      w << rows.size() << " monomials, " << classes.size() << " classes, rank "
        << rank;
    report.add(name.str(), pass, w.str());
  }
  return report;
}

K0Report k0_truncated(SpecPtr spec, int max_dim, ModuleFilter filter) {
  K0Report out;
  out.truncation_dim = max_dim;
  for (int d = 1; d <= max_dim; ++d)
    for (const auto& k : enumerate_modules(spec, d, filter)) out.classes.push_back(k);
  std::map<IsoKey, int> index;
  for (size_t i = 0; i < out.classes.size(); ++i)
    index[out.classes[i]] = static_cast<int>(i);

  std::set<std::vector<Int>> rows;
  for (const auto& m : out.classes)
    for (const auto& n : out.classes) {
      if (key_dim(m) + key_dim(n) > max_dim) continue;
      AModule mm = module_from_key(spec, m);
      AModule nn = module_from_key(spec, n);
      for (const auto& ext : enumerate_extensions(mm, nn)) {
        IsoKey r = canonical_key(ext.total);
        if (!index.count(r)) continue;  // outside the truncation window
        std::vector<Int> row(out.classes.size(), 0);
        row[index[r]] += 1;
        row[index[m]] -= 1;
        row[index[n]] -= 1;
        bool zero = std::all_of(row.begin(), row.end(),
                                [](const Int& v) { return v == 0; });
        if (!zero) rows.insert(std::move(row));
      }
    }

  std::vector<std::vector<Int>> mat(rows.begin(), rows.end());
  out.relation_rows = static_cast<int>(mat.size());
  out.relation_cols = static_cast<int>(out.classes.size());
  auto diag = smith_normal_form_diagonal(std::move(mat));
  diag.resize(out.classes.size(), 0);
  out.invariant_factors = std::move(diag);
  return out;
}

int rational_rank(std::vector<std::vector<Rational>> mat) {
  if (mat.empty()) return 0;
  const size_t cols = mat[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < mat.size(); ++c) {
    size_t pivot = rank;
    while (pivot < mat.size() && mat[pivot][c] == 0) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[rank], mat[pivot]);
    for (size_t r = 0; r < mat.size(); ++r) {
      if (r == rank || mat[r][c] == 0) continue;
      Rational f = mat[r][c] / mat[rank][c];
      for (size_t j = c; j < cols; ++j) mat[r][j] -= f * mat[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<Int> smith_normal_form_diagonal(std::vector<std::vector<Int>> mat) {
  std::vector<Int> diag;
  if (mat.empty() || mat[0].empty()) return diag;
  size_t rows = mat.size(), cols = mat[0].size();
  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero pivot of minimal absolute value.
    size_t pr = rows, pc = cols;
    Int best = 0;
    for (size_t r = t; r < rows; ++r)
      for (size_t c = t; c < cols; ++c)
        if (mat[r][c] != 0 &&
            (best == 0 || abs(mat[r][c]) < abs(best))) {
          best = mat[r][c];
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(mat[t], mat[pr]);
    for (size_t r = 0; r < rows; ++r) std::swap(mat[r][t], mat[r][pc]);

    bool again = true;
    while (again) {
      again = false;
      for (size_t r = t + 1; r < rows; ++r) {
        if (mat[r][t] == 0) continue;
        Int q = mat[r][t] / mat[t][t];
        for (size_t c = t; c < cols; ++c) mat[r][c] -= q * mat[t][c];
        if (mat[r][t] != 0) {
          std::swap(mat[t], mat[r]);
          again = true;
        }
      }
      for (size_t c = t + 1; c < cols; ++c) {
        if (mat[t][c] == 0) continue;
        Int q = mat[t][c] / mat[t][t];
        for (size_t r = t; r < rows; ++r) mat[r][c] -= q * mat[r][t];
        if (mat[t][c] != 0) {
          for (size_t r = t; r < rows; ++r) std::swap(mat[r][t], mat[r][c]);
          again = true;
        }
      }
    }
    ++t;
  }
  for (size_t i = 0; i < t; ++i) diag.push_back(abs(mat[i][i]));
  diag.resize(std::min(rows, cols), 0);

  // Enforce successive divisibility d_i | d_{i+1}.
  for (size_t i = 0; i + 1 < diag.size() && diag[i] != 0; ++i)
    for (size_t j = i + 1; j < diag.size() && diag[j] != 0; ++j)
      if (diag[j] % diag[i] != 0) {
        Int a = diag[i], b = diag[j];
        Int g = gcd(a, b);
        diag[i] = g;
        diag[j] = a / g * b;
      }
  // Nonzero factors ascending, then the free (zero) entries.
  std::sort(diag.begin(), diag.end(), [](const Int& a, const Int& b) {
    if ((a == 0) != (b == 0)) return b == 0;
    return a < b;
  });
  return diag;
}

}  // namespace f1hall
