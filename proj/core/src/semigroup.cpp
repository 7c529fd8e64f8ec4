#include "f1hall/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "f1hall/group.hpp"

namespace f1hall {

namespace {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Fingerprint of a finite presentation: table structure only, with zero at
// index 0, so the same table re-ingested through a different builder hashes
// identically.
std::string finite_fingerprint(const std::vector<std::vector<int>>& table,
                               int unit_index) {
  std::ostringstream os;
  os << "finite;" << table.size() << ";u=" << unit_index << ";";
  for (const auto& row : table) {
    for (int v : row) os << v << ",";
    os << "|";
  }
  return fnv1a_hex(os.str());
}

void check_table_shape(const std::vector<std::string>& elements,
                       const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(elements.size());
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument("table row count != element count");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("table is not total on elements x elements");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  }
}

void check_associative(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("table is not associative");
}

void check_zero_absorbing(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int a = 0; a < n; ++a)
    if (table[0][a] != 0 || table[a][0] != 0)
      throw std::invalid_argument("element 0 is not absorbing");
}

bool table_commutative(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

// BFS over right multiplication by generators; fills witness words and
// verifies the generators (plus the unit) reach every nonzero element.
void compute_witnesses(SemigroupSpec& spec) {
  const int n = static_cast<int>(spec.elements.size());
  spec.witness.assign(n, Word{});
  std::vector<bool> seen(n, false);
  seen[0] = true;  // zero needs no witness
  std::deque<int> queue;
  if (spec.unit_index >= 0) {
    seen[spec.unit_index] = true;
    queue.push_back(spec.unit_index);
  }
  for (int g = 0; g < spec.num_generators(); ++g) {
    int e = spec.generator_element[g];
    if (!seen[e]) {
      seen[e] = true;
      spec.witness[e] = {g};
      queue.push_back(e);
    }
  }
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int g = 0; g < spec.num_generators(); ++g) {
      int p = spec.table[e][spec.generator_element[g]];
      if (!seen[p]) {
        seen[p] = true;
        spec.witness[p] = spec.witness[e];
        spec.witness[p].push_back(g);
        queue.push_back(p);
      }
    }
  }
  for (int e = 1; e < n; ++e)
    if (!seen[e])
      throw std::invalid_argument("generators fail to generate element '" +
                                  spec.elements[e] + "'");
}

// Generator-pair relations a.b ~ witness(ab), recorded so callers can
// inspect the presentation; module validation uses the full table.
void record_pair_relations(SemigroupSpec& spec) {
  for (int a = 0; a < spec.num_generators(); ++a)
    for (int b = 0; b < spec.num_generators(); ++b) {
      int p = spec.table[spec.generator_element[a]][spec.generator_element[b]];
      Relation r;
      r.lhs = {a, b};
      if (p != 0) r.rhs = spec.witness[p];
      spec.relations.push_back(std::move(r));
    }
}

void finalize_finite(SemigroupSpec& spec) {
  check_table_shape(spec.elements, spec.table);
  check_zero_absorbing(spec.table);
  check_associative(spec.table);
  if (spec.unit_index >= 0) {
    const int n = static_cast<int>(spec.elements.size());
    for (int a = 0; a < n; ++a)
      if (spec.table[spec.unit_index][a] != a || spec.table[a][spec.unit_index] != a)
        throw std::invalid_argument("declared unit is not a two-sided identity");
  }
  compute_witnesses(spec);
  spec.commutative = table_commutative(spec.table);
  spec.fingerprint = finite_fingerprint(spec.table, spec.unit_index);
}

}  // namespace

SpecPtr build_free_monoid(int k) {
  if (k < 1) throw std::invalid_argument("free monoid needs k >= 1");
  auto spec = std::make_shared<SemigroupSpec>();
  spec->kind = SpecKind::FreeMonoidOnK;
  if (k == 1) {
    spec->generators = {"t"};
  } else {
    for (int i = 1; i <= k; ++i) spec->generators.push_back("x" + std::to_string(i));
  }
  spec->has_unit = true;
  spec->commutative = (k == 1);
  spec->fingerprint = fnv1a_hex("free;" + std::to_string(k));
  return spec;
}

SpecPtr build_t_congruence(int n, int m, bool m_is_zero) {
  if (n < 1) throw std::invalid_argument("t-congruence needs n >= 1");
  if (!m_is_zero && (m < 0 || m >= n))
    throw std::invalid_argument("t-congruence needs 0 <= m < n (m = n is the "
                                "identity congruence; use the free monoid)");
  auto spec = std::make_shared<SemigroupSpec>();
  spec->kind = SpecKind::TCongruence;
  spec->generators = {"t"};
  spec->has_unit = true;

  // Elements: 0, then t^0 .. t^{n-1}.  Exponent e reduces by t^n ~ t^m.
  spec->elements.push_back("0");
  spec->elements.push_back("1");
  for (int e = 1; e < n; ++e)
    spec->elements.push_back(e == 1 ? "t" : "t^" + std::to_string(e));
  auto reduce = [&](int e) -> int {  // element index of t^e
    if (e >= n) {
      if (m_is_zero) return 0;
      e = m + (e - m) % (n - m);
    }
    return e + 1;
  };
  const int sz = n + 1;
  spec->table.assign(sz, std::vector<int>(sz, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) spec->table[a + 1][b + 1] = reduce(a + b);
  spec->unit_index = 1;
  spec->generator_element = {reduce(1)};

  Relation r;
  r.lhs = Word(static_cast<size_t>(n), 0);
  if (!m_is_zero) r.rhs = Word(static_cast<size_t>(m), 0);
  spec->relations.push_back(std::move(r));

  check_associative(spec->table);  // exhaustive triple scan
  compute_witnesses(*spec);
  spec->commutative = true;
  spec->fingerprint = finite_fingerprint(spec->table, spec->unit_index);
  return spec;
}

SpecPtr build_finite_table(const std::vector<std::string>& elements,
                           const std::vector<std::vector<int>>& table,
                           int zero_index, int unit_index) {
  check_table_shape(elements, table);
  const int n = static_cast<int>(elements.size());
  if (zero_index < 0 || zero_index >= n)
    throw std::invalid_argument("zero index out of range");

  // Renumber so zero lands at index 0; remaining elements keep their order.
  std::vector<int> to_new(n);
  to_new[zero_index] = 0;
  int next = 1;
  for (int i = 0; i < n; ++i)
    if (i != zero_index) to_new[i] = next++;
  auto spec = std::make_shared<SemigroupSpec>();
  spec->kind = SpecKind::FiniteTable;
  spec->elements.resize(n);
  spec->table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    spec->elements[to_new[i]] = elements[i];
    for (int j = 0; j < n; ++j) spec->table[to_new[i]][to_new[j]] = to_new[table[i][j]];
  }
  spec->unit_index = unit_index >= 0 ? to_new[unit_index] : -1;
  spec->has_unit = spec->unit_index >= 0;
  for (int e = 1; e < n; ++e)
    if (e != spec->unit_index) {
      spec->generators.push_back(spec->elements[e]);
      spec->generator_element.push_back(e);
    }
  finalize_finite(*spec);
  record_pair_relations(*spec);
  return spec;
}

namespace {

// Paths in a quiver, stored as composable edge sequences.
struct Path {
  std::vector<int> edges;
};

std::string path_name(const SemigroupSpec& spec, const Quiver& q,
                      const std::vector<int>& edges) {
  std::string out;
  size_t i = 0;
  while (i < edges.size()) {
    size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if (!out.empty()) out += "*";
    out += "e" + std::to_string(edges[i] + 1);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  (void)spec;
  (void)q;
  return out;
}

bool quiver_acyclic(const Quiver& q) {
  std::vector<int> state(q.vertices, 0);
  std::vector<std::vector<int>> out(q.vertices);
  for (size_t l = 0; l < q.edges.size(); ++l) out[q.edges[l].first].push_back(l);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int l : out[v]) {
      int w = q.edges[l].second;
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < q.vertices; ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

}  // namespace

SpecPtr build_path_semigroup(const Quiver& q) {
  if (q.vertices < 1) throw std::invalid_argument("quiver needs >= 1 vertex");
  for (auto [s, t] : q.edges)
    if (s < 0 || s >= q.vertices || t < 0 || t >= q.vertices)
      throw std::invalid_argument("quiver edge endpoint out of range");

  auto spec = std::make_shared<SemigroupSpec>();
  spec->kind = SpecKind::PathSemigroup;
  spec->quiver = q;
  const int nv = q.vertices;
  const int ne = static_cast<int>(q.edges.size());
  for (int i = 0; i < nv; ++i) spec->generators.push_back("v" + std::to_string(i + 1));
  for (int l = 0; l < ne; ++l) spec->generators.push_back("e" + std::to_string(l + 1));
  spec->has_unit = false;

  // The four relation families: v_i v_j = delta_ij v_i; e_l v_i = e_l iff i
  // is the terminal vertex of l; v_i e_l = e_l iff i is the initial vertex.
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      Relation r;
      r.lhs = {i, j};
      if (i == j) r.rhs = Word{i};
      spec->relations.push_back(std::move(r));
    }
  for (int l = 0; l < ne; ++l)
    for (int i = 0; i < nv; ++i) {
      Relation r1;
      r1.lhs = {nv + l, i};
      if (i == q.edges[l].second) r1.rhs = Word{nv + l};
      spec->relations.push_back(std::move(r1));
      Relation r2;
      r2.lhs = {i, nv + l};
      if (i == q.edges[l].first) r2.rhs = Word{nv + l};
      spec->relations.push_back(std::move(r2));
    }

  std::ostringstream fp;
  fp << "path;" << nv << ";";
  for (auto [s, t] : q.edges) fp << s << ">" << t << ",";
  spec->fingerprint = fnv1a_hex(fp.str());
  spec->commutative = (nv == 1 && ne <= 1);

  if (quiver_acyclic(q)) {
    // Finitely many paths: materialize the full table.
    std::vector<Path> paths;
    for (int l = 0; l < ne; ++l) paths.push_back({{l}});
    for (size_t i = 0; i < paths.size(); ++i)
      for (int l = 0; l < ne; ++l)
        if (q.edges[paths[i].edges.back()].second == q.edges[l].first) {
          Path p = paths[i];
          p.edges.push_back(l);
          paths.push_back(std::move(p));
        }
    std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
      return a.edges.size() != b.edges.size() ? a.edges.size() < b.edges.size()
                                              : a.edges < b.edges;
    });
    // Elements: 0, vertices, paths.
    spec->elements.push_back("0");
    for (int i = 0; i < nv; ++i) spec->elements.push_back("v" + std::to_string(i + 1));
    std::map<std::vector<int>, int> path_index;
    for (const auto& p : paths) {
      path_index[p.edges] = static_cast<int>(spec->elements.size());
      spec->elements.push_back(path_name(*spec, q, p.edges));
    }
    const int n = static_cast<int>(spec->elements.size());
    auto init_of = [&](int e) {  // initial vertex of element e (nonzero)
      return e <= nv ? e - 1 : q.edges[paths[e - 1 - nv].edges.front()].first;
    };
    auto term_of = [&](int e) {
      return e <= nv ? e - 1 : q.edges[paths[e - 1 - nv].edges.back()].second;
    };
    spec->table.assign(n, std::vector<int>(n, 0));
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        if (term_of(a) != init_of(b)) continue;
        if (a <= nv && b <= nv) {
          spec->table[a][b] = a;
        } else if (a <= nv) {
          spec->table[a][b] = b;
        } else if (b <= nv) {
          spec->table[a][b] = a;
        } else {
          std::vector<int> cat = paths[a - 1 - nv].edges;
          const auto& tail = paths[b - 1 - nv].edges;
          cat.insert(cat.end(), tail.begin(), tail.end());
          spec->table[a][b] = path_index.at(cat);
        }
      }
    spec->unit_index = -1;
    for (int i = 0; i < nv; ++i) {
      spec->generator_element.push_back(i + 1);
    }
    for (int l = 0; l < ne; ++l) spec->generator_element.push_back(nv + 1 + l);
    check_associative(spec->table);
    compute_witnesses(*spec);
    spec->commutative = table_commutative(spec->table);
  }
  return spec;
}

SpecPtr build_group_with_zero(const std::vector<std::string>& names,
                              const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(names.size());
  if (n < 1) throw std::invalid_argument("empty group table");
  check_table_shape(names, table);
  check_associative(table);
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (table[e][a] != a || table[a][e] != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw std::invalid_argument("group table has no identity");
  for (int a = 0; a < n; ++a) {
    bool inv = false;
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) inv = true;
    if (!inv) throw std::invalid_argument("group table element '" + names[a] +
                                          "' has no inverse");
  }

  auto spec = std::make_shared<SemigroupSpec>();
  spec->kind = SpecKind::GroupWithZero;
  spec->elements.push_back("0");
  for (const auto& s : names) spec->elements.push_back(s);
  const int sz = n + 1;
  spec->table.assign(sz, std::vector<int>(sz, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) spec->table[a + 1][b + 1] = table[a][b] + 1;
  spec->unit_index = identity + 1;
  spec->has_unit = true;
  for (int e = 1; e < sz; ++e)
    if (e != spec->unit_index) {
      spec->generators.push_back(spec->elements[e]);
      spec->generator_element.push_back(e);
    }
  finalize_finite(*spec);
  record_pair_relations(*spec);
  return spec;
}

std::string evaluate_word(const SemigroupSpec& spec, const Word& w) {
  for (int g : w)
    if (g < 0 || g >= spec.num_generators())
      throw std::invalid_argument("word letter is not a generator");
  if (w.empty()) {
    if (!spec.has_unit) throw std::invalid_argument("empty word in a spec without unit");
    if (spec.is_finite()) return spec.elements[spec.unit_index];
    return "1";
  }
  if (spec.is_finite()) {
    int cur = spec.generator_element[w[0]];
    for (size_t i = 1; i < w.size(); ++i)
      cur = spec.table[cur][spec.generator_element[w[i]]];
    return spec.elements[cur];
  }
  if (spec.kind == SpecKind::FreeMonoidOnK) {
    if (spec.num_generators() == 1) {
      return w.size() == 1 ? "t" : "t^" + std::to_string(w.size());
    }
    std::string out;
    for (int g : w) out += spec.generators[g];
    return out;
  }
  // Path semigroup with cycles: rewrite against the quiver.
  const Quiver& q = *spec.quiver;
  const int nv = q.vertices;
  int vertex = -1;                // current normal form: a vertex,
  std::vector<int> edges;        // or a composable edge path,
  bool zero = false;             // or zero.
  bool started = false;
  for (int g : w) {
    if (zero) break;
    if (!started) {
      started = true;
      if (g < nv)
        vertex = g;
      else
        edges = {g - nv};
      continue;
    }
    if (g < nv) {  // multiply by vertex v_g on the right
      int term = edges.empty() ? vertex : q.edges[edges.back()].second;
      if (term != g) zero = true;
    } else {  // multiply by edge e
      int l = g - nv;
      int term = edges.empty() ? vertex : q.edges[edges.back()].second;
      if (term != q.edges[l].first) {
        zero = true;
      } else {
        edges.push_back(l);
        vertex = -1;
      }
    }
  }
  if (zero) return "0";
  if (edges.empty()) return "v" + std::to_string(vertex + 1);
  return path_name(spec, q, edges);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::vector<int>>> parse_table_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file: " + path);
  std::string line;
  std::vector<std::string> names;
  {
    if (!std::getline(in, line)) throw std::invalid_argument("empty table file");
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) names.push_back(tok);
  }
  std::map<std::string, int> idx;
  for (size_t i = 0; i < names.size(); ++i) idx[names[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::string tok;
    std::vector<int> row;
    while (is >> tok) {
      auto it = idx.find(tok);
      if (it == idx.end())
        throw std::invalid_argument("unknown element in table row: " + tok);
      row.push_back(it->second);
    }
    if (row.empty()) continue;
    table.push_back(std::move(row));
  }
  return {names, table};
}

}  // namespace

Quiver parse_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open quiver file: " + path);
  Quiver q;
  std::string word;
  if (!(in >> word) || word != "vertices" || !(in >> q.vertices))
    throw std::invalid_argument("quiver file must start with 'vertices N'");
  while (in >> word) {
    if (word != "edge") throw std::invalid_argument("expected 'edge s t' line");
    int s, t;
    if (!(in >> s >> t)) throw std::invalid_argument("malformed edge line");
    q.edges.emplace_back(s - 1, t - 1);  // file is 1-based
  }
  return q;
}

SpecPtr parse_spec(const std::string& text) {
  if (text.rfind("free:", 0) == 0) {
    return build_free_monoid(std::stoi(text.substr(5)));
  }
  if (text.rfind("tcong:", 0) == 0) {
    auto parts = split(text.substr(6), ',');
    if (parts.size() != 2) throw std::invalid_argument("expected tcong:n,m");
    int n = std::stoi(parts[0]);
    int m = std::stoi(parts[1]);
    return build_t_congruence(n, m, /*m_is_zero=*/m == 0);
  }
  if (text.rfind("gz:", 0) == 0) {
    std::string g = text.substr(3);
    if (g.rfind("table@", 0) == 0) {
      auto [names, table] = parse_table_file(g.substr(6));
      return build_group_with_zero(names, table);
    }
    GroupTable gt = parse_group_name(g);
    return build_group_with_zero(gt.names, gt.table);
  }
  if (text.rfind("path:@", 0) == 0) {
    return build_path_semigroup(parse_quiver_file(text.substr(6)));
  }
  if (text.rfind("table@", 0) == 0) {
    auto [names, table] = parse_table_file(text.substr(6));
    int zero = -1, unit = -1;
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == "0") zero = static_cast<int>(i);
      if (names[i] == "1") unit = static_cast<int>(i);
    }
    if (zero < 0) throw std::invalid_argument("table file must name an element '0'");
    return build_finite_table(names, table, zero, unit);
  }
  throw std::invalid_argument("unrecognized spec: " + text);
}

}  // namespace f1hall
