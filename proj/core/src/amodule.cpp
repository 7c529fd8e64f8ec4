#include "f1hall/amodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace f1hall {

namespace {

constexpr const char* kSumSep = "\xE2\x8A\x95";  // UTF-8 direct-sum sign

// Action of a word: (ab).x = a.(b.x), so the rightmost letter applies first.
std::vector<int> act_word(const AModule& m, const Word& w) {
  std::vector<int> out(m.dim + 1);
  std::iota(out.begin(), out.end(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    for (int x = 0; x <= m.dim; ++x) out[x] = m.rows[*it][out[x]];
  return out;
}

bool rows_well_formed(const SemigroupSpec& spec,
                      const std::vector<std::vector<int>>& rows, int dim) {
  if (static_cast<int>(rows.size()) != spec.num_generators()) return false;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim + 1 || row[0] != 0) return false;
    for (int v : row)
      if (v < 0 || v > dim) return false;
  }
  return true;
}

// Relation/table check without exceptions; `why` receives a witness on failure.
bool check_action(const SemigroupSpec& spec,
                  const std::vector<std::vector<int>>& rows, int dim,
                  std::string* why = nullptr) {
  AModule probe{nullptr, dim, rows};
  for (const auto& rel : spec.relations) {
    auto lhs = act_word(probe, rel.lhs);
    std::vector<int> rhs(dim + 1, 0);
    if (rel.rhs) rhs = act_word(probe, *rel.rhs);
    for (int x = 1; x <= dim; ++x)
      if (lhs[x] != rhs[x]) {
        if (why) {
          std::ostringstream os;
          os << "relation fails at element " << x << " (lhs word of length "
             << rel.lhs.size() << ")";
          *why = os.str();
        }
        return false;
      }
  }
  if (spec.is_finite()) {
    const int n = static_cast<int>(spec.elements.size());
    std::vector<std::vector<int>> maps(n);
    maps[0].assign(dim + 1, 0);
    for (int e = 1; e < n; ++e)
      maps[e] = (e == spec.unit_index) ? act_word(probe, {})
                                       : act_word(probe, spec.witness[e]);
    for (int g = 0; g < spec.num_generators(); ++g)
      if (maps[spec.generator_element[g]] != rows[g]) {
        if (why)
          *why = "generator '" + spec.generators[g] +
                 "' acts inconsistently with its element";
        return false;
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto& ab = maps[spec.table[a][b]];
        for (int x = 1; x <= dim; ++x)
          if (ab[x] != maps[a][maps[b][x]]) {
            if (why) {
              std::ostringstream os;
              os << "(" << spec.elements[a] << "*" << spec.elements[b]
                 << ").x != " << spec.elements[a] << ".(" << spec.elements[b]
                 << ".x) at element " << x;
              *why = os.str();
            }
            return false;
          }
      }
  }
  return true;
}

void require_same_spec(const AModule& m, const AModule& n) {
  if (m.spec->fingerprint != n.spec->fingerprint)
    throw std::invalid_argument("modules live over different specs");
}

}  // namespace

AModule validate_module(SpecPtr spec, std::vector<std::vector<int>> rows) {
  int dim = rows.empty() ? 0 : static_cast<int>(rows[0].size()) - 1;
  if (rows.empty() && spec->num_generators() > 0)
    throw std::invalid_argument("missing action rows");
  if (rows.empty()) rows.assign(0, {});
  if (!rows_well_formed(*spec, rows, dim))
    throw std::invalid_argument("action rows malformed or out of range");
  std::string why;
  if (!check_action(*spec, rows, dim, &why)) throw std::invalid_argument(why);
  return AModule{std::move(spec), dim, std::move(rows)};
}

AModule zero_module(SpecPtr spec) {
  std::vector<std::vector<int>> rows(spec->num_generators(), std::vector<int>{0});
  return AModule{std::move(spec), 0, std::move(rows)};
}

AModule direct_sum(const AModule& m, const AModule& n) {
  require_same_spec(m, n);
  AModule out;
  out.spec = m.spec;
  out.dim = m.dim + n.dim;
  out.rows.resize(m.rows.size());
  for (size_t g = 0; g < m.rows.size(); ++g) {
    auto& row = out.rows[g];
    row.assign(out.dim + 1, 0);
    for (int x = 1; x <= m.dim; ++x) row[x] = m.rows[g][x];
    for (int x = 1; x <= n.dim; ++x)
      row[m.dim + x] = n.rows[g][x] == 0 ? 0 : m.dim + n.rows[g][x];
  }
  return out;
}

std::vector<AModule> decompose(const AModule& m) {
  std::vector<int> parent(m.dim + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : m.rows)
    for (int x = 1; x <= m.dim; ++x)
      if (row[x] != 0) parent[find(x)] = find(row[x]);

  std::map<int, std::vector<int>> comps;  // root -> elements, original order
  for (int x = 1; x <= m.dim; ++x) comps[find(x)].push_back(x);

  std::vector<AModule> out;
  for (auto& [root, elems] : comps) {
    std::vector<int> local(m.dim + 1, 0);
    for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i) + 1;
    AModule comp;
    comp.spec = m.spec;
    comp.dim = static_cast<int>(elems.size());
    comp.rows.resize(m.rows.size());
    for (size_t g = 0; g < m.rows.size(); ++g) {
      comp.rows[g].assign(comp.dim + 1, 0);
      for (size_t i = 0; i < elems.size(); ++i)
        comp.rows[g][i + 1] = local[m.rows[g][elems[i]]];
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_indecomposable(const AModule& m) {
  return m.dim > 0 && decompose(m).size() == 1;
}

bool is_closed(const AModule& m, SubsetMask s) {
  for (const auto& row : m.rows)
    for (int x = 1; x <= m.dim; ++x)
      if ((s >> (x - 1)) & 1u) {
        int y = row[x];
        if (y != 0 && !((s >> (y - 1)) & 1u)) return false;
      }
  return true;
}

std::vector<SubsetMask> submodules(const AModule& m) {
  if (m.dim > 24) throw std::invalid_argument("submodule scan limited to dim <= 24");
  std::vector<SubsetMask> out;
  const SubsetMask full = m.dim == 0 ? 0u : ((1u << m.dim) - 1u);
  for (SubsetMask s = 0; s <= full; ++s) {
    if (is_closed(m, s)) out.push_back(s);
    if (full == 0) break;
  }
  std::sort(out.begin(), out.end(), [](SubsetMask a, SubsetMask b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

AModule sub_module(const AModule& m, SubsetMask s) {
  if (!is_closed(m, s)) throw std::invalid_argument("subset is not action-closed");
  std::vector<int> elems;
  for (int x = 1; x <= m.dim; ++x)
    if ((s >> (x - 1)) & 1u) elems.push_back(x);
  std::vector<int> local(m.dim + 1, 0);
  for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i) + 1;
  AModule out;
  out.spec = m.spec;
  out.dim = static_cast<int>(elems.size());
  out.rows.resize(m.rows.size());
  for (size_t g = 0; g < m.rows.size(); ++g) {
    out.rows[g].assign(out.dim + 1, 0);
    for (size_t i = 0; i < elems.size(); ++i)
      out.rows[g][i + 1] = local[m.rows[g][elems[i]]];
  }
  return out;
}

AModule quotient(const AModule& m, SubsetMask s) {
  if (!is_closed(m, s)) throw std::invalid_argument("subset is not action-closed");
  std::vector<int> keep;
  for (int x = 1; x <= m.dim; ++x)
    if (!((s >> (x - 1)) & 1u)) keep.push_back(x);
  std::vector<int> local(m.dim + 1, 0);
  for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i) + 1;
  AModule out;
  out.spec = m.spec;
  out.dim = static_cast<int>(keep.size());
  out.rows.resize(m.rows.size());
  for (size_t g = 0; g < m.rows.size(); ++g) {
    out.rows[g].assign(out.dim + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i)
      out.rows[g][i + 1] = local[m.rows[g][keep[i]]];
  }
  return out;
}

namespace {

// Label-independent vertex partition: iterated refinement by the action
// rows, per generator: target color (or basepoint) and in-neighbor colors.
std::vector<int> refine_colors(const AModule& m) {
  const int d = m.dim;
  const int g = static_cast<int>(m.rows.size());
  std::vector<int> color(d + 1, 0);
  int classes = 1;
  for (int round = 0; round <= d; ++round) {
    std::vector<std::vector<int>> sig(d + 1);
    for (int x = 1; x <= d; ++x) {
      auto& s = sig[x];
      s.push_back(color[x]);
      for (int gi = 0; gi < g; ++gi) {
        int y = m.rows[gi][x];
        s.push_back(y == 0 ? -1 : color[y]);
      }
      for (int gi = 0; gi < g; ++gi) {
        std::vector<int> in;
        for (int z = 1; z <= d; ++z)
          if (m.rows[gi][z] == x) in.push_back(color[z]);
        std::sort(in.begin(), in.end());
        s.push_back(-2);
        s.insert(s.end(), in.begin(), in.end());
      }
    }
    std::map<std::vector<int>, int> ids;
    for (int x = 1; x <= d; ++x) ids[sig[x]];
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    std::vector<int> fresh(d + 1, 0);
    for (int x = 1; x <= d; ++x) fresh[x] = ids[sig[x]];
    if (next == classes && fresh == color) break;
    classes = next;
    color = std::move(fresh);
  }
  return color;
}

// Encode rows under the labeling ord (ord[i] = old vertex getting label i+1).
std::vector<int> encode(const AModule& m, const std::vector<int>& ord,
                        const std::vector<int>& perm) {
  std::vector<int> out;
  out.reserve(m.rows.size() * m.dim);
  for (const auto& row : m.rows)
    for (int i = 0; i < m.dim; ++i) out.push_back(perm[row[ord[i]]]);
  return out;
}

std::pair<IsoKey, std::vector<int>> canonical_indecomposable(const AModule& m) {
  const int d = m.dim;
  auto color = refine_colors(m);

  std::map<int, std::vector<int>> block_map;
  for (int x = 1; x <= d; ++x) block_map[color[x]].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& [c, vs] : block_map) blocks.push_back(vs);

  double perms = 1;
  for (const auto& b : blocks)
    for (size_t i = 2; i <= b.size(); ++i) perms *= static_cast<double>(i);
  if (perms > 5e7)
    throw std::runtime_error("canonical labeling search space too large");

  std::vector<int> best_enc, best_perm;
  std::vector<int> ord(d), perm(d + 1, 0);
  // Odometer over the product of per-block permutations.
  std::function<void(size_t)> walk = [&](size_t bi) {
    if (bi == blocks.size()) {
      int label = 0;
      for (const auto& b : blocks)
        for (int v : b) {
          ord[label] = v;
          perm[v] = ++label;
        }
      auto enc = encode(m, ord, perm);
      if (best_enc.empty() || enc < best_enc) {
        best_enc = enc;
        best_perm = perm;
      }
      return;
    }
    auto& b = blocks[bi];
    std::sort(b.begin(), b.end());
    do {
      walk(bi + 1);
    } while (std::next_permutation(b.begin(), b.end()));
  };
  walk(0);

  std::ostringstream key;
  key << d << "|";
  size_t pos = 0;
  for (size_t g = 0; g < m.rows.size(); ++g) {
    if (g) key << "|";
    key << m.spec->generators[g] << ":";
    for (int i = 0; i < d; ++i) {
      if (i) key << ",";
      key << best_enc[pos++];
    }
  }
  return {key.str(), best_perm};
}

}  // namespace

std::pair<IsoKey, std::vector<int>> canonical_form(const AModule& m) {
  if (m.dim == 0) return {"0|", {0}};
  auto comps = decompose(m);
  // Recover each component's original element set for the global relabeling.
  std::vector<int> parent(m.dim + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : m.rows)
    for (int x = 1; x <= m.dim; ++x)
      if (row[x] != 0) parent[find(x)] = find(row[x]);
  std::map<int, std::vector<int>> elem_of;
  for (int x = 1; x <= m.dim; ++x) elem_of[find(x)].push_back(x);

  struct Piece {
    IsoKey key;
    std::vector<int> perm;       // component-local
    std::vector<int> elements;   // original labels, in component-local order
  };
  std::vector<Piece> pieces;
  size_t ci = 0;
  for (auto& [root, elems] : elem_of) {
    auto [key, perm] = canonical_indecomposable(comps[ci]);
    pieces.push_back({std::move(key), std::move(perm), elems});
    ++ci;
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Piece& a, const Piece& b) { return a.key < b.key; });

  std::vector<int> global(m.dim + 1, 0);
  int offset = 0;
  std::vector<IsoKey> keys;
  for (const auto& p : pieces) {
    for (size_t i = 0; i < p.elements.size(); ++i)
      global[p.elements[i]] = offset + p.perm[i + 1];
    offset += static_cast<int>(p.elements.size());
    keys.push_back(p.key);
  }
  return {join_components(std::move(keys)), std::move(global)};
}

IsoKey canonical_key(const AModule& m) { return canonical_form(m).first; }

bool is_isomorphic(const AModule& m, const AModule& n) {
  require_same_spec(m, n);
  return canonical_key(m) == canonical_key(n);
}

std::vector<IsoKey> key_components(const IsoKey& key) {
  if (key == "0|") return {};
  std::vector<IsoKey> out;
  size_t pos = 0;
  const std::string sep = kSumSep;
  while (true) {
    size_t next = key.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(key.substr(pos));
      break;
    }
    out.push_back(key.substr(pos, next - pos));
    pos = next + sep.size();
  }
  return out;
}

IsoKey join_components(std::vector<IsoKey> components) {
  if (components.empty()) return "0|";
  std::sort(components.begin(), components.end());
  std::string out;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) out += kSumSep;
    out += components[i];
  }
  return out;
}

int key_dim(const IsoKey& key) {
  int total = 0;
  for (const auto& c : key_components(key)) total += std::stoi(c);
  return total;
}

bool key_is_indecomposable(const IsoKey& key) {
  return key != "0|" && key.find(kSumSep) == std::string::npos;
}

AModule module_from_key(SpecPtr spec, const IsoKey& key) {
  AModule out = zero_module(spec);
  for (const auto& comp : key_components(key)) {
    size_t bar = comp.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("malformed key: " + key);
    int d = std::stoi(comp.substr(0, bar));
    std::vector<std::vector<int>> rows;
    std::stringstream rest(comp.substr(bar + 1));
    std::string part;
    while (std::getline(rest, part, '|')) {
      size_t colon = part.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("malformed key row: " + key);
      std::vector<int> row{0};
      std::stringstream vals(part.substr(colon + 1));
      std::string v;
      while (std::getline(vals, v, ',')) row.push_back(std::stoi(v));
      rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != spec->num_generators())
      throw std::invalid_argument("key generator count mismatch: " + key);
    for (const auto& row : rows)
      if (static_cast<int>(row.size()) != d + 1)
        throw std::invalid_argument("key row length mismatch: " + key);
    out = direct_sum(out, validate_module(spec, std::move(rows)));
  }
  return out;
}

ModuleMorphism validate_morphism(const AModule& dom, const AModule& cod,
                                 std::vector<int> map) {
  require_same_spec(dom, cod);
  if (static_cast<int>(map.size()) != dom.dim + 1 || map[0] != 0)
    throw std::invalid_argument("morphism map must be total and pointed");
  for (int v : map)
    if (v < 0 || v > cod.dim) throw std::invalid_argument("morphism value out of range");
  for (size_t g = 0; g < dom.rows.size(); ++g)
    for (int x = 1; x <= dom.dim; ++x)
      if (map[dom.rows[g][x]] != cod.rows[g][map[x]]) {
        std::ostringstream os;
        os << "map is not equivariant: generator '" << dom.spec->generators[g]
           << "' at element " << x;
        throw std::invalid_argument(os.str());
      }
  return ModuleMorphism{dom, cod, std::move(map)};
}

KernelImageCokernel kernel_image_cokernel(const ModuleMorphism& f) {
  SubsetMask kernel = 0, image = 0;
  for (int x = 1; x <= f.dom.dim; ++x) {
    if (f.map[x] == 0)
      kernel |= 1u << (x - 1);
    else
      image |= 1u << (f.map[x] - 1);
  }
  return KernelImageCokernel{kernel, image, quotient(f.cod, image)};
}

bool is_normal(const ModuleMorphism& f) {
  std::vector<int> hits(f.cod.dim + 1, 0);
  for (int x = 1; x <= f.dom.dim; ++x) ++hits[f.map[x]];
  for (int y = 1; y <= f.cod.dim; ++y)
    if (hits[y] > 1) return false;
  return true;
}

std::vector<IsoKey> enumerate_modules(SpecPtr spec, int d, ModuleFilter filter) {
  if (d < 0) throw std::invalid_argument("dimension must be >= 0");
  if (filter == ModuleFilter::Nilpotent && spec->num_generators() != 1)
    throw std::invalid_argument("nilpotent filter needs a single-generator spec");
  if (d == 0) return {"0|"};

  const int g = spec->num_generators();
  const int positions = g * d;
  double raw = 1;
  for (int i = 0; i < positions; ++i) raw *= d + 1;
  if (raw > 2e8) throw std::invalid_argument("enumeration bound exceeded");

  std::vector<std::vector<int>> rows(g, std::vector<int>(d + 1, 0));
  std::set<IsoKey> keys;
  std::vector<int> odo(positions, 0);
  while (true) {
    for (int p = 0; p < positions; ++p) rows[p / d][p % d + 1] = odo[p];
    AModule probe{spec, d, rows};
    bool keep = check_action(*spec, rows, d);
    if (keep && filter == ModuleFilter::Indecomposable) keep = is_indecomposable(probe);
    if (keep && filter == ModuleFilter::Nilpotent) {
      for (int x = 1; x <= d && keep; ++x) {
        int y = x;
        for (int step = 0; step < d && y != 0; ++step) y = rows[0][y];
        if (y != 0) keep = false;
      }
    }
    if (keep) keys.insert(canonical_key(probe));

    int p = positions - 1;
    while (p >= 0 && odo[p] == d) odo[p--] = 0;
    if (p < 0) break;
    ++odo[p];
  }
  return {keys.begin(), keys.end()};
}

std::vector<Extension> enumerate_extensions(const AModule& m, const AModule& n) {
  require_same_spec(m, n);
  const auto& spec = *m.spec;
  const int g = spec.num_generators();
  const int dn = n.dim;
  const int total = dn + m.dim;

  // Fixed part: N acts as itself on 1..dn; the M copy follows M where the
  // M action is nonzero.  The remaining slots range over N u {*}.
  std::vector<std::vector<int>> rows(g, std::vector<int>(total + 1, 0));
  std::vector<std::pair<int, int>> slots;  // (generator, element in M copy)
  for (int gi = 0; gi < g; ++gi) {
    for (int x = 1; x <= dn; ++x) rows[gi][x] = n.rows[gi][x];
    for (int x = 1; x <= m.dim; ++x) {
      int y = m.rows[gi][x];
      if (y != 0)
        rows[gi][dn + x] = dn + y;
      else
        slots.emplace_back(gi, dn + x);
    }
  }

  const SubsetMask n_mask = dn == 0 ? 0u : ((1u << dn) - 1u);
  std::map<IsoKey, Extension> found;
  std::vector<int> odo(slots.size(), 0);  // values 0..dn
  while (true) {
    for (size_t i = 0; i < slots.size(); ++i) rows[slots[i].first][slots[i].second] = odo[i];
    if (check_action(spec, rows, total)) {
      AModule r{m.spec, total, rows};
      IsoKey key = canonical_key(r);
      if (!found.count(key)) found.emplace(key, Extension{r, n_mask});
    }
    int p = static_cast<int>(slots.size()) - 1;
    while (p >= 0 && odo[p] == dn) odo[p--] = 0;
    if (p < 0) break;
    ++odo[p];
  }
  std::vector<Extension> out;
  for (auto& [key, ext] : found) out.push_back(std::move(ext));
  return out;
}

LinearizedModule linearize(const AModule& m) {
  LinearizedModule out(m.rows.size());
  for (size_t g = 0; g < m.rows.size(); ++g) {
    out[g].assign(m.dim, std::vector<int>(m.dim, 0));
    for (int c = 1; c <= m.dim; ++c) {
      int r = m.rows[g][c];
      if (r != 0) out[g][r - 1][c - 1] = 1;
    }
  }
  return out;
}

}  // namespace f1hall
