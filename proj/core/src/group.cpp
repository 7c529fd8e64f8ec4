#include "f1hall/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "f1hall/hall.hpp"
#include "f1hall/rep_ring.hpp"

namespace f1hall {

GroupTable cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  GroupTable g;
  for (int i = 0; i < n; ++i)
    g.names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  g.identity = 0;
  return g;
}

GroupTable symmetric_group(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("symmetric_group supports n in 1..4");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  GroupTable g;
  for (const auto& p : perms) {
    std::string name;
    for (int x : p) name += static_cast<char>('1' + x);
    g.names.push_back(name);
  }
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int sz = static_cast<int>(perms.size());
  g.table.assign(sz, std::vector<int>(sz));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      g.table[i][j] = index[comp];
    }
  g.identity = 0;  // identity permutation is lexicographically first
  return g;
}

GroupTable parse_group_name(const std::string& name) {
  if (name == "trivial") return cyclic_group(1);
  if (name.size() >= 2 && (name[0] == 'z' || name[0] == 's')) {
    int n = std::stoi(name.substr(1));
    return name[0] == 'z' ? cyclic_group(n) : symmetric_group(n);
  }
  throw std::invalid_argument("unrecognized group name: " + name);
}

namespace {

int inverse_of(const GroupTable& g, int a) {
  for (int b = 0; b < static_cast<int>(g.names.size()); ++b)
    if (g.table[a][b] == g.identity) return b;
  throw std::logic_error("element without inverse");
}

std::vector<int> closure(const GroupTable& g, std::vector<int> gens) {
  std::set<int> h(gens.begin(), gens.end());
  h.insert(g.identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(h.begin(), h.end());
    for (int a : cur)
      for (int b : cur)
        if (h.insert(g.table[a][b]).second) grew = true;
  }
  return {h.begin(), h.end()};
}

std::vector<int> conjugate_set(const GroupTable& g, const std::vector<int>& h, int x) {
  int xi = inverse_of(g, x);
  std::set<int> out;
  for (int a : h) out.insert(g.table[g.table[x][a]][xi]);
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const GroupTable& g) {
  const int n = static_cast<int>(g.names.size());
  if (n > 24) throw std::invalid_argument("group too large for subgroup enumeration");
  std::set<std::vector<int>> subgroups;
  subgroups.insert(closure(g, {}));
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = subgroups;
    for (const auto& h : snapshot)
      for (int x = 0; x < n; ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        auto bigger = h;
        bigger.push_back(x);
        if (subgroups.insert(closure(g, bigger)).second) grew = true;
      }
  }

  std::set<std::vector<int>> remaining = subgroups;
  std::vector<SubgroupClass> out;
  while (!remaining.empty()) {
    // std::set order: smaller sets of small elements come first, so the
    // first remaining subgroup is the canonical class representative --
    // except set order is lexicographic, not size-first.  Pick the class
    // of the lexicographically-first remaining subgroup, then sort later.
    auto rep = *remaining.begin();
    std::set<std::vector<int>> cls;
    for (int x = 0; x < n; ++x) cls.insert(conjugate_set(g, rep, x));
    for (const auto& h : cls) remaining.erase(h);
    SubgroupClass c;
    c.representative = *cls.begin();
    c.class_size = static_cast<int>(cls.size());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    return a.representative.size() != b.representative.size()
               ? a.representative.size() < b.representative.size()
               : a.representative < b.representative;
  });
  for (size_t i = 0; i < out.size(); ++i) {
    std::ostringstream label;
    label << "H" << i << ":{";
    for (size_t j = 0; j < out[i].representative.size(); ++j) {
      if (j) label << ",";
      label << g.names[out[i].representative[j]];
    }
    label << "}";
    out[i].label = label.str();
  }
  return out;
}

std::vector<AModule> irreducibles_for_group_with_zero(const GroupTable& g,
                                                      SpecPtr spec) {
  const int n = static_cast<int>(g.names.size());
  std::vector<AModule> out;
  for (const auto& cls : conjugacy_classes_of_subgroups(g)) {
    const auto& h = cls.representative;
    // Left cosets xH, indexed in order of their smallest member.
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
      if (coset_of[x] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back(x);
      for (int a : h) coset_of[g.table[x][a]] = id;
    }
    const int gcount = spec->num_generators();
    std::vector<std::vector<int>> rows(gcount, std::vector<int>(reps.size() + 1, 0));
    for (int gi = 0; gi < gcount; ++gi) {
      int elem = spec->generator_element[gi] - 1;  // spec element 0 is "0"
      for (size_t c = 0; c < reps.size(); ++c)
        rows[gi][c + 1] = coset_of[g.table[elem][reps[c]]] + 1;
    }
    out.push_back(validate_module(spec, std::move(rows)));
  }
  return out;
}

BurnsideTable burnside_table(const GroupTable& g, SpecPtr spec) {
  BurnsideTable out;
  auto classes = conjugacy_classes_of_subgroups(g);
  auto irr = irreducibles_for_group_with_zero(g, spec);
  std::map<IsoKey, size_t> which;
  for (size_t i = 0; i < irr.size(); ++i) {
    out.labels.push_back(classes[i].label);
    out.irreducible_keys.push_back(canonical_key(irr[i]));
    which[out.irreducible_keys.back()] = i;
  }
  out.entry.assign(irr.size(), std::vector<std::vector<Int>>(
                                   irr.size(), std::vector<Int>(irr.size(), 0)));
  for (size_t i = 0; i < irr.size(); ++i)
    for (size_t j = 0; j < irr.size(); ++j)
      for (const auto& [k, c] : decompose_classes(smash_product(irr[i], irr[j]))) {
        auto it = which.find(k);
        if (it == which.end())
          throw std::logic_error("smash component is not a coset module: " + k);
        out.entry[i][j][it->second] = c;
      }
  return out;
}

Report verify_semisimplicity(const GroupTable& g, SpecPtr spec, int max_dim) {
  Report report;
  report.title = "semisimplicity";
  auto irr = irreducibles_for_group_with_zero(g, spec);

  // Semisimple objects: direct sums of coset modules, up to max_dim total.
  std::vector<AModule> objects;
  std::vector<AModule> frontier{zero_module(spec)};
  while (!frontier.empty()) {
    std::vector<AModule> next;
    for (const auto& m : frontier)
      for (const auto& s : irr) {
        if (m.dim + s.dim > max_dim) continue;
        next.push_back(direct_sum(m, s));
      }
    // Dedup by key to keep the object list small.
    std::map<IsoKey, AModule> dedup;
    for (auto& m : next) dedup.emplace(canonical_key(m), std::move(m));
    next.clear();
    for (auto& [k, m] : dedup) {
      objects.push_back(m);
      next.push_back(std::move(m));
    }
    frontier = std::move(next);
  }

  {
    bool pass = true;
    std::string witness;
    for (const auto& m : objects)
      for (const auto& n : objects) {
        if (m.dim + n.dim > max_dim) continue;
        IsoKey want = canonical_key(direct_sum(m, n));
        for (const auto& ext : enumerate_extensions(m, n))
          if (canonical_key(ext.total) != want) {
            pass = false;
            witness = canonical_key(ext.total) + " extends " + canonical_key(m) +
                      " by " + canonical_key(n);
          }
      }
    report.add("all-extensions-split", pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    for (const auto& r : objects)
      for (SubsetMask s : submodules(r)) {
        AModule sub = sub_module(r, s);
        AModule quot = quotient(r, s);
        if (!is_isomorphic(direct_sum(quot, sub), r)) {
          pass = false;
          witness = canonical_key(r);
        }
      }
    report.add("submodules-are-summands", pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < irr.size(); ++i)
      for (size_t j = 0; j < irr.size(); ++j) {
        if (irr[i].dim + irr[j].dim > max_dim) continue;
        auto prod = hall_product(hall_delta(spec, canonical_key(irr[i])),
                                 hall_delta(spec, canonical_key(irr[j])));
        IsoKey want = canonical_key(direct_sum(irr[i], irr[j]));
        bool ok = prod.coeffs.size() == 1 && prod.coeffs.count(want) == 1;
        if (ok && i != j && prod.coeffs.at(want) != 1) ok = false;
        if (!ok) {
          pass = false;
          witness = canonical_key(irr[i]) + " * " + canonical_key(irr[j]);
        }
      }
    report.add("hall-products-concentrate-on-sums", pass, witness);
  }
  return report;
}

}  // namespace f1hall
