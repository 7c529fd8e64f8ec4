#include "f1hall/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace f1hall {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

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

}  // namespace

std::string module_to_text(const AModule& m) {
  std::ostringstream out;
  out << m.dim;
  for (int g = 0; g < m.spec->num_generators(); ++g) {
    out << "; " << m.spec->generators[g] << ":[";
    for (int x = 1; x <= m.dim; ++x) {
      if (x > 1) out << ",";
      out << m.rows[g][x];
    }
    out << "]";
  }
  return out.str();
}

AModule module_from_text(SpecPtr spec, const std::string& text) {
  auto parts = split(text, ';');
  if (parts.empty()) throw std::invalid_argument("empty module text");
  int dim = 0;
  try {
    size_t used = 0;
    dim = std::stoi(strip(parts[0]), &used);
    if (used != strip(parts[0]).size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("module text: bad dimension at position 0 in '" +
                                text + "'");
  }
  if (dim < 0 || dim > 30) throw std::invalid_argument("module text: dimension out of range");
  const int g = spec->num_generators();
  if (static_cast<int>(parts.size()) != g + 1)
    throw std::invalid_argument("module text: expected " + std::to_string(g) +
                                " generator rows, got " +
                                std::to_string(parts.size() - 1));
  std::vector<std::vector<int>> rows(g, std::vector<int>(dim + 1, 0));
  for (int gi = 0; gi < g; ++gi) {
    std::string part = strip(parts[gi + 1]);
    std::string prefix = spec->generators[gi] + ":[";
    if (part.rfind(prefix, 0) != 0 || part.back() != ']')
      throw std::invalid_argument("module text: row " + std::to_string(gi + 1) +
                                  " must look like '" + prefix + "...]'");
    std::string body = part.substr(prefix.size(), part.size() - prefix.size() - 1);
    std::vector<std::string> cells = body.empty() ? std::vector<std::string>{}
                                                  : split(body, ',');
    if (static_cast<int>(cells.size()) != dim)
      throw std::invalid_argument("module text: row '" + spec->generators[gi] +
                                  "' has " + std::to_string(cells.size()) +
                                  " entries, expected " + std::to_string(dim));
    for (int x = 1; x <= dim; ++x) {
      int v = 0;
      try {
        v = std::stoi(strip(cells[x - 1]));
      } catch (...) {
        throw std::invalid_argument("module text: bad entry in row '" +
                                    spec->generators[gi] + "'");
      }
      if (v < 0 || v > dim)
        throw std::invalid_argument("module text: entry out of range in row '" +
                                    spec->generators[gi] + "'");
      rows[gi][x] = v;
    }
  }
  return validate_module(std::move(spec), std::move(rows));
}

Json module_to_json(const AModule& m) {
  Json j;
  j["spec"] = m.spec->fingerprint;
  j["dim"] = m.dim;
  Json rows = Json::array();
  for (int g = 0; g < m.spec->num_generators(); ++g) {
    Json row = Json::array();
    for (int x = 1; x <= m.dim; ++x) row.push_back(m.rows[g][x]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["key"] = canonical_key(m);
  return j;
}

AModule module_from_json(SpecPtr spec, const Json& j) {
  if (j.at("spec").get<std::string>() != spec->fingerprint)
    throw std::invalid_argument("module JSON targets a different semigroup");
  int dim = j.at("dim").get<int>();
  const int g = spec->num_generators();
  std::vector<std::vector<int>> rows(g, std::vector<int>(dim + 1, 0));
  const Json& jr = j.at("rows");
  if (static_cast<int>(jr.size()) != g)
    throw std::invalid_argument("module JSON: wrong row count");
  for (int gi = 0; gi < g; ++gi)
    for (int x = 1; x <= dim; ++x) rows[gi][x] = jr[gi].at(x - 1).get<int>();
  return validate_module(std::move(spec), std::move(rows));
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r).str();
  if (denominator(r) != 1) out << "/" << denominator(r).str();
  return out.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Json hall_to_json(const HallElement& a) {
  Json out = Json::array();
  for (const auto& [k, c] : a.coeffs) {
    Json term;
    term["key"] = k;
    term["coeff"] = rational_to_string(c);
    out.push_back(std::move(term));
  }
  return out;
}

HallElement hall_from_json(SpecPtr spec, const Json& j) {
  HallElement out{std::move(spec), {}};
  for (const auto& term : j)
    out.coeffs[term.at("key").get<std::string>()] =
        rational_from_string(term.at("coeff").get<std::string>());
  return out;
}

Json tensor_to_json(const TensorElement& a) {
  Json out = Json::array();
  for (const auto& [k, c] : a.coeffs) {
    Json term;
    term["left"] = k.first;
    term["right"] = k.second;
    term["coeff"] = rational_to_string(c);
    out.push_back(std::move(term));
  }
  return out;
}

TensorElement tensor_from_json(SpecPtr spec, const Json& j) {
  TensorElement out{std::move(spec), {}};
  for (const auto& term : j)
    out.coeffs[{term.at("left").get<std::string>(),
                term.at("right").get<std::string>()}] =
        rational_from_string(term.at("coeff").get<std::string>());
  return out;
}

Json rep_to_json(const RepElement& e) {
  Json out = Json::array();
  for (const auto& [k, c] : e) {
    Json term;
    term["key"] = k;
    term["mult"] = c.str();
    out.push_back(std::move(term));
  }
  return out;
}

RepElement rep_from_json(const Json& j) {
  RepElement out;
  for (const auto& term : j)
    out[term.at("key").get<std::string>()] = Int(term.at("mult").get<std::string>());
  return out;
}

Json report_to_json(const Report& r) {
  Json j;
  j["title"] = r.title;
  j["pass"] = r.all_pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.pass) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json k0_to_json(const K0Report& r) {
  Json j;
  j["truncation_dim"] = r.truncation_dim;
  j["classes"] = r.classes;
  j["relation_rows"] = r.relation_rows;
  j["relation_cols"] = r.relation_cols;
  Json factors = Json::array();
  for (const auto& f : r.invariant_factors) factors.push_back(f.str());
  j["invariant_factors"] = std::move(factors);
  return j;
}

Json forest_tensor_to_json(const ForestTensor& t) {
  Json out = Json::array();
  for (const auto& [k, c] : t) {
    Json term;
    term["left"] = k.first;
    term["right"] = k.second;
    term["coeff"] = c.str();
    out.push_back(std::move(term));
  }
  return out;
}

Json burnside_to_json(const BurnsideTable& t) {
  Json j;
  j["labels"] = t.labels;
  j["irreducibles"] = t.irreducible_keys;
  Json entries = Json::array();
  for (const auto& row : t.entry) {
    Json jrow = Json::array();
    for (const auto& cell : row) {
      Json jc = Json::array();
      for (const auto& m : cell) jc.push_back(m.str());
      jrow.push_back(std::move(jc));
    }
    entries.push_back(std::move(jrow));
  }
  j["entries"] = std::move(entries);
  return j;
}

namespace {

std::string cell_string(const std::vector<Int>& mult,
                        const std::vector<std::string>& labels) {
  std::string out;
  for (size_t k = 0; k < mult.size(); ++k) {
    if (mult[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (mult[k] != 1) out += mult[k].str() + "*";
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string burnside_to_csv(const BurnsideTable& t) {
  std::ostringstream out;
  out << "smash";
  for (const auto& l : t.labels) out << "," << l;
  out << "\n";
  for (size_t i = 0; i < t.entry.size(); ++i) {
    out << t.labels[i];
    for (size_t j = 0; j < t.entry[i].size(); ++j)
      out << ",\"" << cell_string(t.entry[i][j], t.labels) << "\"";
    out << "\n";
  }
  return out.str();
}

std::string burnside_to_md(const BurnsideTable& t) {
  std::ostringstream out;
  out << "| smash |";
  for (const auto& l : t.labels) out << " " << l << " |";
  out << "\n|---|";
  for (size_t i = 0; i < t.labels.size(); ++i) out << "---|";
  out << "\n";
  for (size_t i = 0; i < t.entry.size(); ++i) {
    out << "| " << t.labels[i] << " |";
    for (size_t j = 0; j < t.entry[i].size(); ++j)
      out << " " << cell_string(t.entry[i][j], t.labels) << " |";
    out << "\n";
  }
  return out.str();
}

}  // namespace f1hall
