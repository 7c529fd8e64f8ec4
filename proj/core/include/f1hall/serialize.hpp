#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "f1hall/amodule.hpp"
#include "f1hall/forest.hpp"
#include "f1hall/group.hpp"
#include "f1hall/hall.hpp"
#include "f1hall/numeric.hpp"
#include "f1hall/rep_ring.hpp"
#include "f1hall/report.hpp"

namespace f1hall {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

// Module text: "d; g1:[a,b,c]; g2:[...]" with 0 = basepoint.
std::string module_to_text(const AModule& m);
AModule module_from_text(SpecPtr spec, const std::string& text);

// {spec fingerprint, dim, rows, key}
Json module_to_json(const AModule& m);
AModule module_from_json(SpecPtr spec, const Json& j);

std::string rational_to_string(const Rational& r);  // "p" or "p/q"
Rational rational_from_string(const std::string& s);

// List of {key, coeff}; tensor: list of {left, right, coeff}.  Key-ordered.
Json hall_to_json(const HallElement& a);
HallElement hall_from_json(SpecPtr spec, const Json& j);
Json tensor_to_json(const TensorElement& a);
TensorElement tensor_from_json(SpecPtr spec, const Json& j);

Json rep_to_json(const RepElement& e);
RepElement rep_from_json(const Json& j);

Json report_to_json(const Report& r);
Json k0_to_json(const K0Report& r);
Json forest_tensor_to_json(const ForestTensor& t);
Json burnside_to_json(const BurnsideTable& t);

// One-way table renderings.
std::string burnside_to_csv(const BurnsideTable& t);
std::string burnside_to_md(const BurnsideTable& t);

}  // namespace f1hall
