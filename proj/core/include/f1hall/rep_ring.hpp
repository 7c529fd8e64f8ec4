#pragma once

#include <map>

#include "f1hall/amodule.hpp"
#include "f1hall/numeric.hpp"
#include "f1hall/report.hpp"

namespace f1hall {

// Product of two modules over the same spec.  cartesian_product is the
// categorical product (pairs where either slot may be the basepoint);
// smash_product collapses everything with a basepoint slot; tensor_product
// additionally identifies a.m ^ n with m ^ a.n and needs a commutative spec.
AModule cartesian_product(const AModule& a, const AModule& b);
AModule smash_product(const AModule& a, const AModule& b);
AModule tensor_product(const AModule& a, const AModule& b);

// An element of the representation ring: a multiset of indecomposable
// isomorphism classes with integer multiplicities.
using RepElement = std::map<IsoKey, Int>;

RepElement decompose_classes(const AModule& m);
RepElement rep_add(const RepElement& a, const RepElement& b);

enum class RepProductKind { Smash, Tensor, Cartesian };

RepElement rep_product(SpecPtr spec, const RepElement& a, const RepElement& b,
                       RepProductKind kind);

std::string rep_to_string(const RepElement& e);

// Spot-checks ring laws (commutativity, associativity, unit where one
// exists) for the chosen product on all modules up to max_dim.
Report verify_rep_ring(SpecPtr spec, RepProductKind kind, int max_dim);

}  // namespace f1hall
