#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "f1hall/amodule.hpp"
#include "f1hall/numeric.hpp"
#include "f1hall/report.hpp"

namespace f1hall {

// Finitely supported Q-combination of isomorphism classes.  Keys are kept
// in sorted order and zero coefficients are never stored.
struct HallElement {
  SpecPtr spec;
  std::map<IsoKey, Rational> coeffs;
};

struct TensorElement {
  SpecPtr spec;
  std::map<std::pair<IsoKey, IsoKey>, Rational> coeffs;
};

HallElement hall_delta(SpecPtr spec, const IsoKey& key);
HallElement hall_zero(SpecPtr spec);
HallElement hall_add(const HallElement& a, const HallElement& b);
HallElement hall_scale(const HallElement& a, const Rational& c);
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);
TensorElement tensor_scale(const TensorElement& a, const Rational& c);

// #{L c R : L ~ N, R/L ~ M}, by scanning submodules of R.
Int hall_number(const AModule& r, const AModule& m, const AModule& n);

// Structure constants of delta_M * delta_N.  Support comes from extension
// gluing; coefficients from hall_number.  Memoized per (fingerprint, M, N).
std::map<IsoKey, Int> delta_product(SpecPtr spec, const IsoKey& m, const IsoKey& n);

HallElement hall_product(const HallElement& a, const HallElement& b);

// Delta(f)(M,N) = f(M + N): each ordered split of the indecomposable
// multiset of a basis class contributes with coefficient 1.
TensorElement coproduct(const HallElement& a);

Rational counit(const HallElement& a);

// S(delta_0) = delta_0; in positive grade recursively from the reduced
// coproduct.
HallElement antipode(const HallElement& a);

// delta_M * delta_N - delta_N * delta_M for indecomposable keys; throws on
// decomposable input.
HallElement lie_bracket(SpecPtr spec, const IsoKey& m, const IsoKey& n);

// Exhaustive checks on all basis classes of grade <= max_dim: associativity,
// unit, coassociativity, cocommutativity, counit, bialgebra compatibility,
// antipode axiom.
Report verify_hopf_axioms(SpecPtr spec, int max_dim);

// Key-sorted products of indecomposable deltas are linearly independent and
// span each graded component (exact rational rank per grade).
Report verify_pbw(SpecPtr spec, int max_dim);

struct K0Report {
  int truncation_dim = 0;
  std::vector<IsoKey> classes;
  int relation_rows = 0;
  int relation_cols = 0;
  // Diagonal of the Smith normal form padded to the class count; 0 means a
  // free factor.  This is a truncation of K0, not K0 itself.
  std::vector<Int> invariant_factors;
};

K0Report k0_truncated(SpecPtr spec, int max_dim,
                      ModuleFilter filter = ModuleFilter::All);

// Exact rational rank (Gaussian elimination) and integer Smith normal form;
// exposed for reuse in acceptance checks.
int rational_rank(std::vector<std::vector<Rational>> mat);
std::vector<Int> smith_normal_form_diagonal(std::vector<std::vector<Int>> mat);

}  // namespace f1hall
