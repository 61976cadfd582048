#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dist3/qpoly.hpp"

namespace dist3::moduli {

// Cohomology of line bundles O(k) on P^3 (Bott): only h^0 and h^3 can be
// nonzero.
long h_line_bundle(int i, int k);

// h^0(TP^3(k)) through the Euler sequence: 4 h^0(O(k+1)) - h^0(O(k)).
// Twists below -1 have no sections and return 0.
long h0_tp3(int k);

// chi(TP^3(t)) = 4 binom(t+4,3) - binom(t+3,3), as an exact polynomial.
QPoly chi_tp3();

// Hirzebruch-Riemann-Roch on P^3 for a sheaf of the given rank and Chern
// classes, twisted by O(t): chi = ch3 + 2 ch2 + 11/6 ch1 + rank applied to
// ch(E) * e^{tH}. Returned as a polynomial in t.
QPoly hrr_chi(long rank, long c1, long c2, long c3);

mpq_class slope(long c1, long rank);

// dim D = dim R + dim Hom - 1, the fiber-dimension bookkeeping of the
// forgetful morphism.
long forgetful_dim(long dim_moduli_sheaves, long dim_hom);

struct DerivationStep {
  std::string label;
  long value;
  std::string provenance;  // "computed" or "axiom (...)"
};

struct Derivation {
  std::vector<DerivationStep> steps;
  long result;
};

// The dimension count for the moduli space of degree-3 distributions with
// tangent-sheaf Chern classes (-1, 3, 5): 19 + 24 - 1 = 42. The moduli
// dimension 19 for stable reflexive sheaves is quoted, not computed.
Derivation moduli_dim_335();

}  // namespace dist3::moduli
