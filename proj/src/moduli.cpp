#include "dist3/moduli.hpp"

#include "dist3/errors.hpp"

namespace dist3::moduli {

namespace {

long binom3(long n) {
  if (n < 3) return 0;
  return n * (n - 1) * (n - 2) / 6;
}

}  // namespace

long h_line_bundle(int i, int k) {
  switch (i) {
    case 0:
      return k >= 0 ? binom3(k + 3L) : 0;
    case 1:
    case 2:
      return 0;
    case 3:
      return k <= -4 ? binom3(-k - 1L) : 0;
    default:
      throw InputError("cohomology degree must be 0..3");
  }
}

long h0_tp3(int k) {
  if (k < -1) return 0;
  return 4 * h_line_bundle(0, k + 1) - h_line_bundle(0, k);
}

QPoly chi_tp3() {
  return QPoly::binomial_shifted(4, 3).scaled(4) - QPoly::binomial_shifted(3, 3);
}

QPoly hrr_chi(long rank, long c1, long c2, long c3) {
  mpq_class y1(c1);
  mpq_class y2(c1 * c1 - 2 * c2, 2);
  mpq_class y3(c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3, 6);
  y2.canonicalize();
  y3.canonicalize();
  mpq_class r(rank);

  // ch(E(t)) = ch(E) * e^{tH} truncated at H^3.
  QPoly t = QPoly::t();
  QPoly ch1 = QPoly::constant(y1) + t.scaled(r);
  QPoly ch2 = QPoly::constant(y2) + t.scaled(y1) + (t * t).scaled(r / 2);
  QPoly ch3 =
      QPoly::constant(y3) + t.scaled(y2) + (t * t).scaled(y1 / 2) + (t * t * t).scaled(r / 6);

  return ch3 + ch2.scaled(2) + ch1.scaled(mpq_class(11, 6)) + QPoly::constant(r);
}

mpq_class slope(long c1, long rank) {
  if (rank < 1) throw InputError("slope requires rank >= 1");
  mpq_class mu(c1, rank);
  mu.canonicalize();
  return mu;
}

long forgetful_dim(long dim_moduli_sheaves, long dim_hom) {
  if (dim_moduli_sheaves < 0 || dim_hom < 0)
    throw InputError("forgetful_dim requires non-negative dimensions");
  return dim_moduli_sheaves + dim_hom - 1;
}

Derivation moduli_dim_335() {
  Derivation d;
  long dim_r = 19;
  d.steps.push_back({"dim R(-1,3,5)", dim_r,
                     "axiom (Chang 1984, stable rank-2 reflexive sheaves on P^3: "
                     "irreducible of dimension 19)"});
  long h0 = h0_tp3(-1);
  d.steps.push_back({"h0(TP^3(-1))", h0, "computed"});
  long dim_hom = 6 * h0;
  d.steps.push_back({"dim Hom(E, TP^3) = 6 * h0(TP^3(-1))", dim_hom, "computed"});
  d.result = forgetful_dim(dim_r, dim_hom);
  d.steps.push_back({"dim D^st(3,3,5) = 19 + 24 - 1", d.result, "computed"});
  return d;
}

}  // namespace dist3::moduli
