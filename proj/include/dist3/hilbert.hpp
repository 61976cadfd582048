#pragma once

#include <optional>
#include <vector>

#include "dist3/groebner.hpp"
#include "dist3/linalg.hpp"
#include "dist3/qpoly.hpp"

namespace dist3 {

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j] == gens[i] ? j < i : gens[j].divides(gens[i])) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline bool is_pure_power(const Monomial& m) {
  int support = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (m.e[static_cast<std::size_t>(i)] != 0) ++support;
  return support == 1;
}

}  // namespace detail

// Numerator N(t) of the Hilbert series N(t)/(1-t)^4 of the quotient by a
// monomial ideal in x0..x3. Recursive pivot splitting: for a variable x,
//   N(T) = N(T + (x)) + t * N(T : x).
inline QPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = detail::minimalize_monomials(std::move(gens));
  if (gens.empty()) return QPoly::constant(1);
  for (const auto& m : gens)
    if (m.is_one()) return QPoly();

  bool all_pure = true;
  for (const auto& m : gens)
    if (!detail::is_pure_power(m)) {
      all_pure = false;
      break;
    }
  if (all_pure) {
    // Pure powers of distinct variables form a regular sequence:
    // N = prod (1 - t^deg).
    QPoly prod = QPoly::constant(1);
    for (const auto& m : gens) {
      std::vector<mpq_class> c(m.degree() + 1, 0);
      c[0] = 1;
      c[m.degree()] = -1;
      prod = prod * QPoly(std::move(c));
    }
    return prod;
  }

  // Pivot on the most frequent variable among non-pure-power generators.
  int counts[kNumVars] = {};
  for (const auto& m : gens) {
    if (detail::is_pure_power(m)) continue;
    for (int i = 0; i < kNumVars; ++i)
      if (m.e[static_cast<std::size_t>(i)] != 0) ++counts[i];
  }
  int pivot = 0;
  for (int i = 1; i < kNumVars; ++i)
    if (counts[i] > counts[pivot]) pivot = i;

  std::vector<Monomial> plus = gens;
  plus.push_back(Monomial::var(pivot));
  std::vector<Monomial> quot;
  quot.reserve(gens.size());
  for (auto m : gens) {
    auto s = static_cast<std::size_t>(pivot);
    if (m.e[s] > 0) m.e[s] -= 1;
    quot.push_back(m);
  }
  QPoly shift({0, 1});  // t
  return hilbert_numerator(std::move(plus)) + shift * hilbert_numerator(std::move(quot));
}

// Hilbert polynomial from the series numerator: the coefficient of t^m in
// N(t)/(1-t)^4 is sum_i N_i * binom(m - i + 3, 3), and the binomial extends
// to a polynomial that matches the true coefficient for all m >= deg N - 3.
inline QPoly hilbert_polynomial_from_numerator(const QPoly& numerator) {
  QPoly p;
  for (int i = 0; i <= numerator.degree(); ++i) {
    mpq_class ci = numerator.coeff(i);
    if (ci == 0) continue;
    p = p + QPoly::binomial_shifted(3 - i, 3).scaled(ci);
  }
  return p;
}

// Exact value of the Hilbert function at degree m, from the series.
inline long hilbert_function_from_numerator(const QPoly& numerator, int m) {
  mpq_class v = 0;
  for (int i = 0; i <= numerator.degree() && i <= m; ++i)
    v += numerator.coeff(i) * QPoly::binomial_shifted(3, 3).eval(m - i);
  mpz_class z = v.get_num();
  if (v.get_den() != 1) throw Error("Hilbert function value is not an integer");
  return static_cast<long>(z.get_si());
}

// Degrees >= this bound are where the Hilbert polynomial agrees with the
// Hilbert function.
inline int hilbert_agreement_threshold(const QPoly& numerator) {
  return std::max(0, numerator.degree() - 3);
}

template <class F>
QPoly hilbert_series_numerator(const Ideal<F>& ideal, Budget& budget) {
  if (ideal.is_zero()) return QPoly::constant(1);
  if (!ideal.homogeneous())
    throw InputError("Hilbert data requires a homogeneous ideal");
  for (const auto& g : ideal.gens)
    if (!g.avoids(kAuxMask))
      throw InputError("Hilbert data is defined over the ambient ring x0..x3 only");
  auto gb = buchberger(ideal, MonomialOrder::degrevlex(), budget);
  return hilbert_numerator(gb.leading_monomials());
}

// Hilbert polynomial of the graded quotient by I, via the leading ideal
// (Macaulay's theorem).
template <class F>
QPoly hilbert_polynomial(const Ideal<F>& ideal, Budget& budget) {
  return hilbert_polynomial_from_numerator(hilbert_series_numerator(ideal, budget));
}

// Independent linear-algebra oracle: dim of the degree-m part of the
// quotient, as the monomial count minus the rank of the degree-m slice of
// the ideal. Does not touch Groebner bases or the series.
template <class F>
long hilbert_function(const Ideal<F>& ideal, int m) {
  if (m < 0) throw InputError("hilbert_function requires m >= 0");
  if (!ideal.homogeneous())
    throw InputError("Hilbert data requires a homogeneous ideal");
  auto monos = monomials_of_degree(m);
  long total = static_cast<long>(monos.size());
  if (ideal.is_zero()) return total;

  std::vector<std::pair<Monomial, std::size_t>> index;
  index.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) index.push_back({monos[i], i});

  auto col_of = [&](const Monomial& mo) -> std::size_t {
    for (const auto& [mm, idx] : index)
      if (mm == mo) return idx;
    throw Error("monomial index lookup failed");
  };

  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& g : ideal.gens) {
    int dg = g.total_degree();
    if (dg > m) continue;
    for (const auto& u : monomials_of_degree(m - dg)) {
      std::vector<typename F::Elem> row(monos.size(), ideal.field.zero());
      for (const auto& t : g.terms()) row[col_of(t.mono * u)] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return total;

  DenseMatrix<F> mat(ideal.field, rows.size(), monos.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) mat.at(r, c) = rows[r][c];
  return total - static_cast<long>(rank_destructive(mat));
}

// Invariants read off the Hilbert polynomial of a saturated ideal:
//   dim 1: P = deg(C) t + (1 - Pa),  dim 0: P = length,  empty: P = 0.
// The empty scheme carries the convention Pa = 1 (chi of the zero sheaf is 0).
struct SchemeInvariants {
  int proj_dim = -1;   // -1 empty, 0 points, 1 curve, ...
  long degree = 0;
  std::optional<long> genus;   // dim 1 only (and the empty convention)
  std::optional<long> length;  // dim <= 0 only
};

inline SchemeInvariants scheme_invariants_from_hp(const QPoly& hp) {
  auto as_long = [](const mpq_class& q) {
    if (q.get_den() != 1) throw Error("Hilbert polynomial coefficient is not an integer");
    return static_cast<long>(q.get_num().get_si());
  };
  SchemeInvariants inv;
  if (hp.is_zero()) {
    inv.proj_dim = -1;
    inv.degree = 0;
    inv.genus = 1;
    inv.length = 0;
    return inv;
  }
  inv.proj_dim = hp.degree();
  if (hp.degree() == 0) {
    inv.length = as_long(hp.coeff(0));
    inv.degree = *inv.length;
  } else if (hp.degree() == 1) {
    inv.degree = as_long(hp.coeff(1));
    inv.genus = as_long(mpq_class(1) - hp.eval(0));
  } else {
    // deg * t^dim / dim! leading behavior
    mpq_class lead = hp.leading();
    for (int i = 2; i <= hp.degree(); ++i) lead *= i;
    inv.degree = as_long(lead);
  }
  return inv;
}

template <class F>
SchemeInvariants scheme_invariants(const Ideal<F>& ideal, Budget& budget) {
  return scheme_invariants_from_hp(hilbert_polynomial(ideal, budget));
}

// Degree and arithmetic genus of a complete intersection of surfaces of
// degrees a and b; the classical oracle for the pencil fixtures.
inline std::pair<long, long> ci_invariants(long a, long b) {
  if (a < 1 || b < 1) throw InputError("ci_invariants requires degrees >= 1");
  return {a * b, a * b * (a + b - 4) / 2 + 1};
}

}  // namespace dist3
