#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dist3/hilbert.hpp"
#include "dist3/linalg.hpp"
#include "dist3/moduli.hpp"

namespace dist3 {

// A twisted 1-form w = A0 dx0 + ... + A3 dx3 on P^3 defining a codimension
// one distribution of degree d: the Ai are homogeneous of degree d+1 and the
// radial contraction x0 A0 + ... + x3 A3 vanishes identically.
template <class F>
struct TwistedForm {
  F field{};
  int degree = 0;
  std::array<Polynomial<F>, 4> coeff;
};

struct FieldSpec {
  bool prime = false;
  std::uint32_t p = 32003;

  static FieldSpec rational() { return {}; }
  static FieldSpec fp(std::uint32_t p) { return {true, p}; }
  static FieldSpec parse(const std::string& s) {
    if (s == "rational" || s.empty()) return rational();
    if (s.rfind("fp:", 0) == 0) {
      unsigned long v = std::stoul(s.substr(3));
      return fp(static_cast<std::uint32_t>(v));
    }
    throw InputError("unknown field spec '" + s + "' (expected rational or fp:<p>)");
  }
  std::string str() const { return prime ? "fp:" + std::to_string(p) : "rational"; }
};

struct AnalyzeOptions {
  FieldSpec field{};
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
};

enum class Stability { Stable, NotStable, NotApplicable };

inline std::string stability_str(Stability s) {
  switch (s) {
    case Stability::Stable:
      return "stable";
    case Stability::NotStable:
      return "not-stable";
    default:
      return "not-applicable";
  }
}

struct ChernTriple {
  long c1 = 0, c2 = 0, c3 = 0;
  bool operator==(const ChernTriple&) const = default;
};

struct SingularSchemeReport {
  std::vector<std::string> raw_ideal;
  std::vector<std::string> saturated_ideal;
  std::vector<std::string> curve_ideal;     // empty when there is no curve
  std::vector<std::string> residual_ideal;  // reduced basis; {"1"} when empty
  bool curve_empty = true;
  int saturated_dim = -1;
  int residual_dim = -1;
  long curve_degree = 0;
  long curve_genus = 1;  // convention for the empty curve
  long residual_length = 0;
};

struct DistributionReport {
  int degree = 0;
  ChernTriple chern{};
  SingularSchemeReport scheme;
  Stability stability = Stability::NotApplicable;
  long h0_tangent_value = 0;
  bool integrable = false;
  bool hilbert_consistent = false;
  std::string tangent_hp_formula;   // from the Chern data
  std::string tangent_hp_sequence;  // chi(TP3(t)) - chi(I_Z(t+d+2))
  std::string field_name;
  bool probabilistic_field = false;
  std::uint64_t seed = 0;
};

// ---- Chern / Hilbert arithmetic -------------------------------------------

inline ChernTriple chern_from_curve(int d, long deg_c, long genus) {
  long dd = d;
  return ChernTriple{2 - dd, dd * dd + 2 - deg_c,
                     dd * dd * dd + 2 * dd * dd + 2 * dd - deg_c * (3 * dd - 2) + 2 * genus - 2};
}

// chi(T_D(t)) for a degree-d distribution with c2 = c, c3 = l:
//   binom(t+3,3) + binom(t+5-d,3) - c (t+2) + (l + (d-2) c) / 2.
// For d = 2, 3 this is literally the classical closed form
//   2 binom(t+3,3) + (t+2)(t+1)(2-d)/2 - (t+2) c + (l + (d-2) c)/2;
// the binomial version extends it to every degree consistently with
// Riemann-Roch on the twisted Chern character.
inline QPoly tangent_hilbert_polynomial(int d, long c, long l) {
  QPoly p = QPoly::binomial_shifted(3, 3) + QPoly::binomial_shifted(5 - d, 3);
  p = p - QPoly({2 * mpq_class(c), mpq_class(c)});
  mpq_class tail(l + (d - 2) * c, 2);
  tail.canonicalize();
  return p + QPoly::constant(tail);
}

// Both sides of the Hilbert-polynomial identity forced by
// 0 -> T_D -> TP^3 -> I_Z(d+2) -> 0, with chi(I_Z(m)) computed from the
// saturated singular ideal.
struct HilbertConsistency {
  bool consistent = false;
  QPoly formula_side;
  QPoly sequence_side;
};

inline HilbertConsistency hilbert_consistency_check(int d, const ChernTriple& chern,
                                                    const QPoly& saturated_quotient_hp) {
  HilbertConsistency hc;
  hc.formula_side = tangent_hilbert_polynomial(d, chern.c2, chern.c3);
  hc.sequence_side = moduli::chi_tp3() - QPoly::binomial_shifted(d + 5, 3) +
                     saturated_quotient_hp.shifted(d + 2);
  hc.consistent = hc.formula_side == hc.sequence_side;
  return hc;
}

// ---- Validation and constructors ------------------------------------------

template <class F>
std::vector<std::string> validate(const TwistedForm<F>& w) {
  std::vector<std::string> problems;
  bool all_zero = true;
  for (int i = 0; i < 4; ++i) {
    const auto& a = w.coeff[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    all_zero = false;
    if (!a.homogeneous())
      problems.push_back("coefficient A" + std::to_string(i) + " is not homogeneous");
    else if (a.total_degree() != w.degree + 1)
      problems.push_back("coefficient A" + std::to_string(i) + " has degree " +
                         std::to_string(a.total_degree()) + ", expected " +
                         std::to_string(w.degree + 1));
  }
  if (all_zero) {
    problems.push_back("zero form");
    return problems;
  }
  if (w.degree < 0) problems.push_back("degree must be non-negative");

  auto contraction = Polynomial<F>::zero(w.field);
  for (int i = 0; i < 4; ++i)
    contraction = contraction + Polynomial<F>::variable(w.field, i) *
                                    w.coeff[static_cast<std::size_t>(i)];
  if (!contraction.is_zero())
    problems.push_back("Euler relation fails: x0*A0 + x1*A1 + x2*A2 + x3*A3 = " +
                       contraction.str());
  return problems;
}

template <class F>
TwistedForm<F> make_form(F field, std::array<Polynomial<F>, 4> coeff) {
  int deg = -1;
  for (const auto& a : coeff) deg = std::max(deg, a.total_degree());
  TwistedForm<F> w{field, deg - 1, std::move(coeff)};
  auto problems = validate(w);
  if (!problems.empty()) {
    std::string msg = "invalid twisted form:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InputError(msg);
  }
  return w;
}

// Plucker coefficients B_ij, 0 <= i < j <= 3, all homogeneous of one degree
// d, span the forms with the Euler relation built in:
//   w = sum B_ij (x_i dx_j - x_j dx_i).
template <class F>
TwistedForm<F> from_plucker(F field, const std::array<Polynomial<F>, 6>& b) {
  auto idx = [](int i, int j) {  // (0,1)(0,2)(0,3)(1,2)(1,3)(2,3)
    static const int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[i][j];
  };
  std::array<Polynomial<F>, 4> a;
  for (int k = 0; k < 4; ++k) {
    auto acc = Polynomial<F>::zero(field);
    for (int i = 0; i < k; ++i)
      acc = acc + b[static_cast<std::size_t>(idx(i, k))] * Polynomial<F>::variable(field, i);
    for (int j = k + 1; j < 4; ++j)
      acc = acc - b[static_cast<std::size_t>(idx(k, j))] * Polynomial<F>::variable(field, j);
    a[static_cast<std::size_t>(k)] = acc;
  }
  return make_form(field, std::move(a));
}

// The logarithmic pencil construction: for homogeneous f, g the form
//   w = deg(g) g df - deg(f) f dg
// satisfies the Euler relation and defines a degree deg(f)+deg(g)-2
// distribution (integrable: it has first integral f^deg(g)/g^deg(f)).
template <class F>
TwistedForm<F> pencil_form(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("pencil_form requires nonzero polynomials");
  if (!f.homogeneous() || !g.homogeneous())
    throw InputError("pencil_form requires homogeneous polynomials");
  const F& field = f.field();
  auto df = field.from_int(f.total_degree());
  auto dg = field.from_int(g.total_degree());
  std::array<Polynomial<F>, 4> a;
  for (int i = 0; i < 4; ++i)
    a[static_cast<std::size_t>(i)] =
        g.scaled(dg) * f.derivative(i) - f.scaled(df) * g.derivative(i);
  return make_form(field, std::move(a));
}

// Contraction of the coordinate volume form by the radial field and the two
// given polynomial vector fields (u linear, v quadratic): the tangent sheaf
// of the resulting degree-3 form contains the section u, so it splits off a
// trivial summand.
template <class F>
TwistedForm<F> split_form(const std::array<Polynomial<F>, 4>& u,
                          const std::array<Polynomial<F>, 4>& v) {
  const F* field = nullptr;
  for (const auto& p : u)
    if (!p.is_zero()) field = &p.field();
  if (!field) throw InputError("split_form: zero vector field");

  auto minor3 = [&](int drop) {
    // det of rows (x, u, v) with column `drop` removed
    int cols[3], n = 0;
    for (int c = 0; c < 4; ++c)
      if (c != drop) cols[n++] = c;
    auto x = [&](int c) { return Polynomial<F>::variable(*field, c); };
    auto det = Polynomial<F>::zero(*field);
    static const int perm[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                   {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
    for (const auto& pr : perm) {
      auto prod = x(cols[pr[0]]) * u[static_cast<std::size_t>(cols[pr[1]])] *
                  v[static_cast<std::size_t>(cols[pr[2]])];
      det = pr[3] > 0 ? det + prod : det - prod;
    }
    return det;
  };

  std::array<Polynomial<F>, 4> a;
  bool all_zero = true;
  for (int l = 0; l < 4; ++l) {
    auto m = minor3(l);
    if (l % 2 == 1) m = -m;
    if (!m.is_zero()) all_zero = false;
    a[static_cast<std::size_t>(l)] = m;
  }
  if (all_zero) throw InputError("split_form: degenerate input produced the zero form");
  return make_form(*field, std::move(a));
}

// ---- Seeded generic constructors ------------------------------------------

template <class F>
Polynomial<F> random_homogeneous(F field, int degree, int max_terms, int coeff_bound,
                                 std::mt19937_64& rng) {
  auto monos = monomials_of_degree(degree);
  std::vector<typename Polynomial<F>::Term> terms;
  for (int k = 0; k < max_terms; ++k) {
    const Monomial& m = monos[rng() % monos.size()];
    long c = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(coeff_bound));
    if (rng() & 1) c = -c;
    terms.push_back({m, field.from_int(c)});
  }
  return Polynomial<F>::from_terms(field, MonomialOrder::degrevlex(), std::move(terms));
}

template <class F>
TwistedForm<F> random_plucker_form(F field, int d, std::uint64_t seed, int max_terms = 3,
                                   int coeff_bound = 9) {
  std::mt19937_64 rng(seed);
  std::array<Polynomial<F>, 6> b;
  for (auto& p : b) p = random_homogeneous(field, d, max_terms, coeff_bound, rng);
  return from_plucker(field, b);
}

template <class F>
TwistedForm<F> random_split_form(F field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<Polynomial<F>, 4> u, v;
  for (auto& p : u) p = random_homogeneous(field, 1, 4, 9, rng);
  for (auto& p : v) p = random_homogeneous(field, 2, 6, 9, rng);
  return split_form(u, v);
}

// ---- Analysis --------------------------------------------------------------

template <class F>
Ideal<F> singular_ideal(const TwistedForm<F>& w) {
  std::vector<Polynomial<F>> gens(w.coeff.begin(), w.coeff.end());
  return Ideal<F>(w.field, std::move(gens));
}

// h^0(T_D(k)) by syzygy linear algebra through the Euler sequence: vector
// fields are 4-tuples of degree k+1 forms modulo radial multiples, and
// sections of T_D(k) are the tuples contracted to zero by w.
template <class F>
long h0_tangent(const TwistedForm<F>& w, int k) {
  if (k < -1) throw InputError("h0_tangent requires twist >= -1");
  auto cols_monos = monomials_of_degree(k + 1);
  auto rows_monos = monomials_of_degree(w.degree + k + 2);
  std::size_t n1 = cols_monos.size();

  std::vector<std::pair<Monomial, std::size_t>> row_index;
  row_index.reserve(rows_monos.size());
  for (std::size_t i = 0; i < rows_monos.size(); ++i) row_index.push_back({rows_monos[i], i});
  auto row_of = [&](const Monomial& m) -> std::size_t {
    for (const auto& [mm, idx] : row_index)
      if (mm == m) return idx;
    throw Error("monomial index lookup failed");
  };

  DenseMatrix<F> mat(w.field, rows_monos.size(), 4 * n1);
  for (int i = 0; i < 4; ++i) {
    const auto& a = w.coeff[static_cast<std::size_t>(i)];
    for (std::size_t c = 0; c < n1; ++c) {
      for (const auto& t : a.terms()) {
        std::size_t r = row_of(t.mono * cols_monos[c]);
        mat.at(r, static_cast<std::size_t>(i) * n1 + c) =
            w.field.add(mat.at(r, static_cast<std::size_t>(i) * n1 + c), t.coeff);
      }
    }
  }
  long kernel = static_cast<long>(kernel_dim_destructive(mat));
  long radial = k >= 0 ? static_cast<long>(monomials_of_degree(k).size()) : 0;
  return kernel - radial;
}

// Frobenius integrability via w ^ dw = 0: the four coefficients of the
// 3-form must vanish identically.
template <class F>
bool is_integrable(const TwistedForm<F>& w) {
  auto curl = [&](int i, int j) {
    return w.coeff[static_cast<std::size_t>(j)].derivative(i) -
           w.coeff[static_cast<std::size_t>(i)].derivative(j);
  };
  static const int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& tr : triples) {
    int i = tr[0], j = tr[1], k = tr[2];
    auto coeff = w.coeff[static_cast<std::size_t>(i)] * curl(j, k) -
                 w.coeff[static_cast<std::size_t>(j)] * curl(i, k) +
                 w.coeff[static_cast<std::size_t>(k)] * curl(i, j);
    if (!coeff.is_zero()) return false;
  }
  return true;
}

// Full pipeline: saturate the singular ideal, reject non-distributions,
// split the curve from the residual points, and assemble Chern data,
// stability, integrability, and the Hilbert consistency flag.
template <class F>
DistributionReport analyze(const TwistedForm<F>& w, const AnalyzeOptions& opts) {
  auto problems = validate(w);
  if (!problems.empty()) {
    std::string msg = "invalid twisted form:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InputError(msg);
  }

  Budget budget{opts.budget, 0};
  DistributionReport rep;
  rep.degree = w.degree;
  rep.field_name = w.field.name();
  rep.probabilistic_field = F::is_prime_field;
  rep.seed = opts.seed;

  Ideal<F> raw = singular_ideal(w);
  rep.scheme.raw_ideal = raw.gen_strings();

  Ideal<F> sat = saturate_irrelevant(raw, budget);
  sat.gens = reduced_gens(sat, budget);
  rep.scheme.saturated_ideal = sat.gen_strings();

  QPoly sat_hp = hilbert_polynomial(sat, budget);
  int dim = sat_hp.is_zero() ? -1 : sat_hp.degree();
  rep.scheme.saturated_dim = dim;
  if (dim >= 2)
    throw NotDistributionError(
        "the singular locus has dimension >= 2 (the coefficients share a common factor), "
        "so the normal sheaf is not torsion-free");

  long deg_c = 0, genus = 1;
  Ideal<F> residual = sat;
  if (dim == 1) {
    Ideal<F> curve = top_dim_part(sat, opts.seed, budget);
    auto curve_inv = scheme_invariants(curve, budget);
    deg_c = curve_inv.degree;
    genus = curve_inv.genus.value();
    rep.scheme.curve_ideal = curve.gen_strings();
    rep.scheme.curve_empty = false;
    rep.scheme.curve_degree = deg_c;
    rep.scheme.curve_genus = genus;
    residual = saturate(sat, curve, budget);
    residual.gens = reduced_gens(residual, budget);
  } else {
    rep.scheme.curve_empty = true;
    rep.scheme.curve_degree = 0;
    rep.scheme.curve_genus = 1;
  }

  auto res_inv = scheme_invariants(residual, budget);
  if (res_inv.proj_dim > 0)
    throw Error("residual scheme has positive dimension; curve extraction failed");
  rep.scheme.residual_ideal =
      residual.is_zero() ? std::vector<std::string>{} : residual.gen_strings();
  rep.scheme.residual_dim = res_inv.proj_dim;
  rep.scheme.residual_length = res_inv.length.value_or(0);

  rep.chern = chern_from_curve(w.degree, deg_c, genus);

  auto hc = hilbert_consistency_check(w.degree, rep.chern, sat_hp);
  rep.hilbert_consistent = hc.consistent;
  rep.tangent_hp_formula = hc.formula_side.str();
  rep.tangent_hp_sequence = hc.sequence_side.str();

  rep.h0_tangent_value = h0_tangent(w, 0);
  if (w.degree == 3)
    rep.stability = rep.h0_tangent_value == 0 ? Stability::Stable : Stability::NotStable;
  else
    rep.stability = Stability::NotApplicable;

  rep.integrable = is_integrable(w);
  return rep;
}

}  // namespace dist3
