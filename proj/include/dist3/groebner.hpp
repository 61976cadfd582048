#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dist3/ideal.hpp"
#include "dist3/monomial.hpp"
#include "dist3/polynomial.hpp"

namespace dist3 {

// Work cap shared by every Groebner-level operation in one computation.
// Exact arithmetic can blow up; when it does we fail loudly instead of
// hanging. One unit is one leading-term cancellation.
struct Budget {
  std::uint64_t limit = 1'000'000;
  std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > limit)
      throw ResourceLimitError("S-pair reduction budget exceeded (limit " +
                               std::to_string(limit) + ")");
  }
};

template <class F>
struct GroebnerBasis {
  F field{};
  MonomialOrder order{};
  // Reduced basis: monic, no monomial divisible by another element's leading
  // monomial, sorted ascending in the order.
  std::vector<Polynomial<F>> elems;

  bool contains_unit() const {
    return elems.size() == 1 && elems.front().leading_monomial().is_one();
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> ms;
    ms.reserve(elems.size());
    for (const auto& g : elems) ms.push_back(g.leading_monomial());
    return ms;
  }
};

namespace detail {

// Divide out the rational content and make the leading coefficient positive,
// so intermediate basis elements stay integral and small. Prime-field
// elements are just made monic.
inline QQPoly normalize_gen(const QQPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading_coeff() < 0) factor = -factor;
  return p.scaled(factor);
}

inline FpPoly normalize_gen(const FpPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.field().inv(p.leading_coeff()));
}

template <class F>
Polynomial<F> make_monic(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.field().inv(p.leading_coeff()));
}

template <class F>
std::optional<std::size_t> find_reducer(const Monomial& m,
                                        const std::vector<Polynomial<F>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].leading_monomial().divides(m)) return i;
  return std::nullopt;
}

// Top-reduction up to a nonzero scalar: over the rationals the working
// polynomial is cross-scaled instead of divided, which keeps coefficients
// integral. Only the zero test and the monomials of the result matter to the
// caller.
template <class F>
Polynomial<F> top_reduce_pseudo(Polynomial<F> w, const std::vector<Polynomial<F>>& basis,
                                Budget& budget) {
  const F& field = w.field();
  unsigned steps = 0;
  while (!w.is_zero()) {
    auto idx = find_reducer(w.leading_monomial(), basis);
    if (!idx) break;
    const auto& g = basis[*idx];
    Monomial shift = w.leading_monomial() / g.leading_monomial();
    budget.charge();
    if constexpr (F::is_prime_field) {
      auto c = field.neg(field.div(w.leading_coeff(), g.leading_coeff()));
      w = w.axpy(c, shift, g);
    } else {
      auto scaled = w.scaled(g.leading_coeff());
      w = scaled.axpy(field.neg(w.leading_coeff()), shift, g);
      if ((++steps & 31u) == 0) w = normalize_gen(w);  // keep coefficients small
    }
  }
  return w;
}

}  // namespace detail

// Full exact division: no monomial of the result is divisible by any leading
// monomial of the divisors, and p - result lies in the ideal they generate.
template <class F>
Polynomial<F> divide_full(const Polynomial<F>& p, const std::vector<Polynomial<F>>& divisors,
                          Budget& budget) {
  const F& field = p.field();
  Polynomial<F> w = p;
  std::vector<typename Polynomial<F>::Term> remainder;
  while (!w.is_zero()) {
    auto idx = detail::find_reducer(w.leading_monomial(), divisors);
    if (!idx) {
      remainder.push_back(w.leading());
      w = w.without_leading();
      continue;
    }
    const auto& g = divisors[*idx];
    Monomial shift = w.leading_monomial() / g.leading_monomial();
    auto c = field.neg(field.div(w.leading_coeff(), g.leading_coeff()));
    budget.charge();
    w = w.axpy(c, shift, g);
  }
  return Polynomial<F>::from_sorted_terms(field, p.order(), std::move(remainder));
}

// The unique reduced Groebner basis of I under `order`.
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, MonomialOrder order, Budget& budget) {
  if (ideal.is_zero()) throw InputError("Groebner basis of the zero ideal");
  const F& field = ideal.field;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned deg;
  };
  auto pair_less = [order](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int r = cmp(a.lcm, b.lcm, order);
    if (r != 0) return r < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> pending(pair_less);

  std::vector<Polynomial<F>> basis;

  // Gebauer-Moeller update: installs h, pruning pairs by the chain criterion
  // (M and B) and the coprime-leading-term criterion (F).
  auto update = [&](const Polynomial<F>& h) {
    const Monomial& ht = h.leading_monomial();
    std::size_t t = basis.size();

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Monomial& gi = basis[i].leading_monomial();
      cands.push_back({i, lcm(ht, gi), ht.coprime(gi)});
    }

    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = cands[a].coprime;
      if (!keep) {
        bool dominated = false;
        for (std::size_t b = a + 1; b < cands.size() && !dominated; ++b)
          if (cands[b].lcm.divides(cands[a].lcm)) dominated = true;
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
          if (kept[b].lcm.divides(cands[a].lcm)) dominated = true;
        keep = !dominated;
      }
      if (keep) kept.push_back(cands[a]);
    }

    for (auto it = pending.begin(); it != pending.end();) {
      const Monomial& l = it->lcm;
      bool drop = ht.divides(l) &&
                  !(lcm(basis[it->i].leading_monomial(), ht) == l) &&
                  !(lcm(ht, basis[it->j].leading_monomial()) == l);
      it = drop ? pending.erase(it) : ++it;
    }

    for (const auto& k : kept) {
      if (k.coprime) continue;
      pending.insert({k.i, t, k.lcm, k.lcm.degree()});
    }
    basis.push_back(h);
  };

  for (const auto& g : ideal.gens) {
    auto p = detail::normalize_gen(g.with_order(order));
    if (!p.is_zero()) update(p);
  }

  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    budget.charge();

    const auto& f = basis[pr.i];
    const auto& g = basis[pr.j];
    auto s = f.mono_scaled(pr.lcm / f.leading_monomial(), g.leading_coeff())
                 .axpy(field.neg(f.leading_coeff()), pr.lcm / g.leading_monomial(), g);
    s = detail::top_reduce_pseudo(std::move(s), basis, budget);
    if (s.is_zero()) continue;
    s = detail::normalize_gen(divide_full(s, basis, budget));
    update(s);
  }

  // Minimalize, then tail-reduce each survivor against the others.
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& mi = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = basis[j].leading_monomial();
      if (mj == mi ? j < i : mj.divides(mi)) redundant = true;
    }
    if (!redundant) minimal.push_back(detail::make_monic(basis[i]));
  }

  GroebnerBasis<F> out{field, order, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.elems.push_back(others.empty() ? minimal[i] : divide_full(minimal[i], others, budget));
  }
  std::sort(out.elems.begin(), out.elems.end(),
            [&order](const Polynomial<F>& a, const Polynomial<F>& b) {
              return cmp(a.leading_monomial(), b.leading_monomial(), order) < 0;
            });
  return out;
}

// Remainder of p modulo the basis; idempotent and linear over the field.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& gb, Budget& budget) {
  return divide_full(p.with_order(gb.order), gb.elems, budget);
}

template <class F>
bool in_ideal(const Polynomial<F>& p, const GroebnerBasis<F>& gb, Budget& budget) {
  return normal_form(p, gb, budget).is_zero();
}

// Checks the Buchberger criterion: every S-polynomial reduces to zero.
template <class F>
bool verify_groebner(const GroebnerBasis<F>& gb, Budget& budget) {
  const auto& e = gb.elems;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      Monomial l = lcm(e[i].leading_monomial(), e[j].leading_monomial());
      auto s = e[i].mono_scaled(l / e[i].leading_monomial(), e[j].leading_coeff())
                   .axpy(e[i].field().neg(e[i].leading_coeff()), l / e[j].leading_monomial(),
                         e[j]);
      if (!divide_full(s, e, budget).is_zero()) return false;
    }
  return true;
}

// Canonical generators: the reduced degrevlex Groebner basis.
template <class F>
std::vector<Polynomial<F>> reduced_gens(const Ideal<F>& ideal, Budget& budget) {
  if (ideal.is_zero()) return {};
  return buchberger(ideal, MonomialOrder::degrevlex(), budget).elems;
}

template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b, Budget& budget) {
  auto ga = reduced_gens(a, budget);
  auto gb = reduced_gens(b, budget);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

// Generators of I restricted to the subring avoiding `var_mask`, via a block
// elimination order. The selected elements form a Groebner basis of the
// elimination ideal.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::uint8_t var_mask, Budget& budget) {
  if (var_mask == 0 || ideal.is_zero()) return ideal;
  auto gb = buchberger(ideal, MonomialOrder::block(var_mask), budget);
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.elems)
    if (g.avoids(var_mask)) kept.push_back(g.with_order(MonomialOrder::degrevlex()));
  return Ideal<F>(ideal.field, std::move(kept));
}

// I cap J by the auxiliary-variable trick: eliminate t from t*I + (1-t)*J.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b, Budget& budget) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const F& field = a.field;
  auto order = MonomialOrder::block(kAuxMask);
  auto t = Polynomial<F>::variable(field, kAuxVar, order);
  auto one_minus_t = Polynomial<F>::constant(field, field.one(), order) - t;
  std::vector<Polynomial<F>> gens;
  gens.reserve(a.gens.size() + b.gens.size());
  for (const auto& f : a.gens) gens.push_back(t * f.with_order(order));
  for (const auto& g : b.gens) gens.push_back(one_minus_t * g.with_order(order));
  return eliminate(Ideal<F>(field, std::move(gens)), kAuxMask, budget);
}

// Exact quotient f / g; throws if g does not divide f.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  const F& field = f.field();
  Polynomial<F> w = f;
  std::vector<typename Polynomial<F>::Term> quotient;
  while (!w.is_zero()) {
    if (!g.leading_monomial().divides(w.leading_monomial()))
      throw Error("exact polynomial division left a remainder");
    Monomial m = w.leading_monomial() / g.leading_monomial();
    auto c = field.div(w.leading_coeff(), g.leading_coeff());
    quotient.push_back({m, c});
    w = w.axpy(field.neg(c), m, g);
  }
  return Polynomial<F>::from_sorted_terms(field, f.order(), std::move(quotient));
}

namespace detail {

template <class F>
Ideal<F> colon_principal(const Ideal<F>& ideal, const Polynomial<F>& g, Budget& budget) {
  if (g.is_zero()) throw InputError("colon by a zero polynomial");
  if (ideal.is_zero()) return ideal;
  if (g.leading_monomial().is_one() && g.size() == 1)  // unit: I : (c) = I
    return ideal;
  Ideal<F> gi(ideal.field, {g});
  Ideal<F> meet = intersect(ideal, gi, budget);
  std::vector<Polynomial<F>> quotients;
  quotients.reserve(meet.gens.size());
  for (const auto& k : meet.gens) quotients.push_back(divide_exact(k, g));
  return Ideal<F>(ideal.field, std::move(quotients));
}

}  // namespace detail

// I : J = {p : p*J is contained in I}.
template <class F>
Ideal<F> colon(const Ideal<F>& ideal, const Ideal<F>& j, Budget& budget) {
  if (j.is_zero()) throw InputError("colon by the zero ideal");
  if (ideal.is_zero()) return ideal;
  std::optional<Ideal<F>> acc;
  for (const auto& g : j.gens) {
    auto part = detail::colon_principal(ideal, g, budget);
    acc = acc ? intersect(*acc, part, budget) : part;
  }
  return *acc;
}

// I : J^infinity, by iterating the colon until it stabilizes. The fixpoint is
// detected on reduced Groebner bases, which are canonical.
template <class F>
Ideal<F> saturate(const Ideal<F>& ideal, const Ideal<F>& j, Budget& budget) {
  if (j.is_zero()) throw InputError("saturation by the zero ideal");
  if (ideal.is_zero()) return ideal;
  Ideal<F> cur(ideal.field, reduced_gens(ideal, budget));
  for (;;) {
    Ideal<F> next = colon(cur, j, budget);
    next.gens = reduced_gens(next, budget);
    if (next.gens.size() == cur.gens.size()) {
      bool same = true;
      for (std::size_t i = 0; i < next.gens.size() && same; ++i)
        same = next.gens[i] == cur.gens[i];
      if (same) return cur;
    }
    cur = std::move(next);
  }
}

// Saturation with respect to the irrelevant ideal (x0..x3): the largest ideal
// cutting out the same projective scheme.
template <class F>
Ideal<F> saturate_irrelevant(const Ideal<F>& ideal, Budget& budget) {
  if (ideal.is_zero()) return ideal;
  return saturate(ideal, irrelevant_ideal(ideal.field), budget);
}

// Affine Krull dimension of R/(monomial ideal): the largest set S of
// variables such that no generator is supported inside S. Returns -1 when a
// unit is among the generators.
inline int affine_dim_monomial(const std::vector<Monomial>& lms,
                               std::uint8_t var_mask = kAmbientMask) {
  int best = -1;
  for (std::uint32_t s = 0; s <= var_mask; ++s) {
    if (s & ~static_cast<std::uint32_t>(var_mask)) continue;
    bool valid = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (int i = 0; i < kNumVars && inside; ++i)
        if (m.e[static_cast<std::size_t>(i)] != 0 && !(s >> i & 1)) inside = false;
      if (inside) {
        valid = false;
        break;
      }
    }
    if (valid) best = std::max(best, static_cast<int>(std::popcount(s)));
  }
  return best;
}

// Dimension of Proj of the quotient by a homogeneous ideal: -1 for the empty
// scheme, 0 for points, 1 for curves, 2 for surfaces.
template <class F>
int proj_dim(const GroebnerBasis<F>& gb) {
  if (gb.contains_unit()) return -1;
  return affine_dim_monomial(gb.leading_monomials()) - 1;
}

template <class F>
int proj_dim(const Ideal<F>& ideal, Budget& budget) {
  if (ideal.is_zero()) return 3;
  return proj_dim(buchberger(ideal, MonomialOrder::degrevlex(), budget));
}

namespace detail {

// Random element of I of degree `target`, as a field-coefficient combination
// of monomial multiples of the generators. Sparse mode lifts each generator
// by a single random monomial; dense mode uses the whole degree slice.
template <class F>
Polynomial<F> random_element(const std::vector<Polynomial<F>>& gens, int target,
                             std::mt19937_64& rng, bool dense) {
  const F& field = gens.front().field();
  Polynomial<F> acc = Polynomial<F>::zero(field);
  auto random_coeff = [&]() {
    if constexpr (F::is_prime_field)
      return field.from_int(static_cast<long>(rng() % field.p));
    else
      return field.from_int(static_cast<long>(rng() % 19) - 9);
  };
  for (const auto& g : gens) {
    int gap = target - g.total_degree();
    if (gap < 0) continue;
    auto monos = monomials_of_degree(gap);
    if (dense) {
      for (const auto& u : monos) acc = acc + g.mono_scaled(u, random_coeff());
    } else {
      const auto& u = monos[rng() % monos.size()];
      acc = acc + g.mono_scaled(u, random_coeff());
    }
  }
  return acc;
}

}  // namespace detail

// The equidimensional dimension-1 part of a saturated ideal, via the liaison
// double colon J : (J : I) for a complete intersection J = (f, g) inside I.
// f and g are random combinations drawn from a seeded generator, retried a
// bounded number of times, so results are reproducible.
template <class F>
Ideal<F> top_dim_part(const Ideal<F>& ideal, std::uint64_t seed, Budget& budget,
                      int max_retries = 8) {
  if (ideal.is_zero()) throw InputError("top_dim_part of the zero ideal");
  auto gb = buchberger(ideal, MonomialOrder::degrevlex(), budget);
  if (proj_dim(gb) != 1)
    throw InputError("top_dim_part: dimension precondition violated (expected a curve)");

  int target = 0;
  for (const auto& g : gb.elems) target = std::max(target, g.total_degree());

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    bool dense = attempt >= max_retries / 2;
    auto f = detail::random_element(gb.elems, target, rng, dense);
    auto g = detail::random_element(gb.elems, target, rng, dense);
    if (f.is_zero() || g.is_zero()) continue;
    Ideal<F> ci(ideal.field, {f, g});
    if (proj_dim(ci, budget) != 1) continue;  // not a regular sequence
    Ideal<F> linked = colon(ci, ideal, budget);
    Ideal<F> top = colon(ci, linked, budget);
    top.gens = reduced_gens(top, budget);
    if (proj_dim(Ideal<F>(ideal.field, top.gens), budget) != 1) continue;
    return top;
  }
  throw Error("top_dim_part: no regular sequence found after " + std::to_string(max_retries) +
              " attempts (degenerate input)");
}

}  // namespace dist3
