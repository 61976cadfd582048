#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dist3/errors.hpp"
#include "dist3/field.hpp"
#include "dist3/monomial.hpp"

namespace dist3 {

// Multivariate polynomial over the field F. Terms are kept strictly
// descending in the polynomial's monomial order, with no zero coefficients,
// so equal polynomials have identical representations and printing is
// deterministic. Values are immutable in spirit: every operation returns a
// fresh polynomial.
template <class F>
class Polynomial {
 public:
  using Coeff = typename F::Elem;
  struct Term {
    Monomial mono;
    Coeff coeff;
  };

  Polynomial() = default;
  explicit Polynomial(F field, MonomialOrder order = MonomialOrder::degrevlex())
      : field_(field), order_(order) {}

  static Polynomial zero(F field, MonomialOrder order = MonomialOrder::degrevlex()) {
    return Polynomial(field, order);
  }
  static Polynomial constant(F field, Coeff c,
                             MonomialOrder order = MonomialOrder::degrevlex()) {
    Polynomial p(field, order);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial::one(), c});
    return p;
  }
  static Polynomial monomial(F field, Monomial m, Coeff c,
                             MonomialOrder order = MonomialOrder::degrevlex()) {
    Polynomial p(field, order);
    if (!field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(F field, int i,
                             MonomialOrder order = MonomialOrder::degrevlex()) {
    return monomial(field, Monomial::var(i), field.one(), order);
  }

  // Builds from an arbitrary term list: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(F field, MonomialOrder order, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
      return cmp(a.mono, b.mono, order) > 0;
    });
    Polynomial p(field, order);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
        if (field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!field.is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  // Terms already strictly descending in `order`, nonzero. Used by the
  // division algorithm to avoid re-sorting.
  static Polynomial from_sorted_terms(F field, MonomialOrder order, std::vector<Term> terms) {
    Polynomial p(field, order);
    p.terms_ = std::move(terms);
    return p;
  }

  const F& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }

  Polynomial without_leading() const {
    Polynomial p(field_, order_);
    p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
  }

  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    return from_terms(field_, order, terms_);
  }

  // Largest total degree among terms; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }
  bool homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.front().mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }
  // True when no variable from `mask` occurs in any term.
  bool avoids(std::uint8_t mask) const {
    for (const auto& t : terms_)
      if (!t.mono.avoids(mask)) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial p(field_, order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, field_.neg(t.coeff)});
    return p;
  }

  Polynomial operator+(const Polynomial& q) const {
    check_compatible(q);
    return merged(q, /*negate_rhs=*/false);
  }
  Polynomial operator-(const Polynomial& q) const {
    check_compatible(q);
    return merged(q, /*negate_rhs=*/true);
  }

  Polynomial operator*(const Polynomial& q) const {
    check_compatible(q);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * q.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : q.terms_)
        prod.push_back({a.mono * b.mono, field_.mul(a.coeff, b.coeff)});
    return from_terms(field_, order_, std::move(prod));
  }

  Polynomial scaled(const Coeff& c) const {
    Polynomial p(field_, order_);
    if (field_.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
    return p;
  }

  Polynomial mono_scaled(const Monomial& m, const Coeff& c) const {
    Polynomial p(field_, order_);
    if (field_.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return p;
  }

  // s * (*this) + c * x^m * g in one merge of the sorted term lists; the
  // monomial order is multiplicative, so shifting g by m preserves descending
  // order. This is the reduction workhorse. `move_self` recycles the
  // coefficients of *this (valid only when the caller discards it).
  Polynomial scale_axpy(const Coeff& s, const Coeff& c, const Monomial& m, const Polynomial& g,
                        bool move_self = false) const {
    check_compatible(g);
    bool scale_one = field_.is_one(s);
    Polynomial p(field_, order_);
    p.terms_.reserve(terms_.size() + g.terms_.size());
    auto self_coeff = [&](std::size_t i) -> Coeff {
      Coeff v = move_self ? std::move(const_cast<Polynomial*>(this)->terms_[i].coeff)
                          : terms_[i].coeff;
      return scale_one ? v : field_.mul(v, s);
    };
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
      Monomial gm = g.terms_[j].mono * m;
      int r = cmp(terms_[i].mono, gm, order_);
      if (r > 0) {
        p.terms_.push_back({terms_[i].mono, self_coeff(i)});
        ++i;
      } else if (r < 0) {
        Coeff v = field_.mul(c, g.terms_[j].coeff);
        if (!field_.is_zero(v)) p.terms_.push_back({gm, std::move(v)});
        ++j;
      } else {
        Coeff v = field_.add(self_coeff(i), field_.mul(c, g.terms_[j].coeff));
        if (!field_.is_zero(v)) p.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back({terms_[i].mono, self_coeff(i)});
    for (; j < g.terms_.size(); ++j) {
      Coeff v = field_.mul(c, g.terms_[j].coeff);
      if (!field_.is_zero(v)) p.terms_.push_back({g.terms_[j].mono * m, std::move(v)});
    }
    return p;
  }

  Polynomial axpy(const Coeff& c, const Monomial& m, const Polynomial& g) const {
    return scale_axpy(field_.one(), c, m, g);
  }

  Polynomial derivative(int var) const {
    auto s = static_cast<std::size_t>(var);
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (t.mono.e[s] == 0) continue;
      Monomial m = t.mono;
      Coeff c = field_.mul(t.coeff, field_.from_int(m.e[s]));
      m.e[s] -= 1;
      ts.push_back({m, std::move(c)});
    }
    // Lowering one exponent can reorder terms, so re-sort.
    return from_terms(field_, order_, std::move(ts));
  }

  bool operator==(const Polynomial& q) const {
    if (terms_.size() != q.terms_.size()) return false;
    if (!(order_ == q.order_)) return equals_reordered(q);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == q.terms_[i].mono)) return false;
      if (!field_.eq(terms_[i].coeff, q.terms_[i].coeff)) return false;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = field_.is_negative(t.coeff);
      if (first) {
        if (negative) s += "-";
        first = false;
      } else {
        s += negative ? " - " : " + ";
      }
      std::string c = field_.to_string_abs(t.coeff);
      if (t.mono.is_one()) {
        s += c;
      } else if (c == "1") {
        s += t.mono.str();
      } else {
        s += c + "*" + t.mono.str();
      }
    }
    return s;
  }

 private:
  void check_compatible(const Polynomial& q) const {
    if (!field_.same_field(q.field_))
      throw FieldMismatchError("mixed coefficient fields");
    if (!(order_ == q.order_))
      throw InputError("mixed monomial orders; convert with with_order first");
  }

  Polynomial merged(const Polynomial& q, bool negate_rhs) const {
    Polynomial p(field_, order_);
    p.terms_.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    auto rhs = [&](const Coeff& c) { return negate_rhs ? field_.neg(c) : c; };
    while (i < terms_.size() && j < q.terms_.size()) {
      int r = cmp(terms_[i].mono, q.terms_[j].mono, order_);
      if (r > 0) {
        p.terms_.push_back(terms_[i++]);
      } else if (r < 0) {
        p.terms_.push_back({q.terms_[j].mono, rhs(q.terms_[j].coeff)});
        ++j;
      } else {
        Coeff v = field_.add(terms_[i].coeff, rhs(q.terms_[j].coeff));
        if (!field_.is_zero(v)) p.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) p.terms_.push_back({q.terms_[j].mono, rhs(q.terms_[j].coeff)});
    return p;
  }

  bool equals_reordered(const Polynomial& q) const {
    return with_order(MonomialOrder::degrevlex()) == q.with_order(MonomialOrder::degrevlex());
  }

  F field_{};
  MonomialOrder order_{};
  std::vector<Term> terms_;
};

using QQPoly = Polynomial<RationalField>;
using FpPoly = Polynomial<PrimeField>;

// Reduction of a rational polynomial mod p. Throws when a denominator is
// divisible by p.
inline FpPoly to_prime_field(const QQPoly& p, const PrimeField& fp) {
  std::vector<FpPoly::Term> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) ts.push_back({t.mono, fp.from_rational(t.coeff)});
  return FpPoly::from_terms(fp, p.order(), std::move(ts));
}

inline const QQPoly& convert_poly(const QQPoly& p, const RationalField&) { return p; }
inline FpPoly convert_poly(const QQPoly& p, const PrimeField& fp) { return to_prime_field(p, fp); }

}  // namespace dist3
