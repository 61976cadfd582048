#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dist3 {

// Univariate polynomial in t with exact rational coefficients. Hilbert
// polynomials and Euler characteristics live here.
class QPoly {
 public:
  QPoly() = default;  // zero
  explicit QPoly(std::vector<mpq_class> coeffs);

  static QPoly constant(const mpq_class& c);
  static QPoly t();
  // binomial(t + shift, k) extended to a polynomial in t; k <= 4 suffices.
  static QPoly binomial_shifted(int shift, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int i) const;
  const mpq_class& leading() const { return c_.back(); }

  mpq_class eval(const mpq_class& x) const;
  QPoly shifted(const mpq_class& a) const;  // P(t + a)

  QPoly operator+(const QPoly& q) const;
  QPoly operator-(const QPoly& q) const;
  QPoly operator*(const QPoly& q) const;
  QPoly operator-() const;
  QPoly scaled(const mpq_class& c) const;
  bool operator==(const QPoly& q) const { return c_ == q.c_; }

  // "2*t^3 + 1/2*t - 1" style, highest power first.
  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> c_;  // c_[i] is the coefficient of t^i
};

}  // namespace dist3
