#include "dist3/qpoly.hpp"

#include <algorithm>

#include "dist3/errors.hpp"

namespace dist3 {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const mpq_class& c) { return QPoly({c}); }

QPoly QPoly::t() { return QPoly({0, 1}); }

QPoly QPoly::binomial_shifted(int shift, int k) {
  if (k < 0 || k > 4) throw InputError("binomial_shifted supports 0 <= k <= 4");
  QPoly p = constant(1);
  mpz_class kfact = 1;
  for (int j = 0; j < k; ++j) {
    p = p * QPoly({mpq_class(shift - j), 1});
    kfact *= j + 1;
  }
  return p.scaled(mpq_class(1, kfact));
}

mpq_class QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

QPoly QPoly::shifted(const mpq_class& a) const {
  // Horner in (t + a).
  QPoly base({a, 1});
  QPoly v;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * base + constant(*it);
  return v;
}

QPoly QPoly::operator+(const QPoly& q) const {
  std::vector<mpq_class> r(std::max(c_.size(), q.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& q) const { return *this + (-q); }

QPoly QPoly::operator-() const {
  std::vector<mpq_class> r = c_;
  for (auto& v : r) v = -v;
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& q) const {
  if (c_.empty() || q.c_.empty()) return {};
  std::vector<mpq_class> r(c_.size() + q.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += c_[i] * q.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const mpq_class& c) const {
  std::vector<mpq_class> r = c_;
  for (auto& v : r) v *= c;
  return QPoly(std::move(r));
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    mpq_class a = abs(v);
    if (s.empty()) {
      if (v < 0) s += "-";
    } else {
      s += v < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (i == 0) {
      s += a.get_str();
    } else {
      s += unit ? "" : a.get_str() + "*";
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace dist3
