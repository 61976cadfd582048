#pragma once

#include <array>
#include <vector>
#include <cstdint>
#include <string>

namespace dist3 {

// The ambient ring is k[x0..x3]. Index 4 is the auxiliary variable t that the
// ideal layer introduces for intersection/elimination; it never appears in
// parsed input or printed public output.
inline constexpr int kNumVars = 5;
inline constexpr int kAuxVar = 4;
inline constexpr std::uint8_t kAllVarsMask = 0x1F;
inline constexpr std::uint8_t kAmbientMask = 0x0F;  // x0..x3
inline constexpr std::uint8_t kAuxMask = 1 << kAuxVar;

struct Monomial {
  std::array<std::uint16_t, kNumVars> e{};

  static Monomial one() { return {}; }
  static Monomial var(int i, unsigned k = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(k);
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  unsigned degree_masked(std::uint8_t mask) const {
    unsigned d = 0;
    for (int i = 0; i < kNumVars; ++i)
      if (mask >> i & 1) d += e[static_cast<std::size_t>(i)];
    return d;
  }
  bool is_one() const { return degree() == 0; }
  // True when no variable from `mask` occurs.
  bool avoids(std::uint8_t mask) const { return degree_masked(mask) == 0; }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[static_cast<std::size_t>(i)] > m.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  bool coprime(const Monomial& m) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[static_cast<std::size_t>(i)] != 0 && m.e[static_cast<std::size_t>(i)] != 0)
        return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
      r.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
          e[static_cast<std::size_t>(i)] + m.e[static_cast<std::size_t>(i)]);
    return r;
  }
  // Quotient; caller guarantees m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
      r.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
          e[static_cast<std::size_t>(i)] - m.e[static_cast<std::size_t>(i)]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) {
      auto s = static_cast<std::size_t>(i);
      r.e[s] = a.e[s] > b.e[s] ? a.e[s] : b.e[s];
    }
    return r;
  }

  bool operator==(const Monomial&) const = default;

  std::string str() const {
    static const char* names[kNumVars] = {"x0", "x1", "x2", "x3", "t"};
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
      auto k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (k > 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
  }
};

// Total multiplicative monomial orders with 1 minimal: degrevlex, lex, and
// block elimination orders (eliminated group compared first, degrevlex within
// each group).
struct MonomialOrder {
  enum class Kind : std::uint8_t { Degrevlex, Lex, Block };

  Kind kind = Kind::Degrevlex;
  std::uint8_t elim_mask = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block(std::uint8_t elim_mask) { return {Kind::Block, elim_mask}; }

  bool operator==(const MonomialOrder&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::Lex:
        return "lex";
      case Kind::Block:
        return "block(" + std::to_string(elim_mask) + ")";
      default:
        return "degrevlex";
    }
  }
};

// All monomials of total degree d in the ambient variables x0..x3, in a
// fixed deterministic order.
inline std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      for (int c = d - a - b; c >= 0; --c) {
        Monomial m;
        m.e[0] = static_cast<std::uint16_t>(a);
        m.e[1] = static_cast<std::uint16_t>(b);
        m.e[2] = static_cast<std::uint16_t>(c);
        m.e[3] = static_cast<std::uint16_t>(d - a - b - c);
        out.push_back(m);
      }
  return out;
}

namespace detail {

// degrevlex restricted to the variables in `mask`: higher total degree wins,
// ties broken by the last differing exponent being smaller.
inline int cmp_degrevlex_masked(const Monomial& a, const Monomial& b, std::uint8_t mask) {
  unsigned da = a.degree_masked(mask), db = b.degree_masked(mask);
  if (da != db) return da < db ? -1 : 1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (!(mask >> i & 1)) continue;
    auto s = static_cast<std::size_t>(i);
    if (a.e[s] != b.e[s]) return a.e[s] > b.e[s] ? -1 : 1;
  }
  return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kNumVars; ++i) {
    auto s = static_cast<std::size_t>(i);
    if (a.e[s] != b.e[s]) return a.e[s] < b.e[s] ? -1 : 1;
  }
  return 0;
}

}  // namespace detail

inline int cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  switch (ord.kind) {
    case MonomialOrder::Kind::Lex:
      return detail::cmp_lex(a, b);
    case MonomialOrder::Kind::Block: {
      int r = detail::cmp_degrevlex_masked(a, b, ord.elim_mask);
      if (r != 0) return r;
      return detail::cmp_degrevlex_masked(
          a, b, static_cast<std::uint8_t>(~ord.elim_mask & kAllVarsMask));
    }
    default:
      return detail::cmp_degrevlex_masked(a, b, kAllVarsMask);
  }
}

}  // namespace dist3
