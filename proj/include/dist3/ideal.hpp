#pragma once

#include <string>
#include <vector>

#include "dist3/polynomial.hpp"

namespace dist3 {

// A finitely generated ideal of k[x0..x3] (internally sometimes k[x0..x3,t]).
// Zero generators are dropped on construction. Most public pipelines feed
// homogeneous generators; the elimination machinery also runs on the
// inhomogeneous auxiliary ideals it builds itself.
template <class F>
struct Ideal {
  F field{};
  std::vector<Polynomial<F>> gens;

  Ideal() = default;
  explicit Ideal(F f) : field(f) {}
  Ideal(F f, std::vector<Polynomial<F>> g) : field(f) {
    gens.reserve(g.size());
    for (auto& p : g)
      if (!p.is_zero()) gens.push_back(std::move(p));
  }

  bool is_zero() const { return gens.empty(); }

  bool homogeneous() const {
    for (const auto& g : gens)
      if (!g.homogeneous()) return false;
    return true;
  }

  std::vector<std::string> gen_strings() const {
    std::vector<std::string> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.str());
    return out;
  }
};

// The irrelevant maximal ideal (x0, x1, x2, x3).
template <class F>
Ideal<F> irrelevant_ideal(const F& field) {
  std::vector<Polynomial<F>> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(Polynomial<F>::variable(field, i));
  return Ideal<F>(field, std::move(gens));
}

}  // namespace dist3
