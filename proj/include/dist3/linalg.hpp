#pragma once

#include <cstddef>
#include <vector>

#include "dist3/field.hpp"

namespace dist3 {

template <class F>
struct DenseMatrix {
  using Elem = typename F::Elem;

  F field{};
  std::size_t nrows = 0, ncols = 0;
  std::vector<Elem> data;

  DenseMatrix() = default;
  DenseMatrix(F f, std::size_t r, std::size_t c)
      : field(f), nrows(r), ncols(c), data(r * c, f.zero()) {}

  Elem& at(std::size_t r, std::size_t c) { return data[r * ncols + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return data[r * ncols + c]; }
};

// Row rank by Gaussian elimination; destroys the matrix.
template <class F>
std::size_t rank_destructive(DenseMatrix<F>& m) {
  const F& k = m.field;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.ncols && rank < m.nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.nrows && k.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.nrows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < m.ncols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    typename F::Elem inv = k.inv(m.at(rank, col));
    for (std::size_t r = rank + 1; r < m.nrows; ++r) {
      if (k.is_zero(m.at(r, col))) continue;
      typename F::Elem factor = k.mul(m.at(r, col), inv);
      m.at(r, col) = k.zero();
      for (std::size_t c = col + 1; c < m.ncols; ++c)
        m.at(r, c) = k.sub(m.at(r, c), k.mul(factor, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

template <class F>
std::size_t kernel_dim_destructive(DenseMatrix<F>& m) {
  std::size_t cols = m.ncols;
  return cols - rank_destructive(m);
}

}  // namespace dist3
