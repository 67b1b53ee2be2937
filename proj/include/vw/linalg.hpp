#ifndef VW_LINALG_HPP
#define VW_LINALG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vw {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline double pivot_size(double v) { return std::abs(v); }
inline double pivot_size(const std::complex<double>& v) { return std::abs(v); }

}  // namespace detail

// Determinant by Gaussian elimination with partial pivoting; for floating
// scalar types only.
template <class T>
T det_float(Matrix<T> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det_float: matrix not square");
  T det = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (detail::pivot_size(a[r][c]) > detail::pivot_size(a[pivot][c])) pivot = r;
    if (detail::pivot_size(a[pivot][c]) == 0.0) return T(0);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      T f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Determinant over an exact field (rationals): plain elimination, any
// nonzero pivot will do.
template <class T>
T det_exact(Matrix<T> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det_exact: matrix not square");
  T det = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == T(0)) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == T(0)) continue;
      T f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Division-free determinant over a commutative ring (big integers,
// truncated series). Expands row by row over column subsets; fine for the
// small orders used here (n <= ~10).
template <class T>
T det_ring(const Matrix<T>& a, const T& zero, const T& one) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det_ring: matrix not square");
  if (n == 0) return one;
  if (n > 24) throw std::invalid_argument("det_ring: order too large for subset expansion");
  // minor[s] = determinant of rows 0..popcount(s)-1 on the column set s.
  std::vector<T> cur(1, one);
  std::vector<std::uint32_t> curSets(1, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<T> next;
    std::vector<std::uint32_t> nextSets;
    // Enumerate supersets with one extra column for every current subset.
    std::vector<long> index(1u << n, -1);
    for (std::size_t i = 0; i < curSets.size(); ++i) {
      std::uint32_t s = curSets[i];
      for (std::size_t c = 0; c < n; ++c) {
        if (s & (1u << c)) continue;
        std::uint32_t t = s | (1u << c);
        // Laplace expansion along the newly added row r at column position
        // popcount(s below c): sign (-1)^(r + position).
        int below = __builtin_popcount(s & ((1u << c) - 1));
        T term = cur[i] * a[r][c];
        if ((below + static_cast<int>(r)) & 1) term = zero - term;
        if (index[t] < 0) {
          index[t] = static_cast<long>(next.size());
          next.push_back(term);
          nextSets.push_back(t);
        } else {
          next[static_cast<std::size_t>(index[t])] =
              next[static_cast<std::size_t>(index[t])] + term;
        }
      }
    }
    cur = std::move(next);
    curSets = std::move(nextSets);
  }
  return cur[0];
}

}  // namespace vw

#endif
