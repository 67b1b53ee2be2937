#ifndef VW_SCHUR_HPP
#define VW_SCHUR_HPP

#include <complex>
#include <span>
#include <type_traits>
#include <vector>

#include "vw/bigratio.hpp"
#include "vw/linalg.hpp"
#include "vw/partitions.hpp"

namespace vw {

struct SchurLimits {
  long max_variables = 8;
  long max_part = 12;
};

// Number of semistandard tableaux of shape lambda with entries in 1..N,
// i.e. S_lambda(1,...,1).
BigInt schur_ones(const Partition& lambda);

namespace detail {

template <class F>
F pow_int(const F& x, long e) {
  if (e < 0) {
    if (x == F(0)) throw std::invalid_argument("pow_int: negative power of zero");
    return F(1) / pow_int(x, -e);
  }
  F acc(1);
  F base = x;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

template <class F>
F det_auto(Matrix<F> m) {
  if constexpr (std::is_same_v<F, BigRatio>)
    return det_exact(std::move(m));
  else
    return det_float(std::move(m));
}

}  // namespace detail

// Vandermonde determinant prod_{m<l} (x_l - x_m).
template <class F>
F vandermonde(std::span<const F> x) {
  F v(1);
  for (std::size_t m = 0; m < x.size(); ++m)
    for (std::size_t l = m + 1; l < x.size(); ++l) v = v * (x[l] - x[m]);
  return v;
}

template <class F>
bool points_distinct(std::span<const F> x, double tol = 0.0) {
  for (std::size_t m = 0; m < x.size(); ++m)
    for (std::size_t l = m + 1; l < x.size(); ++l) {
      if constexpr (std::is_same_v<F, BigRatio>) {
        if (x[l] == x[m]) return false;
      } else {
        if (std::abs(x[l] - x[m]) <= tol) return false;
      }
    }
  return true;
}

// det(x_j^{a_k}) / V(x) for an arbitrary integer exponent tuple. Repeated
// exponents give zero; negative exponents are allowed for invertible points.
// This is the workhorse behind both the bialternant form and the boundary
// (wraparound) identities at Bethe points. Both determinants carry the
// decreasing-exponent column convention, so the signs cancel in the ratio.
template <class F>
F schur_laurent(std::span<const long> exponents, std::span<const F> x) {
  const std::size_t n = x.size();
  if (exponents.size() != n)
    throw std::invalid_argument("schur_laurent: exponent/point size mismatch");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      if (exponents[k] == exponents[l]) return F(0);
  Matrix<F> m(n, std::vector<F>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m[j][k] = detail::pow_int(x[j], exponents[k]);
  F denom(1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) denom = denom * (x[a] - x[b]);
  return detail::det_auto(std::move(m)) / denom;
}

std::vector<long> bialternant_exponents(const Partition& lambda);

// S_lambda as a ratio of alternants; the points must be pairwise distinct.
template <class F>
F schur_bialternant(const Partition& lambda, std::span<const F> x, double tol = 0.0) {
  if (lambda.length() != static_cast<long>(x.size()))
    throw std::invalid_argument("schur_bialternant: length mismatch");
  if (!points_distinct(x, tol))
    throw std::invalid_argument(
        "schur_bialternant: coincident points; use schur_paths or schur_ones");
  std::vector<long> ex = bialternant_exponents(lambda);
  return schur_laurent<F>(ex, x);
}

namespace detail {

// Visits the content vector (occurrences of each entry) of every
// semistandard tableau of the given shape with entries in 1..N.
void for_each_ssyt_content(const Partition& lambda, long n,
                           const std::function<void(std::span<const long>)>& fn);

}  // namespace detail

// S_lambda as the weighted sum over semistandard tableaux (stars); works for
// coincident points too.
template <class F>
F schur_paths(const Partition& lambda, std::span<const F> x,
              const SchurLimits& limits = {}) {
  const long n = static_cast<long>(x.size());
  if (lambda.length() != n) throw std::invalid_argument("schur_paths: length mismatch");
  if (n > limits.max_variables)
    throw GuardError("schur_paths: variable count exceeds guard");
  if (!lambda.fits_cap(limits.max_part))
    throw GuardError("schur_paths: part size exceeds guard");
  F total(0);
  detail::for_each_ssyt_content(lambda, n, [&](std::span<const long> content) {
    F term(1);
    for (long j = 0; j < n; ++j)
      term = term * detail::pow_int(x[static_cast<std::size_t>(j)],
                                    content[static_cast<std::size_t>(j)]);
    total = total + term;
  });
  return total;
}

struct PieriOptions {
  // Box cap for the Bethe boundary rule; ignored unless bethe_boundary.
  long cap = -1;
  bool bethe_boundary = false;
  double tol = 1e-9;
};

// Checks sum_k S_{lambda+e_k}(x) = (sum_k x_k) S_lambda(x). With
// bethe_boundary set and lambda_1 == cap, the k = 1 term is evaluated by the
// wraparound rule valid at points with x^M = (-1)^(N-1).
template <class F>
bool pieri_sum_check(const Partition& lambda, std::span<const F> x,
                     const PieriOptions& opt = {}) {
  const long n = lambda.length();
  if (n != static_cast<long>(x.size()))
    throw std::invalid_argument("pieri_sum_check: length mismatch");
  F lhs(0);
  for (long k = 0; k < n; ++k) {
    std::vector<long> parts = lambda.parts();
    parts[static_cast<std::size_t>(k)] += 1;
    if (k == 0 && opt.bethe_boundary && opt.cap >= 0 && lambda.part(0) == opt.cap) {
      // lambda + e_1 leaves the box; at Bethe points it wraps to
      // (lambda_2 - 1, ..., lambda_N - 1, 0).
      std::vector<long> wrapped;
      bool valid = true;
      for (long j = 1; j < n; ++j) {
        long v = lambda.part(j) - 1;
        if (v < 0) valid = false;
        wrapped.push_back(v);
      }
      wrapped.push_back(0);
      if (valid)
        lhs = lhs + schur_laurent<F>(bialternant_exponents(Partition(wrapped)), x);
      continue;
    }
    std::vector<long> ex(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j)
      ex[static_cast<std::size_t>(j)] = parts[static_cast<std::size_t>(j)] + n - (j + 1);
    lhs = lhs + schur_laurent<F>(ex, x);
  }
  F sum(0);
  for (const F& v : x) sum = sum + v;
  F rhs = sum * schur_laurent<F>(bialternant_exponents(lambda), x);
  if constexpr (std::is_same_v<F, BigRatio>) {
    return lhs == rhs;
  } else {
    double scale = std::max(1.0, std::abs(rhs));
    return std::abs(lhs - rhs) <= opt.tol * scale;
  }
}

// Complete homogeneous-style kernel h_P(x) = 1 + x + ... + x^{P-1}.
template <class F>
F geometric_sum(const F& x, long p) {
  F acc(0);
  F pw(1);
  for (long i = 0; i < p; ++i) {
    acc = acc + pw;
    pw = pw * x;
  }
  return acc;
}

// Direct Cauchy-Binet sum over lambda inside the L^N box.
template <class F>
F cauchy_binet_sum(long n, long l, std::span<const F> x, std::span<const F> y,
                   const SchurLimits& limits = {}) {
  F total(0);
  for (const Partition& lam : BoxPartitions(n, l)) {
    F sx = points_distinct(x) ? schur_bialternant(lam, x) : schur_paths(lam, x, limits);
    F sy = points_distinct(y) ? schur_bialternant(lam, y) : schur_paths(lam, y, limits);
    total = total + sx * sy;
  }
  return total;
}

// Determinant route det(h_{L+N}(x_i y_j)) / (V(x) V(y)); falls back to the
// direct sum when a Vandermonde degenerates. For exact inputs at small sizes
// both routes are computed and must agree.
template <class F>
F cauchy_binet(long n, long l, std::span<const F> x, std::span<const F> y) {
  if (n != static_cast<long>(x.size()) || n != static_cast<long>(y.size()))
    throw std::invalid_argument("cauchy_binet: length mismatch");
  if (!points_distinct(x) || !points_distinct(y)) return cauchy_binet_sum(n, l, x, y);
  Matrix<F> t(static_cast<std::size_t>(n), std::vector<F>(static_cast<std::size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      F arg = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = geometric_sum(arg, l + n);
    }
  F det = detail::det_auto(std::move(t)) / (vandermonde(x) * vandermonde(y));
  if constexpr (std::is_same_v<F, BigRatio>) {
    if (n <= 3 && l <= 4 && det != cauchy_binet_sum(n, l, x, y))
      throw std::logic_error("cauchy_binet: routes disagree");
  }
  return det;
}

enum class QSpecMode {
  GeometricFromQ,    // (q, q^2, ..., q^N)
  GeometricFromOne,  // (1, q, ..., q^{N-1})
};

struct QSpec {
  BigRatio q;
  QSpecMode mode = QSpecMode::GeometricFromQ;
};

// Principal specialization S_lambda(q, q^2, ...) or S_lambda(1, q, ...);
// exact, with the path-sum route covering q = +-1.
BigRatio principal_spec(const Partition& lambda, const QSpec& spec,
                        const SchurLimits& limits = {});

}  // namespace vw

#endif
