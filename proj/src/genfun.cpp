#include "vw/genfun.hpp"

#include <cmath>
#include <numbers>

#include "vw/combinatorics.hpp"
#include "vw/linalg.hpp"
#include "vw/walks.hpp"

namespace vw {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> grid_momenta(long m, bool half_grid) {
  std::vector<double> p(static_cast<std::size_t>(m));
  for (long n = 1; n <= m; ++n)
    p[static_cast<std::size_t>(n - 1)] =
        2.0 * kPi * (static_cast<double>(n) - (half_grid ? 0.5 : 0.0)) /
        static_cast<double>(m);
  return p;
}

void require_states(long n, long m, const GenFunLimits& limits, const char* who) {
  BigInt states = binomial(m, n);
  if (states > limits.max_states)
    throw GuardError(std::string(who) + ": strict-partition count exceeds guard (max_states)");
}

}  // namespace

BigInt macmahon(long n, long box) {
  if (n < 1 || box < 0) throw std::invalid_argument("macmahon: bad arguments");
  BigRatio acc(1);
  for (long k = 1; k <= n; ++k)
    for (long j = 1; j <= n; ++j)
      acc *= make_ratio(box + k + j - 1, k + j - 1);
  if (!is_integer(acc)) throw std::logic_error("macmahon: product is not an integer");
  return acc.get_num();
}

void QGammaPoly::add_term(long q_pow, long gamma_pow, const BigInt& c) {
  if (c == 0) return;
  auto key = std::make_pair(q_pow, gamma_pow);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const BigInt& QGammaPoly::coefficient(long q_pow, long gamma_pow) const {
  static const BigInt zero = 0;
  auto it = terms_.find(std::make_pair(q_pow, gamma_pow));
  return it == terms_.end() ? zero : it->second;
}

std::vector<std::pair<std::pair<long, long>, BigInt>> QGammaPoly::items() const {
  return {terms_.begin(), terms_.end()};
}

BigInt QGammaPoly::gamma_slice_total(long gamma_pow) const {
  BigInt total = 0;
  for (const auto& [mono, c] : terms_)
    if (mono.second == gamma_pow) total += c;
  return total;
}

QGammaPoly norm_trace_sum(long n, long box, const GenFunLimits& limits) {
  if (n > limits.max_side || box > limits.max_box)
    throw GuardError("norm_trace_sum: box exceeds guard (max_side/max_box)");
  QGammaPoly poly;
  for_each_plane_partition(n, box, [&](const PlanePartition& pp) {
    poly.add_term(pp.volume(), pp.diag_trace(n), 1);
  });
  return poly;
}

BigRatio norm_trace_det(long n, long box, const BigRatio& q, const BigRatio& gamma,
                        const GenFunLimits& limits) {
  if (n < 1 || box < 0) throw std::invalid_argument("norm_trace_det: bad arguments");
  const long m = box + n;
  std::vector<BigRatio> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  BigRatio pw(1);
  for (long j = 0; j < n; ++j) {
    xs[static_cast<std::size_t>(j)] = pw;  // (1, q, ..., q^{N-1})
    pw = pw * q;
    ys[static_cast<std::size_t>(j)] = gamma * pw;  // (gamma q, ..., gamma q^N)
  }
  if (!points_distinct(std::span<const BigRatio>(xs)) ||
      !points_distinct(std::span<const BigRatio>(ys)))
    return norm_trace_sum(n, box, limits).evaluate(q, gamma);
  Matrix<BigRatio> a(static_cast<std::size_t>(n), std::vector<BigRatio>(static_cast<std::size_t>(n)));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      BigRatio arg = gamma;
      for (long t = 0; t < i + j - 1; ++t) arg = arg * q;
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          geometric_sum(arg, m);
    }
  BigRatio det = det_exact(std::move(a));
  return det / (vandermonde(std::span<const BigRatio>(xs)) *
                vandermonde(std::span<const BigRatio>(ys)));
}

double norm_trace_det(long n, long box, double q, double gamma) {
  if (n < 1 || box < 0) throw std::invalid_argument("norm_trace_det: bad arguments");
  const long m = box + n;
  std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  double pw = 1.0;
  for (long j = 0; j < n; ++j) {
    xs[static_cast<std::size_t>(j)] = pw;
    pw *= q;
    ys[static_cast<std::size_t>(j)] = gamma * pw;
  }
  if (!points_distinct(std::span<const double>(xs), 1e-12) ||
      !points_distinct(std::span<const double>(ys), 1e-12))
    throw std::invalid_argument("norm_trace_det: degenerate points; use the exact route");
  Matrix<double> a(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          geometric_sum(gamma * std::pow(q, static_cast<double>(i + j - 1)), m);
  return det_float(std::move(a)) /
         (vandermonde(std::span<const double>(xs)) * vandermonde(std::span<const double>(ys)));
}

UnboundedProducts unbounded_products(long n, double q, double gamma, long truncation) {
  if (std::abs(q) >= 1.0) throw std::invalid_argument("unbounded_products: need |q| < 1");
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("unbounded_products: need 0 <= gamma <= 1");
  if (std::abs(gamma * q) >= 1.0)
    throw std::invalid_argument("unbounded_products: divergent (|gamma q| >= 1)");
  UnboundedProducts out{1.0, 1.0};
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      out.double_product /= 1.0 - gamma * std::pow(q, static_cast<double>(i + j - 1));
  for (long k = 1; k <= truncation; ++k)
    out.double_scaling /= std::pow(1.0 - gamma * std::pow(q, static_cast<double>(k)),
                                   static_cast<double>(k));
  return out;
}

BigInt pinned_pp_count(long n, long box, const StrictPartition& pins) {
  BigInt total = 0;
  for (const StrictPartition& mu : enumerate_pinned(PinnedSpec(pins), n, box + n)) {
    BigInt s = schur_ones(to_nonstrict(mu));
    total += s * s;
  }
  return total;
}

BigInt diag_constrained_count(long n, long box, long m) {
  BigInt total = 0;
  for (const StrictPartition& mu : strict_partitions_of_weight(m, n)) {
    if (!mu.fits_bound(box + n)) continue;
    BigInt s = schur_ones(to_nonstrict(mu));
    total += s * s;
  }
  return total;
}

double bessel_i_numeric(long nu, double x) {
  if (nu < 0) nu = -nu;
  if (x < 0.0) throw std::invalid_argument("bessel_i_numeric: negative argument");
  return std::cyl_bessel_i(static_cast<double>(nu), x);
}

double bessel_partition_sum(long n, long m, double beta, std::span<const double> alpha,
                            const GenFunLimits& limits) {
  if (!alpha.empty() && static_cast<long>(alpha.size()) != m)
    throw std::invalid_argument("bessel_partition_sum: weight vector must have M entries");
  require_states(n, m, limits, "bessel_partition_sum");
  double total = 0.0;
  for (const StrictPartition& mu : enumerate_strict(n, m)) {
    Matrix<double> a(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i) {
      double w = alpha.empty() ? 1.0
                               : std::exp(alpha[static_cast<std::size_t>(mu.part(i) - 1)]);
      for (long j = 0; j < n; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            w * bessel_i_numeric(std::abs(mu.part(i) - mu.part(j)), beta);
    }
    total += det_float(std::move(a));
  }
  return total;
}

double nparticle_mean(long n, double beta, std::span<const double> alpha, long m,
                      const GenFunLimits& limits) {
  double denom = bessel_partition_sum(n, m, beta, {}, limits);
  return bessel_partition_sum(n, m, beta, alpha, limits) / denom;
}

double moment_mean(long n, long m, double beta, long l, const GenFunLimits& limits) {
  require_states(n, m, limits, "moment_mean");
  double num = 0.0, den = 0.0;
  for (const StrictPartition& mu : enumerate_strict(n, m)) {
    Matrix<double> a(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            bessel_i_numeric(std::abs(mu.part(i) - mu.part(j)), beta);
    double det = det_float(std::move(a));
    den += det;
    num += det * std::pow(static_cast<double>(mu.volume()), static_cast<double>(l));
  }
  return num / den / std::pow(static_cast<double>(n), static_cast<double>(l));
}

TraceSeries series_of_trace(long n, long m, long order, std::span<const BigRatio> weights,
                            const GenFunLimits& limits) {
  if (!weights.empty() && static_cast<long>(weights.size()) != m)
    throw std::invalid_argument("series_of_trace: weight vector must have M entries");
  require_states(n, m, limits, "series_of_trace");
  if (order > 12) throw GuardError("series_of_trace: order exceeds guard");
  WalkConfig line{Geometry::Line, 0, false};
  std::vector<BigRatio> closed(static_cast<std::size_t>(order) + 1, BigRatio(0));
  for (const StrictPartition& mu : enumerate_strict(n, m)) {
    BigRatio w(1);
    for (long i = 0; i < n; ++i)
      if (!weights.empty()) w = w * weights[static_cast<std::size_t>(mu.part(i) - 1)];
    for (long k = 0; k <= order; ++k) {
      BigInt cnt = count_formula(line, mu, mu, k);
      if (cnt != 0) closed[static_cast<std::size_t>(k)] += w * BigRatio(cnt);
    }
  }
  TraceSeries out;
  out.order = order;
  out.poly_by_k.resize(static_cast<std::size_t>(order) + 1);
  for (long k = 0; k <= order; ++k) {
    auto& poly = out.poly_by_k[static_cast<std::size_t>(k)];
    poly.resize(static_cast<std::size_t>(k) + 1);
    for (long p = 0; p <= k; ++p)
      poly[static_cast<std::size_t>(p)] =
          BigRatio(binomial(k, p)) * closed[static_cast<std::size_t>(k - p)];
  }
  return out;
}

MehtaBarnes mehta_barnes(long n, double beta, double h) {
  if (n < 1 || beta <= 0.0) throw std::invalid_argument("mehta_barnes: bad arguments");
  double phi = -static_cast<double>(n) / 2.0 * std::log(2.0 * kPi);
  for (long k = 1; k <= n; ++k) phi += std::lgamma(static_cast<double>(k));
  MehtaBarnes out;
  out.phi = phi;
  out.phi_asymptotic = static_cast<double>(n * n) / 2.0 * std::log(static_cast<double>(n)) -
                       3.0 * static_cast<double>(n * n) / 4.0;
  out.value = std::exp(beta * static_cast<double>(n) * (1.0 - h) -
                       static_cast<double>(n * n) / 2.0 * std::log(beta) + phi);
  return out;
}

double sector_determinant(long m, double h, std::span<const double> alpha, double beta,
                          int ell, bool half_grid) {
  if (ell != 1 && ell != -1) throw std::invalid_argument("sector_determinant: ell must be +-1");
  std::vector<double> p = grid_momenta(m, half_grid);
  Matrix<ComplexF> a(static_cast<std::size_t>(m), std::vector<ComplexF>(static_cast<std::size_t>(m)));
  for (long i = 0; i < m; ++i) {
    double eps = h - std::cos(p[static_cast<std::size_t>(i)]);
    double boltz = std::exp(-beta * eps);
    for (long j = 0; j < m; ++j) {
      ComplexF acc = 0.0;
      if (alpha.empty()) {
        acc = i == j ? ComplexF(static_cast<double>(m), 0.0) : ComplexF(0.0, 0.0);
      } else {
        double dt = p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)];
        for (long site = 1; site <= m; ++site)
          acc += std::exp(alpha[static_cast<std::size_t>(site - 1)]) *
                 std::polar(1.0, static_cast<double>(site) * dt);
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<double>(ell) * boltz * acc / static_cast<double>(m);
      if (i == j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1.0;
    }
  }
  return det_float(std::move(a)).real();
}

TotalTraceParts total_trace_parts(long m, double h, std::span<const double> alpha,
                                  double beta) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("total_trace: site count must be even and >= 2");
  if (!alpha.empty() && static_cast<long>(alpha.size()) != m)
    throw std::invalid_argument("total_trace: weight vector must have M entries");
  double prefactor = std::exp(beta * h * static_cast<double>(m) / 2.0) / 2.0;
  TotalTraceParts out{0.0, 0.0, 0.0};
  for (int ell : {+1, -1}) {
    double d_half = sector_determinant(m, h, alpha, beta, ell, true);
    double d_int = sector_determinant(m, h, alpha, beta, ell, false);
    double part = prefactor * (d_half + static_cast<double>(ell) * d_int);
    (ell == +1 ? out.ell_plus : out.ell_minus) = part;
  }
  out.total = out.ell_plus + out.ell_minus;
  return out;
}

double total_trace(long m, double h, std::span<const double> alpha, double beta) {
  return total_trace_parts(m, h, alpha, beta).total;
}

double minor_derivative(const FermiKernel& kernel, std::span<const long> sites) {
  const long l = static_cast<long>(sites.size());
  for (long i = 1; i < l; ++i)
    if (sites[static_cast<std::size_t>(i - 1)] <= sites[static_cast<std::size_t>(i)])
      throw std::invalid_argument("minor_derivative: sites must strictly decrease");
  if (l == 0) return 1.0;
  std::vector<double> p;
  double weight_norm;
  if (kernel.infinite_chain) {
    long g = kernel.quad_points;
    if (g < 8) throw std::invalid_argument("minor_derivative: too few quadrature points");
    p.resize(static_cast<std::size_t>(g));
    for (long i = 0; i < g; ++i)
      p[static_cast<std::size_t>(i)] =
          -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(g);
    weight_norm = 1.0 / static_cast<double>(g);
  } else {
    if (kernel.sites < 2) throw std::invalid_argument("minor_derivative: bad site count");
    p = grid_momenta(kernel.sites, kernel.half_grid);
    weight_norm = 1.0 / static_cast<double>(kernel.sites);
  }
  Matrix<ComplexF> a(static_cast<std::size_t>(l), std::vector<ComplexF>(static_cast<std::size_t>(l)));
  for (long i = 0; i < l; ++i)
    for (long j = 0; j < l; ++j) {
      ComplexF acc = 0.0;
      long d = sites[static_cast<std::size_t>(i)] - sites[static_cast<std::size_t>(j)];
      for (double q : p) {
        double eps = kernel.h - std::cos(q);
        double denom = 1.0 + static_cast<double>(kernel.ell) * std::exp(kernel.beta * eps);
        if (denom == 0.0 || !std::isfinite(denom))
          throw std::invalid_argument("minor_derivative: singular Fermi weight");
        acc += std::polar(1.0, q * static_cast<double>(d)) / denom;
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc * weight_norm;
    }
  return det_float(std::move(a)).real();
}

}  // namespace vw
