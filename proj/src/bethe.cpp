#include "vw/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace vw {

namespace {

constexpr double kPi = std::numbers::pi;

// Momentum grid of the N-particle sector: e^{iMp} = (-1)^(N-1), so the
// integer grid for N odd and the half-integer grid for N even.
std::vector<double> momentum_grid(long m, long particles) {
  std::vector<double> phi(static_cast<std::size_t>(m));
  double shift = particles % 2 == 0 ? 0.5 : 0.0;
  for (long i = 1; i <= m; ++i)
    phi[static_cast<std::size_t>(i - 1)] =
        2.0 * kPi * (static_cast<double>(i) - shift) / static_cast<double>(m);
  return phi;
}

void for_each_combination(long m, long n, const std::function<void(std::span<const long>)>& fn) {
  std::vector<long> idx(static_cast<std::size_t>(n));
  std::function<void(long, long)> rec = [&](long start, long depth) {
    if (depth == n) {
      fn(idx);
      return;
    }
    for (long i = start; i < m; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

BetheSpectrum bethe_roots(const ChainSpec& spec, std::span<const long> two_i) {
  const long n = spec.particles;
  if (static_cast<long>(two_i.size()) != n)
    throw std::invalid_argument("bethe_roots: quantum-number count mismatch");
  bool all_even = true, all_odd = true;
  for (long v : two_i) (v % 2 == 0 ? all_odd : all_even) = false;
  std::vector<long> quantum(static_cast<std::size_t>(n));
  if (all_even) {
    for (long j = 0; j < n; ++j) quantum[static_cast<std::size_t>(j)] = two_i[static_cast<std::size_t>(j)] / 2;
  } else if (all_odd && n % 2 == 0) {
    // Half-integer momentum numbers I~ = I - (N+1)/2.
    for (long j = 0; j < n; ++j)
      quantum[static_cast<std::size_t>(j)] = (two_i[static_cast<std::size_t>(j)] + n + 1) / 2;
  } else {
    throw std::invalid_argument(
        "bethe_roots: wrong quantum-number parity for this particle count");
  }
  for (long j = 0; j < n; ++j) {
    if (j > 0 && quantum[static_cast<std::size_t>(j - 1)] <= quantum[static_cast<std::size_t>(j)])
      throw std::invalid_argument("bethe_roots: quantum numbers must strictly decrease");
    if (quantum[static_cast<std::size_t>(j)] < 1 || quantum[static_cast<std::size_t>(j)] > spec.sites)
      throw std::invalid_argument("bethe_roots: quantum number out of range");
  }
  BetheSpectrum out;
  out.quantum_numbers = quantum;
  out.theta.resize(static_cast<std::size_t>(n));
  double energy = -spec.field * static_cast<double>(spec.sites) / 2.0;
  for (long j = 0; j < n; ++j) {
    double t = 2.0 * kPi / static_cast<double>(spec.sites) *
               (static_cast<double>(quantum[static_cast<std::size_t>(j)]) -
                (static_cast<double>(n) + 1.0) / 2.0);
    out.theta[static_cast<std::size_t>(j)] = t;
    energy += spec.field - std::cos(t);
  }
  out.energy = energy;
  double denom = 1.0;
  for (long a = 0; a < n; ++a)
    for (long b = a + 1; b < n; ++b) {
      double diff = 2.0 * kPi / static_cast<double>(spec.sites) *
                    static_cast<double>(quantum[static_cast<std::size_t>(b)] -
                                        quantum[static_cast<std::size_t>(a)]);
      denom *= 2.0 * (1.0 - std::cos(diff));
    }
  out.norm_sq = std::pow(static_cast<double>(spec.sites), static_cast<double>(n)) / denom;
  return out;
}

std::vector<std::vector<long>> all_quantum_numbers(const ChainSpec& spec) {
  std::vector<std::vector<long>> out;
  for_each_combination(spec.sites, spec.particles, [&](std::span<const long> idx) {
    std::vector<long> two(static_cast<std::size_t>(spec.particles));
    // idx is increasing zero-based; store I decreasing.
    for (long j = 0; j < spec.particles; ++j)
      two[static_cast<std::size_t>(j)] =
          2 * (idx[static_cast<std::size_t>(spec.particles - 1 - j)] + 1);
    out.push_back(std::move(two));
  });
  return out;
}

std::vector<ComplexF> bethe_vector(const ChainSpec& spec, const BetheSpectrum& spectrum) {
  const long n = spec.particles;
  std::vector<ComplexF> x(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j)
    x[static_cast<std::size_t>(j)] = std::polar(1.0, spectrum.theta[static_cast<std::size_t>(j)]);
  std::vector<ComplexF> v;
  for (const StrictPartition& mu : enumerate_strict(n, spec.sites)) {
    Partition lam = to_nonstrict(mu);
    v.push_back(schur_laurent<ComplexF>(bialternant_exponents(lam), x));
  }
  return v;
}

double eigen_residual(const ChainSpec& spec, const BetheSpectrum& spectrum,
                      long max_sites) {
  if (spec.sites > max_sites)
    throw GuardError("eigen_residual: site count exceeds guard (max_sites)");
  const long n = spec.particles;
  const long m = spec.sites;
  if (n == 0) return 0.0;  // vacuum is exactly the E = -hM/2 eigenstate
  std::vector<StrictPartition> basis = enumerate_strict(n, m);
  std::map<std::vector<long>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].parts()] = i;
  std::vector<ComplexF> v = bethe_vector(spec, spectrum);

  double norm = 0.0;
  for (const ComplexF& c : v) norm += std::norm(c);
  norm = std::sqrt(norm);

  double worst = 0.0;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const std::vector<long>& state = basis[b].parts();
    ComplexF hop = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
      for (long dir : {+1, -1}) {
        long pos = (state[i] + dir - 1 + m) % m + 1;
        bool occupied = false;
        for (std::size_t j = 0; j < state.size(); ++j)
          if (j != i && state[j] == pos) {
            occupied = true;
            break;
          }
        if (occupied) continue;
        std::vector<long> moved = state;
        moved[i] = pos;
        std::sort(moved.begin(), moved.end(), std::greater<long>());
        hop += v[index.at(moved)];
      }
    }
    // H = -(1/2) * hop-sum - h * (M/2 - N) on the N-particle sector.
    ComplexF hv = -0.5 * hop -
                  spec.field * (static_cast<double>(m) / 2.0 - static_cast<double>(n)) *
                      v[b];
    worst = std::max(worst, std::abs(hv - spectrum.energy * v[b]));
  }
  return worst / norm;
}

double amplitude_spectral(const ChainSpec& spec, std::span<const long> left,
                          std::span<const long> right, double beta) {
  const long n = spec.particles;
  if (static_cast<long>(left.size()) != n || static_cast<long>(right.size()) != n)
    throw std::invalid_argument("amplitude_spectral: site tuple length mismatch");
  const long m = spec.sites;
  std::vector<double> phi = momentum_grid(m, n);
  // Alternant exponents mu_k - 1 (the lambda + delta staircase collapses).
  std::vector<long> ex_l(static_cast<std::size_t>(n)), ex_r(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) {
    ex_l[static_cast<std::size_t>(j)] = left[static_cast<std::size_t>(j)] - 1;
    ex_r[static_cast<std::size_t>(j)] = right[static_cast<std::size_t>(j)] - 1;
  }
  ComplexF total = 0.0;
  for_each_combination(m, n, [&](std::span<const long> idx) {
    std::vector<ComplexF> x(static_cast<std::size_t>(n)), xbar(static_cast<std::size_t>(n));
    double energy = -spec.field * static_cast<double>(m) / 2.0;
    for (long j = 0; j < n; ++j) {
      double p = phi[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      x[static_cast<std::size_t>(j)] = std::polar(1.0, p);
      xbar[static_cast<std::size_t>(j)] = std::polar(1.0, -p);
      energy += spec.field - std::cos(p);
    }
    double vsq = 1.0;
    for (long a = 0; a < n; ++a)
      for (long b = a + 1; b < n; ++b)
        vsq *= std::norm(x[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(b)]);
    total += std::exp(-beta * energy) * vsq * schur_laurent<ComplexF>(ex_l, x) *
             schur_laurent<ComplexF>(ex_r, xbar);
  });
  total /= std::pow(static_cast<double>(m), static_cast<double>(n));
  return total.real();
}

double amplitude_spectral(const ChainSpec& spec, const StrictPartition& mu_l,
                          const StrictPartition& mu_r, double beta) {
  if (!mu_l.fits_bound(spec.sites) || !mu_r.fits_bound(spec.sites))
    throw std::invalid_argument("amplitude_spectral: site index out of range");
  return amplitude_spectral(spec, std::span<const long>(mu_l.parts()),
                            std::span<const long>(mu_r.parts()), beta);
}

double amplitude_determinant(const ChainSpec& spec, std::span<const long> left,
                             std::span<const long> right, double beta) {
  const long n = spec.particles;
  if (static_cast<long>(left.size()) != n || static_cast<long>(right.size()) != n)
    throw std::invalid_argument("amplitude_determinant: site tuple length mismatch");
  const long m = spec.sites;
  std::vector<double> phi = momentum_grid(m, n);
  Matrix<ComplexF> a(static_cast<std::size_t>(n), std::vector<ComplexF>(static_cast<std::size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      ComplexF acc = 0.0;
      for (double p : phi)
        acc += std::exp(beta * std::cos(p)) *
               std::polar(1.0, p * static_cast<double>(right[static_cast<std::size_t>(j)] -
                                                       left[static_cast<std::size_t>(i)]));
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc / static_cast<double>(m);
    }
  double prefactor = std::exp(beta * spec.field *
                              (static_cast<double>(m) / 2.0 - static_cast<double>(n)));
  return prefactor * det_float(std::move(a)).real();
}

double amplitude_determinant(const ChainSpec& spec, const StrictPartition& mu_l,
                             const StrictPartition& mu_r, double beta) {
  if (!mu_l.fits_bound(spec.sites) || !mu_r.fits_bound(spec.sites))
    throw std::invalid_argument("amplitude_determinant: site index out of range");
  return amplitude_determinant(spec, std::span<const long>(mu_l.parts()),
                               std::span<const long>(mu_r.parts()), beta);
}

namespace {

Matrix<ComplexF> onshell_matrix(const ChainSpec& spec, const BetheSpectrum& spectrum,
                                std::span<const double> alpha) {
  const long n = spec.particles;
  const long m = spec.sites;
  if (static_cast<long>(alpha.size()) != m)
    throw std::invalid_argument("gen_exp_onshell: weight vector must have M entries");
  Matrix<ComplexF> a(static_cast<std::size_t>(n), std::vector<ComplexF>(static_cast<std::size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      ComplexF acc = 0.0;
      double dt = spectrum.theta[static_cast<std::size_t>(i)] -
                  spectrum.theta[static_cast<std::size_t>(j)];
      for (long site = 1; site <= m; ++site)
        acc += std::exp(alpha[static_cast<std::size_t>(site - 1)]) *
               std::polar(1.0, static_cast<double>(site) * dt);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc / static_cast<double>(m);
    }
  return a;
}

}  // namespace

double gen_exp_onshell(const ChainSpec& spec, const BetheSpectrum& spectrum,
                       std::span<const double> alpha) {
  if (spec.particles == 0) return 1.0;
  return det_float(onshell_matrix(spec, spectrum, alpha)).real();
}

double boltzmann_gen_exp(const ChainSpec& spec, const BetheSpectrum& spectrum,
                         std::span<const double> alpha, double beta) {
  const long n = spec.particles;
  double prefactor = std::exp(beta * spec.field * static_cast<double>(spec.sites) / 2.0);
  if (n == 0) return prefactor;
  Matrix<ComplexF> a = onshell_matrix(spec, spectrum, alpha);
  for (long i = 0; i < n; ++i) {
    double eps = spec.field - std::cos(spectrum.theta[static_cast<std::size_t>(i)]);
    for (long j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *= std::exp(-beta * eps);
  }
  return prefactor * det_float(std::move(a)).real();
}

}  // namespace vw
