#ifndef VW_BETHE_HPP
#define VW_BETHE_HPP

#include <span>
#include <vector>

#include "vw/bigratio.hpp"
#include "vw/linalg.hpp"
#include "vw/partitions.hpp"
#include "vw/schur.hpp"

namespace vw {

struct ChainSpec {
  long sites;       // M, even
  long particles;   // N flipped spins
  double field = 0.0;

  ChainSpec(long m, long n, double h = 0.0) : sites(m), particles(n), field(h) {
    if (m < 2 || m % 2 != 0)
      throw std::invalid_argument("ChainSpec: site count must be even and >= 2");
    if (n < 0 || n > m) throw std::invalid_argument("ChainSpec: bad particle count");
  }
};

// Quasi-momenta theta_j = (2 pi / M)(I_j - (N+1)/2) for integer quantum
// numbers M >= I_1 > ... > I_N >= 1; these solve e^{i M theta} = (-1)^(N-1)
// for either parity of N. Half-integer input (stored doubled) is accepted as
// the shifted momentum numbers I - (N+1)/2 when N is even.
struct BetheSpectrum {
  std::vector<long> quantum_numbers;  // I_j, integers
  std::vector<double> theta;
  double energy = 0.0;
  double norm_sq = 1.0;
};

// two_i holds 2*I_j. All-even input is the integer convention of the
// spectrum; all-odd input with N even is the half-integer momentum
// convention. Anything else is a parity error.
BetheSpectrum bethe_roots(const ChainSpec& spec, std::span<const long> two_i);

// Every admissible quantum-number set (C(M, N) of them), I decreasing.
std::vector<std::vector<long>> all_quantum_numbers(const ChainSpec& spec);

// Builds the Bethe vector in the flipped-spin basis, applies the
// Hamiltonian, and returns max |(Hv - E v)_mu| / ||v||.
double eigen_residual(const ChainSpec& spec, const BetheSpectrum& spectrum,
                      long max_sites = 10);

// Bethe vector components S_{mu-delta}(e^{i theta}) over enumerate_strict
// order; used by the residual check and by orthogonality tests.
std::vector<ComplexF> bethe_vector(const ChainSpec& spec, const BetheSpectrum& spectrum);

// N-particle transition amplitude <muL| e^{-beta H} |muR>, spectral-sum and
// determinant routes. The span forms accept raw site tuples; repeated sites
// vanish (coincident alternant exponents / determinant columns).
double amplitude_spectral(const ChainSpec& spec, std::span<const long> left,
                          std::span<const long> right, double beta);
double amplitude_spectral(const ChainSpec& spec, const StrictPartition& mu_l,
                          const StrictPartition& mu_r, double beta);
double amplitude_determinant(const ChainSpec& spec, std::span<const long> left,
                             std::span<const long> right, double beta);
double amplitude_determinant(const ChainSpec& spec, const StrictPartition& mu_l,
                             const StrictPartition& mu_r, double beta);

// Off-shell matrix element of the generating exponential; points are passed
// as the tuples u^2 and v^-2, weights as g_n = e^{alpha_n}.
template <class F>
F gen_exp_offshell_sum(long box, std::span<const F> v_inv2, std::span<const F> u2,
                       std::span<const F> weights) {
  const long n = static_cast<long>(u2.size());
  if (static_cast<long>(v_inv2.size()) != n)
    throw std::invalid_argument("gen_exp_offshell_sum: length mismatch");
  const long m = static_cast<long>(weights.size());
  if (m != box + n) throw std::invalid_argument("gen_exp_offshell_sum: M != box + N");
  F total(0);
  for (const Partition& lam : BoxPartitions(n, box)) {
    StrictPartition mu = from_nonstrict(lam);
    F w(1);
    for (long i = 0; i < n; ++i) w = w * weights[static_cast<std::size_t>(mu.part(i) - 1)];
    F sv = points_distinct(v_inv2) ? schur_bialternant(lam, v_inv2)
                                   : schur_paths(lam, v_inv2);
    F su = points_distinct(u2) ? schur_bialternant(lam, u2) : schur_paths(lam, u2);
    total = total + sv * su * w;
  }
  return total;
}

template <class F>
F gen_exp_offshell(long box, std::span<const F> v_inv2, std::span<const F> u2,
                   std::span<const F> weights) {
  const long n = static_cast<long>(u2.size());
  if (static_cast<long>(v_inv2.size()) != n)
    throw std::invalid_argument("gen_exp_offshell: length mismatch");
  const long m = static_cast<long>(weights.size());
  if (m != box + n) throw std::invalid_argument("gen_exp_offshell: M != box + N");
  if (!points_distinct(u2) || !points_distinct(v_inv2))
    return gen_exp_offshell_sum(box, v_inv2, u2, weights);
  Matrix<F> a(static_cast<std::size_t>(n), std::vector<F>(static_cast<std::size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      F ratio = u2[static_cast<std::size_t>(i)] * v_inv2[static_cast<std::size_t>(j)];
      F acc(0);
      F pw(1);
      for (long site = 0; site < m; ++site) {
        acc = acc + weights[static_cast<std::size_t>(site)] * pw;
        pw = pw * ratio;
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  return detail::det_auto(std::move(a)) / (vandermonde(u2) * vandermonde(v_inv2));
}

// On-shell normalized matrix element det(e^alpha-hat), entries
// (1/M) sum_n e^{alpha_n + i n (theta_i - theta_j)}.
double gen_exp_onshell(const ChainSpec& spec, const BetheSpectrum& spectrum,
                       std::span<const double> alpha);

// e^{beta h M / 2} det(e^{-beta eps-hat} e^{alpha-hat}).
double boltzmann_gen_exp(const ChainSpec& spec, const BetheSpectrum& spectrum,
                         std::span<const double> alpha, double beta);

}  // namespace vw

#endif
