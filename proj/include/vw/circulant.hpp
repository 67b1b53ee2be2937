#ifndef VW_CIRCULANT_HPP
#define VW_CIRCULANT_HPP

#include <utility>
#include <vector>

#include "vw/bigratio.hpp"
#include "vw/partitions.hpp"

namespace vw {

// Ring of M sites, M even, with nearest-neighbour hopping entries
// Delta_{nm} = delta_{|n-m|,1} + delta_{|n-m|,M-1}.
struct RingSpec {
  long sites;
  explicit RingSpec(long m) : sites(m) {
    if (m < 2 || m % 2 != 0)
      throw std::invalid_argument("RingSpec: site count must be even and >= 2");
  }
};

// Boundary sector of the single-particle hopping kernel. Hopping across the
// wrap link picks up a minus sign in the antiperiodic sector; N-particle
// ring amplitudes use the periodic kernel for N odd and the antiperiodic
// one for N even (the cos Mp = (-1)^(N-1) momentum rule).
enum class RingSector { Periodic, Antiperiodic };

// Exact entries of Delta^K, stored by offset d = (j - m) mod M. In the
// antiperiodic sector the entry flips sign with every full wrap of the
// offset: entry(d + M) = -entry(d).
class CirculantPower {
 public:
  CirculantPower(RingSpec ring, long power, RingSector sector,
                 std::vector<BigInt> by_offset);

  const RingSpec& ring() const { return ring_; }
  long power() const { return power_; }
  RingSector sector() const { return sector_; }
  // Signed-offset kernel value f(d) for any integer d (f(d + M) = -f(d) in
  // the antiperiodic sector, plain periodicity otherwise).
  BigInt entry_offset(long d) const;
  BigInt entry(long j, long m) const { return entry_offset(j - m); }

 private:
  RingSpec ring_;
  long power_;
  RingSector sector_;
  std::vector<BigInt> by_offset_;
};

// (Delta^K)_{jm} through the lacunary-binomial closed form. Periodic sector:
// with d = |j - m| and K - d even, L = (K - d + p M)/2 for the p that puts L
// in [0, M/2], the entry is the lacunary sum C(K, L)_{M/2}, where L = M/2 is
// read as L = 0; odd K - d gives zero. Antiperiodic sector: the signed
// lacunary sum sum_t C(K, t) (-1)^{(K - 2t + j - m)/M} over t with
// K - 2t + j - m divisible by M.
BigInt circulant_power_entry(const RingSpec& ring, long k, long j, long m,
                             RingSector sector = RingSector::Periodic);

// Same closed form as a function of the raw integer offset d = j - m (any
// integer; wraps handled by the sector rule).
BigInt circulant_kernel_offset(const RingSpec& ring, long k, long d,
                               RingSector sector = RingSector::Periodic);

// Ground truth by exact matrix powers of the hopping matrix (with the
// sector sign on the wrap links); also asserts the offset-stationarity of
// the result.
CirculantPower circulant_power_oracle(const RingSpec& ring, long k,
                                      RingSector sector = RingSector::Periodic);

// Cosine-power sum against the exact lacunary binomial sum; fills the two
// side values if requested.
bool ramus_check(long r, long n, long t, double tol, double* trig_side = nullptr,
                 BigInt* exact_side = nullptr);

// sum_{|n|=K} P(n) prod_j (Delta^{n_j})_{muL_j, muR_j}; compositions are
// restricted to n_j of the same parity as |muL_j - muR_j| (other terms
// vanish entry-wise anyway).
BigInt generalized_ramus_lhs(const RingSpec& ring, long k, const StrictPartition& mu_l,
                             const StrictPartition& mu_r);

// Trigonometric side, evaluated over the full momentum grid
// (2^K / M^N) sum_{l in {0..M-1}^N} (sum_k cos(2 pi l_k / M))^K
//   prod_s cos(2 pi l_s (muL_s - muR_s) / M),
// which folds to the half-grid form with prefactor 2^{K+N}/M^N whenever K
// and sum |muL_s - muR_s| have equal parity, and vanishes otherwise.
double generalized_ramus_rhs(const RingSpec& ring, long k, const StrictPartition& mu_l,
                             const StrictPartition& mu_r);

// Determinantal corollary: integer side sum_{|n|=K} P(n)
// det((Delta^{n_j})_{muL_i, muR_j}) and the spectral side over N-subsets of
// the momentum grid with Vandermonde-squared weight and Schur factors.
std::pair<BigInt, double> det_ramus_identity(const RingSpec& ring, long k,
                                             const StrictPartition& mu_l,
                                             const StrictPartition& mu_r);

// (1/N!) int (sum cos phi)^K |V(e^{i phi})|^2 d^N phi / (2 pi)^N on an
// equispaced grid; the default grid of 4(K+N)+2 points per axis integrates
// the trigonometric integrand exactly up to rounding.
double j_integral(long k, long n, long grid_points = 0);

}  // namespace vw

#endif
