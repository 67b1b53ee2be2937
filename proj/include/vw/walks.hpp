#ifndef VW_WALKS_HPP
#define VW_WALKS_HPP

#include <map>
#include <vector>

#include "vw/bigratio.hpp"
#include "vw/circulant.hpp"
#include "vw/partitions.hpp"
#include "vw/series.hpp"

namespace vw {

enum class Geometry { Line, Ring };

struct WalkConfig {
  Geometry geometry = Geometry::Line;
  long ring_sites = 0;  // M, required for ring geometry
  bool stays_allowed = false;
};

struct WalkLimits {
  long max_walkers = 3;
  long max_steps = 8;
};

// Exact nest count; when stays are tracked, by_stays[p] is the number of
// K-tick sequences containing exactly p all-stationary ticks.
struct NestCount {
  BigInt total = 0;
  std::map<long, BigInt> by_stays;
};

// Exhaustive transfer count of K-tick move sequences (one walker hops +-1
// per tick, optionally a global stay) from muL to muR with pairwise-distinct
// configurations throughout.
NestCount oracle_count(const WalkConfig& config, const StrictPartition& mu_l,
                       const StrictPartition& mu_r, long k, const WalkLimits& limits = {});

// Multinomial sum of hop-count determinants: circulant entries on the ring,
// binomial entries on the line. No stays.
BigInt count_formula(const WalkConfig& config, const StrictPartition& mu_l,
                     const StrictPartition& mu_r, long k);

// Same sum on raw position tuples: repeated parts vanish by antisymmetry,
// and ring positions may sit outside [1, M] (reduced modulo M). This is the
// form entering the hopping recursion, where shifted endpoints can collide
// or wrap.
BigInt count_formula_raw(const WalkConfig& config, std::span<const long> left,
                         std::span<const long> right, long k);

// Coefficients of w^p (w = h(M-2N)) in the stay-dressed count: the p-th
// entry is C(K,p) times the (K-p)-step stay-free count.
std::vector<BigInt> count_with_stays(const WalkConfig& config, const StrictPartition& mu_l,
                                     const StrictPartition& mu_r, long k);

// Generating function det(I_{|muL_i - muR_j|}(beta)) as an exact truncated
// series; extract_dk at K reproduces the infinite-line nest count.
TruncatedSeries bessel_det_generating(const StrictPartition& mu_l,
                                      const StrictPartition& mu_r, long order);

// Ring analogue with exact single-particle series sum_K (x/2)^K/K! (Delta^K)_{jm}.
TruncatedSeries ring_det_generating(const RingSpec& ring, const StrictPartition& mu_l,
                                    const StrictPartition& mu_r, long order);

// Compound lock-step + random-turns + lock-step paths: w^p coefficients of
// sum over left shapes pinned at delta_l and free right shapes of
// S(1) S(1) |P^0_{K-p}(muL~ -> muR)| on the infinite line.
std::vector<BigInt> compound_count(long walkers, long box, long pinned, long k,
                                   const WalkLimits& limits = {});
double compound_count_value(long walkers, long box, long pinned, long k, double w,
                            const WalkLimits& limits = {});

// sum over strict partitions of weight m (length N) of the closed
// infinite-line nest count |P^0_K(mu -> mu)|.
BigInt closed_ensemble_by_weight(long walkers, long k, long m);

// All strict partitions of m into exactly n parts.
std::vector<StrictPartition> strict_partitions_of_weight(long m, long n);

}  // namespace vw

#endif
