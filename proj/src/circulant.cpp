#include "vw/circulant.hpp"

#include <cmath>
#include <numbers>

#include "vw/combinatorics.hpp"
#include "vw/linalg.hpp"
#include "vw/parallel.hpp"
#include "vw/schur.hpp"

namespace vw {

namespace {

constexpr double kPi = std::numbers::pi;

void require_sites(const RingSpec& ring, long j, const char* who) {
  if (j < 1 || j > ring.sites) throw std::invalid_argument(std::string(who) + ": site index out of range");
}

// Enumerates compositions n of k into parts.size() slots and calls fn.
void for_each_composition(long k, long slots, std::vector<long>& parts, long at,
                          const std::function<void(std::span<const long>)>& fn) {
  if (at == slots - 1) {
    parts[static_cast<std::size_t>(at)] = k;
    fn(parts);
    return;
  }
  for (long v = 0; v <= k; ++v) {
    parts[static_cast<std::size_t>(at)] = v;
    for_each_composition(k - v, slots, parts, at + 1, fn);
  }
}

}  // namespace

CirculantPower::CirculantPower(RingSpec ring, long power, RingSector sector,
                               std::vector<BigInt> by_offset)
    : ring_(ring), power_(power), sector_(sector), by_offset_(std::move(by_offset)) {
  if (by_offset_.size() != static_cast<std::size_t>(ring_.sites))
    throw std::invalid_argument("CirculantPower: wrong offset table size");
}

BigInt CirculantPower::entry_offset(long d) const {
  const long m = ring_.sites;
  long r = ((d % m) + m) % m;
  BigInt v = by_offset_[static_cast<std::size_t>(r)];
  if (sector_ == RingSector::Antiperiodic && ((d - r) / m) % 2 != 0) v = -v;
  return v;
}

BigInt circulant_kernel_offset(const RingSpec& ring, long k, long d, RingSector sector) {
  if (k < 0) throw std::invalid_argument("circulant_kernel_offset: negative power");
  const long sites = ring.sites;
  if (sector == RingSector::Antiperiodic) {
    // (1/M) sum_{p: e^{ipM} = -1} (2 cos p)^K e^{ipd} expanded over
    // binomials: only exponents K - 2t + d divisible by M survive, each
    // weighted by the wrap parity.
    BigInt value = 0;
    for (long t = 0; t <= k; ++t) {
      long e = k - 2 * t + d;
      if (e % sites != 0) continue;
      BigInt term = binomial(k, t);
      value += ((e / sites) % 2 == 0) ? term : -term;
    }
    return value;
  }
  const long half = sites / 2;
  long r = ((d % sites) + sites) % sites;
  long dd = std::min(r, sites - r);
  if ((k - dd) % 2 != 0) return 0;
  // Scan p; all admissible L must give the same lacunary sum (L = 0 and
  // L = M/2 are the equivalent boundary cases).
  bool found = false;
  BigInt value;
  for (long p = -(k / sites) - 1; p <= 1; ++p) {
    long twice = k - dd + p * sites;
    if (twice % 2 != 0) continue;
    long l = twice / 2;
    if (l < 0 || l > half) continue;
    if (l == half) l = 0;
    BigInt candidate = lacunary_binomial(k, l, half);
    if (found && candidate != value)
      throw std::logic_error("circulant_kernel_offset: ambiguous residue");
    value = candidate;
    found = true;
  }
  if (!found) throw std::logic_error("circulant_kernel_offset: no admissible L");
  return value;
}

BigInt circulant_power_entry(const RingSpec& ring, long k, long j, long m,
                             RingSector sector) {
  require_sites(ring, j, "circulant_power_entry");
  require_sites(ring, m, "circulant_power_entry");
  return circulant_kernel_offset(ring, k, j - m, sector);
}

CirculantPower circulant_power_oracle(const RingSpec& ring, long k, RingSector sector) {
  if (k < 0) throw std::invalid_argument("circulant_power_oracle: negative power");
  const long m = ring.sites;
  const long sign = sector == RingSector::Antiperiodic ? -1 : 1;
  Matrix<BigInt> hop(static_cast<std::size_t>(m),
                     std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(0)));
  for (long i = 0; i < m; ++i) {
    hop[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % m)] +=
        (i == m - 1) ? sign : 1;
    hop[static_cast<std::size_t>(i)][static_cast<std::size_t>((i - 1 + m) % m)] +=
        (i == 0) ? sign : 1;
  }
  Matrix<BigInt> acc(static_cast<std::size_t>(m),
                     std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(0)));
  for (long i = 0; i < m; ++i) acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (long step = 0; step < k; ++step) {
    Matrix<BigInt> next(static_cast<std::size_t>(m),
                        std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(0)));
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j) {
        const BigInt& v = acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (v == 0) continue;
        for (long l = 0; l < m; ++l) {
          const BigInt& h = hop[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
          if (h != 0)
            next[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] += v * h;
        }
      }
    acc = std::move(next);
  }
  std::vector<BigInt> by_offset(static_cast<std::size_t>(m));
  for (long d = 0; d < m; ++d)
    by_offset[static_cast<std::size_t>(d)] = acc[static_cast<std::size_t>(d)][0];
  CirculantPower out(ring, k, sector, std::move(by_offset));
  // The power must be stationary in the signed offset.
  for (long j = 0; j < m; ++j)
    for (long i = 0; i < m; ++i)
      if (acc[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] !=
          out.entry_offset(j - i))
        throw std::logic_error("circulant_power_oracle: offset structure violated");
  return out;
}

bool ramus_check(long r, long n, long t, double tol, double* trig_side,
                 BigInt* exact_side) {
  if (r < 1) throw std::invalid_argument("ramus_check: R must be positive");
  if (n < 0) throw std::invalid_argument("ramus_check: n must be non-negative");
  if (t < 0 || t >= r) throw std::invalid_argument("ramus_check: t out of range");
  double trig = 0.0;
  for (long j = 0; j < r; ++j) {
    double a = kPi * static_cast<double>(j) / static_cast<double>(r);
    trig += std::pow(std::cos(a), static_cast<double>(n)) *
            std::cos(a * static_cast<double>(n - 2 * t));
  }
  trig *= std::pow(2.0, static_cast<double>(n)) / static_cast<double>(r);
  BigInt exact = lacunary_binomial(n, t, r);
  if (trig_side) *trig_side = trig;
  if (exact_side) *exact_side = exact;
  return std::abs(trig - to_double(exact)) <= tol;
}

BigInt generalized_ramus_lhs(const RingSpec& ring, long k, const StrictPartition& mu_l,
                             const StrictPartition& mu_r) {
  const long n = mu_l.length();
  if (mu_r.length() != n)
    throw std::invalid_argument("generalized_ramus_lhs: partition length mismatch");
  if (n == 0) return k == 0 ? 1 : 0;
  BigInt total = 0;
  std::vector<long> parts(static_cast<std::size_t>(n));
  for_each_composition(k, n, parts, 0, [&](std::span<const long> comp) {
    BigInt prod = 1;
    for (long j = 0; j < n; ++j) {
      long d = std::abs(mu_l.part(j) - mu_r.part(j));
      if ((comp[static_cast<std::size_t>(j)] - d) % 2 != 0) return;  // vanishing entry
      prod *= circulant_power_entry(ring, comp[static_cast<std::size_t>(j)], mu_l.part(j),
                                    mu_r.part(j));
      if (prod == 0) return;
    }
    total += multinomial(comp) * prod;
  });
  return total;
}

double generalized_ramus_rhs(const RingSpec& ring, long k, const StrictPartition& mu_l,
                             const StrictPartition& mu_r) {
  const long n = mu_l.length();
  if (mu_r.length() != n)
    throw std::invalid_argument("generalized_ramus_rhs: partition length mismatch");
  const long m = ring.sites;
  std::vector<double> cosv(static_cast<std::size_t>(m));
  for (long l = 0; l < m; ++l)
    cosv[static_cast<std::size_t>(l)] = std::cos(2.0 * kPi * static_cast<double>(l) /
                                                 static_cast<double>(m));
  std::vector<double> slot(static_cast<std::size_t>(m), 0.0);
  parallel_for(m, [&](long first) {
    std::vector<long> idx(static_cast<std::size_t>(n), 0);
    idx[0] = first;
    double acc = 0.0;
    while (true) {
      double s = 0.0, prod = 1.0;
      for (long j = 0; j < n; ++j) {
        long l = idx[static_cast<std::size_t>(j)];
        s += cosv[static_cast<std::size_t>(l)];
        long d = mu_l.part(j) - mu_r.part(j);
        prod *= std::cos(2.0 * kPi * static_cast<double>(l) * static_cast<double>(d) /
                         static_cast<double>(m));
      }
      acc += std::pow(s, static_cast<double>(k)) * prod;
      long at = n - 1;
      while (at >= 1 && idx[static_cast<std::size_t>(at)] == m - 1) {
        idx[static_cast<std::size_t>(at)] = 0;
        --at;
      }
      if (at == 0) break;
      ++idx[static_cast<std::size_t>(at)];
    }
    slot[static_cast<std::size_t>(first)] = acc;
  });
  double total = 0.0;
  for (double v : slot) total += v;
  return total * std::pow(2.0, static_cast<double>(k)) /
         std::pow(static_cast<double>(m), static_cast<double>(n));
}

std::pair<BigInt, double> det_ramus_identity(const RingSpec& ring, long k,
                                             const StrictPartition& mu_l,
                                             const StrictPartition& mu_r) {
  const long n = mu_l.length();
  if (mu_r.length() != n)
    throw std::invalid_argument("det_ramus_identity: partition length mismatch");
  const long m = ring.sites;

  BigInt lhs = 0;
  std::vector<long> parts(static_cast<std::size_t>(n));
  for_each_composition(k, n, parts, 0, [&](std::span<const long> comp) {
    Matrix<BigInt> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = circulant_power_entry(
            ring, comp[static_cast<std::size_t>(j)], mu_l.part(i), mu_r.part(j));
    lhs += multinomial(comp) * det_ring(a, BigInt(0), BigInt(1));
  });

  // Spectral side over N-subsets of the momentum grid phi_n = (2 pi / M)(n - M/2).
  Partition lam_l = to_nonstrict(mu_l);
  Partition lam_r = to_nonstrict(mu_r);
  std::vector<double> phi(static_cast<std::size_t>(m));
  for (long i = 1; i <= m; ++i)
    phi[static_cast<std::size_t>(i - 1)] =
        2.0 * kPi * (static_cast<double>(i) - static_cast<double>(m) / 2.0) /
        static_cast<double>(m);
  std::vector<long> choose(static_cast<std::size_t>(n));
  ComplexF rhs = 0.0;
  std::function<void(long, long)> rec = [&](long start, long depth) {
    if (depth == n) {
      std::vector<ComplexF> x(static_cast<std::size_t>(n));
      double csum = 0.0;
      for (long j = 0; j < n; ++j) {
        double p = phi[static_cast<std::size_t>(choose[static_cast<std::size_t>(j)])];
        x[static_cast<std::size_t>(j)] = std::polar(1.0, p);
        csum += std::cos(p);
      }
      std::vector<ComplexF> xbar(x);
      for (auto& v : xbar) v = std::conj(v);
      double vsq = 1.0;
      for (long a = 0; a < n; ++a)
        for (long b = a + 1; b < n; ++b)
          vsq *= std::norm(x[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(b)]);
      ComplexF sl = schur_laurent<ComplexF>(bialternant_exponents(lam_l), x);
      ComplexF sr = schur_laurent<ComplexF>(bialternant_exponents(lam_r), xbar);
      rhs += std::pow(2.0 * csum, static_cast<double>(k)) * vsq * sl * sr;
      return;
    }
    for (long i = start; i < m; ++i) {
      choose[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  rhs /= std::pow(static_cast<double>(m), static_cast<double>(n));
  return {lhs, rhs.real()};
}

double j_integral(long k, long n, long grid_points) {
  if (k < 0 || n < 1) throw std::invalid_argument("j_integral: bad arguments");
  const long g = grid_points > 0 ? grid_points : 4 * (k + n) + 2;
  std::vector<double> phi(static_cast<std::size_t>(g)), cphi(static_cast<std::size_t>(g));
  for (long i = 0; i < g; ++i) {
    phi[static_cast<std::size_t>(i)] = -kPi + 2.0 * kPi * static_cast<double>(i) /
                                                  static_cast<double>(g);
    cphi[static_cast<std::size_t>(i)] = std::cos(phi[static_cast<std::size_t>(i)]);
  }
  std::vector<double> slot(static_cast<std::size_t>(g), 0.0);
  parallel_for(g, [&](long first) {
    std::vector<long> idx(static_cast<std::size_t>(n), 0);
    idx[0] = first;
    double acc = 0.0;
    while (true) {
      double s = 0.0, vsq = 1.0;
      for (long a = 0; a < n; ++a) {
        s += cphi[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
        for (long b = a + 1; b < n; ++b) {
          double diff = phi[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] -
                        phi[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
          vsq *= 2.0 * (1.0 - std::cos(diff));
        }
      }
      acc += std::pow(s, static_cast<double>(k)) * vsq;
      long at = n - 1;
      while (at >= 1 && idx[static_cast<std::size_t>(at)] == g - 1) {
        idx[static_cast<std::size_t>(at)] = 0;
        --at;
      }
      if (at == 0) break;
      ++idx[static_cast<std::size_t>(at)];
    }
    slot[static_cast<std::size_t>(first)] = acc;
  });
  double total = 0.0;
  for (double v : slot) total += v;
  double fact = 1.0;
  for (long i = 2; i <= n; ++i) fact *= static_cast<double>(i);
  return total / std::pow(static_cast<double>(g), static_cast<double>(n)) / fact;
}

}  // namespace vw
