#include "vw/walks.hpp"

#include <algorithm>
#include <functional>

#include "vw/combinatorics.hpp"
#include "vw/linalg.hpp"
#include "vw/schur.hpp"

namespace vw {

namespace {

void require_config(const WalkConfig& config, const StrictPartition& mu_l,
                    const StrictPartition& mu_r) {
  if (mu_l.length() != mu_r.length())
    throw std::invalid_argument("walks: partition length mismatch");
  if (config.geometry == Geometry::Ring) {
    RingSpec ring(config.ring_sites);  // validates
    if (!mu_l.fits_bound(ring.sites) || !mu_r.fits_bound(ring.sites))
      throw std::invalid_argument("walks: positions exceed ring size");
  }
}

// Single-particle K-step kernel between sites a and b. On the ring the
// N-walker determinant needs the boundary sector matched to the walker
// parity (periodic for N odd, antiperiodic for N even); the signed-offset
// kernel also covers positions shifted outside [1, M].
BigInt hop_count(const WalkConfig& config, long walkers, long n, long a, long b) {
  if (config.geometry == Geometry::Ring) {
    RingSector sector =
        walkers % 2 == 0 ? RingSector::Antiperiodic : RingSector::Periodic;
    return circulant_kernel_offset(RingSpec(config.ring_sites), n, a - b, sector);
  }
  long d = std::abs(a - b);
  if ((n - d) % 2 != 0) return 0;
  return binomial(n, (n - d) / 2);
}

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

using State = std::vector<long>;  // strictly decreasing positions

// One-tick evolution of counts by state: every single-walker hop, plus a
// stay branch that shifts the stay index when requested.
std::map<State, std::vector<BigInt>> evolve(const WalkConfig& config,
                                            const std::map<State, std::vector<BigInt>>& cur,
                                            long max_stays) {
  std::map<State, std::vector<BigInt>> next;
  auto add = [&](const State& s, long p, const BigInt& c) {
    auto& slot = next[s];
    if (slot.size() < static_cast<std::size_t>(max_stays + 1))
      slot.resize(static_cast<std::size_t>(max_stays + 1));
    slot[static_cast<std::size_t>(p)] += c;
  };
  const long m = config.ring_sites;
  for (const auto& [state, counts] : cur) {
    for (std::size_t i = 0; i < state.size(); ++i) {
      for (long dir : {+1, -1}) {
        long pos = state[i] + dir;
        if (config.geometry == Geometry::Ring) pos = (pos - 1 + m) % m + 1;
        bool collision = false;
        for (std::size_t j = 0; j < state.size(); ++j)
          if (j != i && state[j] == pos) {
            collision = true;
            break;
          }
        if (collision) continue;
        State moved = state;
        moved[i] = pos;
        std::sort(moved.begin(), moved.end(), std::greater<long>());
        for (std::size_t p = 0; p < counts.size(); ++p)
          if (counts[p] != 0) add(moved, static_cast<long>(p), counts[p]);
      }
    }
    if (config.stays_allowed) {
      for (std::size_t p = 0; p + 1 < counts.size(); ++p)
        if (counts[p] != 0) add(state, static_cast<long>(p) + 1, counts[p]);
    }
  }
  return next;
}

}  // namespace

NestCount oracle_count(const WalkConfig& config, const StrictPartition& mu_l,
                       const StrictPartition& mu_r, long k, const WalkLimits& limits) {
  require_config(config, mu_l, mu_r);
  if (k < 0) throw std::invalid_argument("oracle_count: negative step count");
  if (mu_l.length() > limits.max_walkers)
    throw GuardError("oracle_count: walker count exceeds guard (max_walkers)");
  if (k > limits.max_steps)
    throw GuardError("oracle_count: step count exceeds guard (max_steps)");
  const long max_stays = config.stays_allowed ? k : 0;
  std::map<State, std::vector<BigInt>> cur;
  cur[mu_l.parts()] = std::vector<BigInt>(static_cast<std::size_t>(max_stays + 1));
  cur[mu_l.parts()][0] = 1;
  for (long step = 0; step < k; ++step) cur = evolve(config, cur, max_stays);
  NestCount out;
  auto it = cur.find(mu_r.parts());
  if (it != cur.end()) {
    for (std::size_t p = 0; p < it->second.size(); ++p) {
      if (it->second[p] == 0) continue;
      out.by_stays[static_cast<long>(p)] = it->second[p];
      out.total += it->second[p];
    }
  }
  return out;
}

BigInt count_formula_raw(const WalkConfig& config, std::span<const long> left,
                         std::span<const long> right, long k) {
  if (k < 0) throw std::invalid_argument("count_formula: negative step count");
  const long n = static_cast<long>(left.size());
  if (static_cast<long>(right.size()) != n)
    throw std::invalid_argument("count_formula: position tuple length mismatch");
  if (n == 0) return k == 0 ? 1 : 0;
  BigInt total = 0;
  std::vector<long> parts(static_cast<std::size_t>(n));
  for_each_composition(k, n, parts, 0, [&](std::span<const long> comp) {
    Matrix<BigInt> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            hop_count(config, n, comp[static_cast<std::size_t>(j)],
                      left[static_cast<std::size_t>(i)], right[static_cast<std::size_t>(j)]);
    BigInt det = det_ring(a, BigInt(0), BigInt(1));
    if (det != 0) total += multinomial(comp) * det;
  });
  return total;
}

BigInt count_formula(const WalkConfig& config, const StrictPartition& mu_l,
                     const StrictPartition& mu_r, long k) {
  require_config(config, mu_l, mu_r);
  return count_formula_raw(config, mu_l.parts(), mu_r.parts(), k);
}

std::vector<BigInt> count_with_stays(const WalkConfig& config, const StrictPartition& mu_l,
                                     const StrictPartition& mu_r, long k) {
  std::vector<BigInt> coeff(static_cast<std::size_t>(k + 1));
  for (long p = 0; p <= k; ++p)
    coeff[static_cast<std::size_t>(p)] = binomial(k, p) * count_formula(config, mu_l, mu_r, k - p);
  return coeff;
}

TruncatedSeries bessel_det_generating(const StrictPartition& mu_l,
                                      const StrictPartition& mu_r, long order) {
  const long n = mu_l.length();
  if (mu_r.length() != n)
    throw std::invalid_argument("bessel_det_generating: partition length mismatch");
  std::vector<std::vector<TruncatedSeries>> m;
  for (long i = 0; i < n; ++i) {
    std::vector<TruncatedSeries> row;
    for (long j = 0; j < n; ++j)
      row.push_back(bessel_i_series(std::abs(mu_l.part(i) - mu_r.part(j)), order));
    m.push_back(std::move(row));
  }
  return series_det(m);
}

TruncatedSeries ring_det_generating(const RingSpec& ring, const StrictPartition& mu_l,
                                    const StrictPartition& mu_r, long order) {
  const long n = mu_l.length();
  if (mu_r.length() != n)
    throw std::invalid_argument("ring_det_generating: partition length mismatch");
  RingSector sector = n % 2 == 0 ? RingSector::Antiperiodic : RingSector::Periodic;
  std::vector<std::vector<TruncatedSeries>> m;
  for (long i = 0; i < n; ++i) {
    std::vector<TruncatedSeries> row;
    for (long j = 0; j < n; ++j) {
      TruncatedSeries s("beta", order);
      for (long p = 0; p <= order; ++p) {
        BigInt denom = (BigInt(1) << static_cast<unsigned long>(p)) * factorial(p);
        BigInt num =
            circulant_power_entry(ring, p, mu_l.part(i), mu_r.part(j), sector);
        if (num != 0) s.set_coefficient(p, make_ratio(num, denom));
      }
      row.push_back(std::move(s));
    }
    m.push_back(std::move(row));
  }
  return series_det(m);
}

std::vector<StrictPartition> strict_partitions_of_weight(long m, long n) {
  std::vector<StrictPartition> out;
  std::vector<long> acc;
  // Parts listed decreasing; part(i) >= remaining staircase below it.
  std::function<void(long, long, long)> rec = [&](long remaining, long slots, long upper) {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(acc);
      return;
    }
    long floor = slots * (slots + 1) / 2;  // minimal weight of `slots` distinct parts
    for (long v = std::min(upper, remaining - floor + slots); v >= slots; --v) {
      acc.push_back(v);
      rec(remaining - v, slots - 1, v - 1);
      acc.pop_back();
    }
  };
  rec(m, n, m);
  return out;
}

std::vector<BigInt> compound_count(long walkers, long box, long pinned, long k,
                                   const WalkLimits& limits) {
  if (pinned < 0 || pinned > walkers)
    throw std::invalid_argument("compound_count: pinned count out of range");
  if (walkers > limits.max_walkers + 1 || k > limits.max_steps)
    throw GuardError("compound_count: arguments exceed guard");
  const long sites = box + walkers;
  WalkConfig line{Geometry::Line, 0, false};
  PinnedSpec spec(pinned > 0 ? staircase(pinned) : StrictPartition());
  std::vector<StrictPartition> left = enumerate_pinned(spec, walkers, sites);
  std::vector<StrictPartition> right = enumerate_strict(walkers, sites);
  std::vector<BigInt> base(static_cast<std::size_t>(k + 1));
  for (long steps = 0; steps <= k; ++steps) {
    BigInt sum = 0;
    for (const auto& ml : left) {
      BigInt sl = schur_ones(to_nonstrict(ml));
      for (const auto& mr : right) {
        BigInt cnt = count_formula(line, ml, mr, steps);
        if (cnt != 0) sum += sl * schur_ones(to_nonstrict(mr)) * cnt;
      }
    }
    base[static_cast<std::size_t>(steps)] = sum;
  }
  std::vector<BigInt> coeff(static_cast<std::size_t>(k + 1));
  for (long p = 0; p <= k; ++p)
    coeff[static_cast<std::size_t>(p)] = binomial(k, p) * base[static_cast<std::size_t>(k - p)];
  return coeff;
}

double compound_count_value(long walkers, long box, long pinned, long k, double w,
                            const WalkLimits& limits) {
  std::vector<BigInt> coeff = compound_count(walkers, box, pinned, k, limits);
  double acc = 0.0;
  double wp = 1.0;
  for (const BigInt& c : coeff) {
    acc += to_double(c) * wp;
    wp *= w;
  }
  return acc;
}

BigInt closed_ensemble_by_weight(long walkers, long k, long m) {
  WalkConfig line{Geometry::Line, 0, false};
  BigInt total = 0;
  for (const StrictPartition& mu : strict_partitions_of_weight(m, walkers))
    total += count_formula(line, mu, mu, k);
  return total;
}

}  // namespace vw
