#include "doctest.h"

#include <cmath>
#include <numbers>

#include "vw/circulant.hpp"
#include "vw/walks.hpp"

using namespace vw;

namespace {

// Folded form of the generalized Ramus right-hand side: the full momentum
// sum collapses per axis onto l in {0, ..., M/2}, the interior points
// carrying weight 2 and the endpoints l = 0, M/2 weight 1.
double folded_rhs(const RingSpec& ring, long k, const StrictPartition& mu_l,
                  const StrictPartition& mu_r) {
  const long m = ring.sites;
  const long n = mu_l.length();
  double total = 0.0;
  std::vector<long> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    double s = 0.0, prod = 1.0;
    for (long j = 0; j < n; ++j) {
      long l = idx[static_cast<std::size_t>(j)];
      double arg = 2.0 * std::numbers::pi * static_cast<double>(l) /
                   static_cast<double>(m);
      s += std::cos(arg);
      prod *= std::cos(arg * static_cast<double>(mu_l.part(j) - mu_r.part(j)));
      if (l != 0 && l != m / 2) prod *= 2.0;
    }
    total += std::pow(s, static_cast<double>(k)) * prod;
    long at = n - 1;
    while (at >= 0 && idx[static_cast<std::size_t>(at)] == m / 2) {
      idx[static_cast<std::size_t>(at)] = 0;
      --at;
    }
    if (at < 0) break;
    ++idx[static_cast<std::size_t>(at)];
  }
  return total * std::pow(2.0, static_cast<double>(k)) /
         std::pow(static_cast<double>(m), static_cast<double>(n));
}

}  // namespace

TEST_CASE("closed-form circulant entries: golden vectors at M=6") {
  RingSpec ring(6);
  CHECK(circulant_power_entry(ring, 14, 1, 1) == 5462);
  CHECK(circulant_power_entry(ring, 14, 3, 1) == 5461);
  CHECK(circulant_power_entry(ring, 14, 5, 1) == 5461);
  CHECK(circulant_power_entry(ring, 14, 2, 1) == 0);
  CHECK(circulant_power_entry(ring, 14, 4, 1) == 0);
  CHECK(circulant_power_entry(ring, 14, 6, 1) == 0);

  CHECK(circulant_power_entry(ring, 15, 2, 1) == 10923);
  CHECK(circulant_power_entry(ring, 15, 6, 1) == 10923);
  CHECK(circulant_power_entry(ring, 15, 4, 1) == 10922);
  CHECK(circulant_power_entry(ring, 15, 1, 1) == 0);
  CHECK(circulant_power_entry(ring, 15, 3, 1) == 0);
  CHECK(circulant_power_entry(ring, 15, 5, 1) == 0);

  for (long j = 1; j <= 6; ++j)
    for (long mm = 1; mm <= 6; ++mm)
      CHECK(circulant_power_entry(ring, 0, j, mm) == (j == mm ? 1 : 0));
}

TEST_CASE("oracle entries and recursion cross-relations") {
  RingSpec ring(6);
  CirculantPower one = circulant_power_oracle(ring, 1);
  for (long d = 0; d < 6; ++d)
    CHECK(one.entry_offset(d) == ((d == 1 || d == 5) ? 1 : 0));

  CirculantPower p14 = circulant_power_oracle(ring, 14);
  CHECK(p14.entry_offset(0) == 5462);
  CHECK(p14.entry_offset(2) == 5461);
  CHECK(p14.entry_offset(4) == 5461);

  CirculantPower p15 = circulant_power_oracle(ring, 15);
  CHECK(p15.entry_offset(1) == p14.entry_offset(0) + p14.entry_offset(2));
  CHECK(p15.entry_offset(3) == p14.entry_offset(2) + p14.entry_offset(4));

  RingSpec small(4);
  CHECK(circulant_power_oracle(small, 2).entry_offset(0) == 2);

  CHECK_THROWS_AS(RingSpec(5), std::invalid_argument);
  CHECK_THROWS_AS(RingSpec(0), std::invalid_argument);
}

TEST_CASE("closed form equals matrix power oracle") {
  for (long m : {2L, 4L, 6L, 8L}) {
    RingSpec ring(m);
    for (long k = 0; k <= 20; ++k) {
      CirculantPower oracle = circulant_power_oracle(ring, k);
      for (long d = 0; d < m; ++d) {
        CHECK(circulant_power_entry(ring, k, 1 + d, 1) == oracle.entry_offset(d));
        // Ring symmetry and parity vanishing.
        CHECK(oracle.entry_offset(d) == oracle.entry_offset(m - d));
        long dd = std::min(d, m - d);
        if ((k - dd) % 2 != 0) CHECK(oracle.entry_offset(d) == 0);
      }
    }
  }
}

TEST_CASE("antiperiodic closed form equals twisted matrix power oracle") {
  for (long m : {2L, 4L, 6L, 8L}) {
    RingSpec ring(m);
    for (long k = 0; k <= 20; ++k) {
      CirculantPower oracle = circulant_power_oracle(ring, k, RingSector::Antiperiodic);
      for (long j = 1; j <= m; ++j)
        for (long i = 1; i <= m; ++i)
          CHECK(circulant_power_entry(ring, k, j, i, RingSector::Antiperiodic) ==
                oracle.entry(j, i));
    }
  }
  // Sign rule under a full wrap of the signed offset.
  RingSpec ring6(6);
  CirculantPower p = circulant_power_oracle(ring6, 8, RingSector::Antiperiodic);
  for (long d = 0; d < 6; ++d) CHECK(p.entry_offset(d + 6) == -p.entry_offset(d));
}

TEST_CASE("ramus identity") {
  double trig = 0.0;
  BigInt exact;
  CHECK(ramus_check(3, 14, 1, 1e-9, &trig, &exact));
  CHECK(exact == 5462);
  CHECK(trig == doctest::Approx(5462.0).epsilon(1e-12));

  CHECK(ramus_check(1, 0, 0, 1e-12, &trig, &exact));
  CHECK(exact == 1);

  CHECK(ramus_check(2, 4, 0, 1e-9, &trig, &exact));
  CHECK(exact == 8);

  CHECK_THROWS_AS(ramus_check(3, 4, 3, 1e-9), std::invalid_argument);
}

TEST_CASE("generalized ramus identity") {
  RingSpec ring6(6);
  // N = 1 reduction: the product side is a plain circulant entry.
  for (long k : {2L, 6L, 14L}) {
    StrictPartition a({1}), b({1});
    CHECK(generalized_ramus_lhs(ring6, k, a, b) == circulant_power_entry(ring6, k, 1, 1));
    double rhs = generalized_ramus_rhs(ring6, k, a, b);
    CHECK(rhs == doctest::Approx(to_double(generalized_ramus_lhs(ring6, k, a, b)))
                     .epsilon(1e-10));
  }

  StrictPartition mu({2, 1});
  CHECK(generalized_ramus_lhs(ring6, 0, mu, mu) == 1);

  BigInt lhs = generalized_ramus_lhs(ring6, 2, mu, mu);
  CHECK(generalized_ramus_rhs(ring6, 2, mu, mu) ==
        doctest::Approx(to_double(lhs)).epsilon(1e-10));

  // Parity: odd step count with even offsets vanishes on both sides.
  CHECK(generalized_ramus_lhs(ring6, 3, mu, mu) == 0);
  CHECK(std::abs(generalized_ramus_rhs(ring6, 3, mu, mu)) < 1e-10);

  // The folded half-range form (endpoint weights 1, interior 2) agrees with
  // the full-grid evaluation for any parity.
  for (long m : {4L, 6L, 8L}) {
    RingSpec ring(m);
    for (long k = 0; k <= 5; ++k)
      for (const StrictPartition& l : enumerate_strict(2, std::min(m, 4L)))
        for (const StrictPartition& r : enumerate_strict(2, std::min(m, 4L))) {
          double full = generalized_ramus_rhs(ring, k, l, r);
          CHECK(full == doctest::Approx(folded_rhs(ring, k, l, r)).epsilon(1e-9));
          // And the full grid reproduces the integer side exactly.
          CHECK(full ==
                doctest::Approx(to_double(generalized_ramus_lhs(ring, k, l, r)))
                    .epsilon(1e-8));
        }
  }
}

TEST_CASE("determinantal corollary") {
  RingSpec ring8(8);
  StrictPartition mu({2, 1});

  // K = 0 reduces to orthonormality of the spectral sum.
  for (const StrictPartition& r : enumerate_strict(2, 4)) {
    auto [lhs, rhs] = det_ramus_identity(ring8, 0, mu, r);
    CHECK(lhs == (mu == r ? 1 : 0));
    CHECK(rhs == doctest::Approx(to_double(lhs)).epsilon(1e-10));
  }

  // Spectral side equals the multinomial determinant side.
  auto [lhs4, rhs4] = det_ramus_identity(ring8, 4, mu, mu);
  CHECK(rhs4 == doctest::Approx(to_double(lhs4)).epsilon(1e-10));

  // And both count closed walker nests.
  WalkConfig cfg{Geometry::Ring, 8, false};
  CHECK(lhs4 == oracle_count(cfg, mu, mu, 4).total);
}

TEST_CASE("staircase reduction to the binomial-determinant identity") {
  // muL = muR = delta_N makes both Schur factors 1; the corollary becomes
  // the 2^K J(K, N) identity; compare against the long-ring limit via the
  // line-geometry count formula.
  WalkConfig line{Geometry::Line, 0, false};
  for (long n = 1; n <= 3; ++n) {
    StrictPartition delta = staircase(n);
    for (long k = 0; k <= 8; ++k) {
      BigInt lhs = count_formula(line, delta, delta, k);
      double rhs = std::pow(2.0, static_cast<double>(k)) * j_integral(k, n);
      CHECK(to_double(lhs) == doctest::Approx(rhs).epsilon(1e-8));
    }
  }
}

TEST_CASE("j_integral basics") {
  CHECK(std::abs(j_integral(3, 2)) < 1e-12);
  CHECK(std::abs(j_integral(5, 1)) < 1e-12);
  CHECK(j_integral(2, 2) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(j_integral(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j_integral(0, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j_integral(0, 3) == doctest::Approx(1.0).epsilon(1e-12));
}
