#include "doctest.h"

#include <cmath>
#include <random>

#include "vw/bethe.hpp"
#include "vw/genfun.hpp"
#include "vw/walks.hpp"

using namespace vw;

namespace {

std::vector<double> zeros(long m) { return std::vector<double>(static_cast<std::size_t>(m), 0.0); }

double dense_norm_sq(const ChainSpec& spec, const BetheSpectrum& s) {
  double acc = 0.0;
  for (const ComplexF& c : bethe_vector(spec, s)) acc += std::norm(c);
  return acc;
}

}  // namespace

TEST_CASE("bethe roots and norms") {
  ChainSpec m4n1(4, 1, 0.7);
  BetheSpectrum s1 = bethe_roots(m4n1, std::vector<long>{2});  // I = (1)
  CHECK(s1.theta[0] == doctest::Approx(0.0));
  CHECK(s1.energy == doctest::Approx(-0.7 * 2.0 + (0.7 - 1.0)));

  // Half-integer momentum input (3/2, 1/2) for two particles.
  ChainSpec m4n2(4, 2, 0.0);
  BetheSpectrum s2 = bethe_roots(m4n2, std::vector<long>{3, 1});
  CHECK(s2.norm_sq == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(s2.quantum_numbers == std::vector<long>{3, 2});
  // Bethe condition e^{i M theta} = (-1)^(N-1).
  for (double t : s2.theta)
    CHECK(std::cos(4.0 * t) == doctest::Approx(-1.0).epsilon(1e-12));

  // N = 1 ground state momentum is exactly zero for any chain length.
  for (long m : {4L, 6L, 8L}) {
    ChainSpec spec(m, 1, 0.0);
    BetheSpectrum g = bethe_roots(spec, std::vector<long>{2});
    CHECK(g.theta[0] == doctest::Approx(0.0));
  }

  // Norm formula equals the direct sum of squared Schur values.
  for (long m : {4L, 6L}) {
    for (long n = 1; n <= 3; ++n) {
      ChainSpec spec(m, n, 0.0);
      for (const auto& two_i : all_quantum_numbers(spec)) {
        BetheSpectrum s = bethe_roots(spec, two_i);
        CHECK(s.norm_sq == doctest::Approx(dense_norm_sq(spec, s)).epsilon(1e-10));
      }
    }
  }

  CHECK_THROWS_AS(bethe_roots(m4n1, std::vector<long>{3}), std::invalid_argument);
  CHECK_THROWS_AS(bethe_roots(m4n2, std::vector<long>{3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(bethe_roots(m4n2, std::vector<long>{12, 2}), std::invalid_argument);
}

TEST_CASE("on-shell states are eigenstates") {
  for (long m : {4L, 6L, 8L}) {
    for (long n = 1; n <= 3; ++n) {
      ChainSpec spec(m, n, 0.35);
      for (const auto& two_i : all_quantum_numbers(spec)) {
        BetheSpectrum s = bethe_roots(spec, two_i);
        CHECK(eigen_residual(spec, s) <= 1e-10);
      }
    }
  }
  ChainSpec vac(6, 0, 0.2);
  BetheSpectrum empty = bethe_roots(vac, std::vector<long>{});
  CHECK(eigen_residual(vac, empty) == 0.0);
  CHECK(empty.energy == doctest::Approx(-0.2 * 3.0));

  ChainSpec big(12, 1, 0.0);
  BetheSpectrum sb = bethe_roots(big, std::vector<long>{2});
  CHECK_THROWS_AS(eigen_residual(big, sb), GuardError);
}

TEST_CASE("distinct spectra are orthogonal") {
  ChainSpec spec(6, 2, 0.0);
  auto qs = all_quantum_numbers(spec);
  for (std::size_t a = 0; a < qs.size(); ++a)
    for (std::size_t b = a + 1; b < qs.size(); ++b) {
      auto va = bethe_vector(spec, bethe_roots(spec, qs[a]));
      auto vb = bethe_vector(spec, bethe_roots(spec, qs[b]));
      ComplexF dot = 0.0;
      for (std::size_t i = 0; i < va.size(); ++i) dot += std::conj(va[i]) * vb[i];
      CHECK(std::abs(dot) < 1e-10);
    }
}

TEST_CASE("amplitude routes agree and start from orthonormality") {
  for (long n = 1; n <= 2; ++n) {
    ChainSpec spec(6, n, 0.4);
    auto mus = enumerate_strict(n, 6);
    for (const auto& l : mus)
      for (const auto& r : mus) {
        CHECK(amplitude_spectral(spec, l, r, 0.0) ==
              doctest::Approx(l == r ? 1.0 : 0.0).epsilon(1e-10));
        for (double beta : {0.3, 1.0}) {
          double sp = amplitude_spectral(spec, l, r, beta);
          double det = amplitude_determinant(spec, l, r, beta);
          CHECK(sp == doctest::Approx(det).epsilon(1e-10));
        }
      }
  }

  // Repeated sites vanish.
  ChainSpec spec2(6, 2, 0.0);
  std::vector<long> left{3, 1}, twice{2, 2};
  CHECK(std::abs(amplitude_determinant(spec2, left, twice, 0.7)) < 1e-12);
  CHECK(std::abs(amplitude_spectral(spec2, left, twice, 0.7)) < 1e-12);
}

TEST_CASE("amplitude generates stay-dressed walker counts") {
  // Exact bridge: the beta-expansion of e^{beta h (M/2 - N)} G0 has
  // D^K coefficients equal to the stay polynomial at w = h(M - 2N).
  const long m = 6;
  for (long n = 1; n <= 2; ++n) {
    BigRatio h = make_ratio(1, 3);
    BigRatio w = h * BigRatio(m - 2 * n);
    BigRatio c = h * make_ratio(m - 2 * n, 2);
    RingSpec ring(m);
    WalkConfig cfg{Geometry::Ring, m, false};
    auto mus = enumerate_strict(n, std::min(m, 4L));
    for (const auto& l : mus)
      for (const auto& r : mus) {
        TruncatedSeries dressed =
            exp_series(c, 8) * ring_det_generating(ring, l, r, 8);
        for (long k = 0; k <= 6; ++k) {
          auto stay = count_with_stays(cfg, l, r, k);
          BigRatio expect(0);
          BigRatio wp(1);
          for (long p = 0; p <= k; ++p) {
            expect += wp * BigRatio(stay[static_cast<std::size_t>(p)]);
            wp = wp * w;
          }
          CHECK(extract_dk(dressed, k) == expect);
        }
      }
  }

  // Single-walker return on the six-ring: the 14th derivative of the
  // generating kernel is the golden circulant entry.
  RingSpec ring(6);
  StrictPartition one({1});
  CHECK(extract_dk(ring_det_generating(ring, one, one, 14), 14) == 5462);

  // Float route matches the exact series at small beta.
  ChainSpec spec(6, 2, 0.25);
  StrictPartition mu({2, 1});
  TruncatedSeries g0 = ring_det_generating(ring, mu, mu, 24);
  double beta = 0.4;
  double expect = std::exp(beta * 0.25 * (3.0 - 2.0)) * g0.evaluate(beta);
  CHECK(amplitude_determinant(spec, mu, mu, beta) ==
        doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("single-particle kernel approaches the modified Bessel function") {
  // The momentum sum turns into the [-pi, pi] integral as M grows, so the
  // finite-chain kernel converges to I_{|j-m|}(beta).
  double beta = 0.9;
  for (long d : {0L, 1L, 2L}) {
    auto gap_at = [&](long m) {
      ChainSpec spec(m, 1, 0.0);
      std::vector<long> a{3 + d}, b{3};
      return std::abs(amplitude_determinant(spec, a, b, beta) - bessel_i_numeric(d, beta));
    };
    CHECK(gap_at(32) <= gap_at(8));
    CHECK(gap_at(32) < 1e-10);
  }
}

TEST_CASE("off-shell generating exponential") {
  // N=1, M=2 scalar case.
  std::vector<BigRatio> u2{make_ratio(4, 9)}, v2i{make_ratio(3, 5)};
  std::vector<BigRatio> g{make_ratio(2, 1), make_ratio(5, 7)};
  BigRatio expect = g[0] + g[1] * u2[0] * v2i[0];
  CHECK(gen_exp_offshell<BigRatio>(1, v2i, u2, g) == expect);

  // Unit weights reduce to the Cauchy-Binet scalar product; determinant and
  // direct-sum routes agree on random rationals.
  std::mt19937 rng(314);
  std::uniform_int_distribution<long> num(1, 9);
  for (int rep = 0; rep < 5; ++rep) {
    long n = 2, box = 3;
    std::vector<BigRatio> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    u[0] = make_ratio(num(rng), 7);
    u[1] = make_ratio(num(rng) + 9, 7);
    v[0] = make_ratio(num(rng), 5);
    v[1] = make_ratio(num(rng) + 11, 5);
    std::vector<BigRatio> ones(static_cast<std::size_t>(box + n), BigRatio(1));
    BigRatio det_route = gen_exp_offshell<BigRatio>(box, v, u, ones);
    BigRatio sum_route = gen_exp_offshell_sum<BigRatio>(box, v, u, ones);
    CHECK(det_route == sum_route);
    CHECK(det_route == cauchy_binet(n, box, std::span<const BigRatio>(u),
                                    std::span<const BigRatio>(v)));

    // Random positive weights: both routes still agree.
    std::vector<BigRatio> w(static_cast<std::size_t>(box + n));
    for (auto& x : w) x = make_ratio(num(rng), num(rng));
    CHECK(gen_exp_offshell<BigRatio>(box, v, u, w) ==
          gen_exp_offshell_sum<BigRatio>(box, v, u, w));
  }
}

TEST_CASE("pinned-site derivatives of the generating exponential") {
  // P is multilinear in the site weights, so the mixed derivative at a = 0
  // is an exact finite difference; it must reproduce the pinned Schur sum.
  long n = 2, box = 2, m = box + n;
  std::vector<BigRatio> u{make_ratio(2, 3), make_ratio(5, 3)};
  std::vector<BigRatio> v{make_ratio(1, 2), make_ratio(7, 2)};
  std::vector<long> pins{3, 1};

  std::vector<BigRatio> weights(static_cast<std::size_t>(m), BigRatio(1));
  BigRatio diff(0);
  for (long mask = 0; mask < (1 << pins.size()); ++mask) {
    auto w = weights;
    int bits = 0;
    for (std::size_t i = 0; i < pins.size(); ++i)
      if (mask & (1 << i)) {
        w[static_cast<std::size_t>(pins[i] - 1)] = 2;
        ++bits;
      }
    BigRatio value = gen_exp_offshell<BigRatio>(box, v, u, w);
    diff += (static_cast<long>(pins.size()) - bits) % 2 == 0 ? value : -value;
  }

  BigRatio pinned(0);
  for (const StrictPartition& mu : enumerate_pinned(PinnedSpec(StrictPartition(pins)), n, m)) {
    Partition lam = to_nonstrict(mu);
    pinned += schur_bialternant(lam, std::span<const BigRatio>(v)) *
              schur_bialternant(lam, std::span<const BigRatio>(u));
  }
  CHECK(diff == pinned);
}

TEST_CASE("on-shell generating exponential") {
  ChainSpec spec(6, 2, 0.0);
  BetheSpectrum s = bethe_roots(spec, std::vector<long>{5, 3});

  CHECK(gen_exp_onshell(spec, s, zeros(6)) == doctest::Approx(1.0).epsilon(1e-12));

  // Uniform weight on the whole chain: e^{alpha N}.
  std::vector<double> uniform(6, 0.37);
  CHECK(gen_exp_onshell(spec, s, uniform) ==
        doctest::Approx(std::exp(0.37 * 2.0)).epsilon(1e-10));

  // Off-shell evaluation at the on-shell points, normalized by the norm.
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> dist(-0.4, 0.4);
  std::vector<double> alpha(6);
  for (auto& a : alpha) a = dist(rng);
  std::vector<ComplexF> u2(2), v2i(2), w(6);
  for (long j = 0; j < 2; ++j) {
    u2[static_cast<std::size_t>(j)] = std::polar(1.0, s.theta[static_cast<std::size_t>(j)]);
    v2i[static_cast<std::size_t>(j)] = std::polar(1.0, -s.theta[static_cast<std::size_t>(j)]);
  }
  for (long i = 0; i < 6; ++i) w[static_cast<std::size_t>(i)] = std::exp(alpha[static_cast<std::size_t>(i)]);
  ComplexF off = gen_exp_offshell<ComplexF>(4, v2i, u2, w);
  CHECK(gen_exp_onshell(spec, s, alpha) ==
        doctest::Approx((off / s.norm_sq).real()).epsilon(1e-9));
}

TEST_CASE("boltzmann-weighted generating exponential") {
  ChainSpec spec(6, 2, 0.3);
  BetheSpectrum s = bethe_roots(spec, std::vector<long>{4, 2});

  std::vector<double> alpha{0.1, -0.2, 0.05, 0.3, -0.15, 0.2};
  CHECK(boltzmann_gen_exp(spec, s, alpha, 0.0) ==
        doctest::Approx(gen_exp_onshell(spec, s, alpha)).epsilon(1e-12));

  CHECK(boltzmann_gen_exp(spec, s, zeros(6), 0.8) ==
        doctest::Approx(std::exp(-0.8 * s.energy)).epsilon(1e-10));

  // Double-sum route over left/right shapes with the exact amplitude.
  double beta = 0.5;
  double direct = 0.0;
  auto mus = enumerate_strict(2, 6);
  std::vector<ComplexF> xm(2), xp(2);
  for (long j = 0; j < 2; ++j) {
    xp[static_cast<std::size_t>(j)] = std::polar(1.0, s.theta[static_cast<std::size_t>(j)]);
    xm[static_cast<std::size_t>(j)] = std::polar(1.0, -s.theta[static_cast<std::size_t>(j)]);
  }
  for (const auto& l : mus)
    for (const auto& r : mus) {
      Partition ll = to_nonstrict(l), rr = to_nonstrict(r);
      ComplexF sl = schur_bialternant(ll, std::span<const ComplexF>(xm));
      ComplexF sr = schur_bialternant(rr, std::span<const ComplexF>(xp));
      double weight = 0.0;
      for (long i = 0; i < 2; ++i) weight += alpha[static_cast<std::size_t>(l.part(i) - 1)];
      direct += (sl * sr).real() * std::exp(weight) *
                amplitude_spectral(spec, l, r, beta);
    }
  direct /= s.norm_sq;
  CHECK(boltzmann_gen_exp(spec, s, alpha, beta) ==
        doctest::Approx(direct).epsilon(1e-8));
}
