// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned in code next to the check it gates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "vw/bethe.hpp"
#include "vw/circulant.hpp"
#include "vw/combinatorics.hpp"
#include "vw/genfun.hpp"
#include "vw/partitions.hpp"
#include "vw/schur.hpp"
#include "vw/series.hpp"
#include "vw/walks.hpp"

#include "dense_oracle.hpp"

using namespace vw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double rel_gap(double a, double b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// 1. Golden circulant entries at M = 6: exact integers.
Outcome criterion1() {
  RingSpec ring(6);
  struct Row {
    long k, offset;
    long expect;
  };
  const std::vector<Row> rows = {{14, 0, 5462},  {14, 2, 5461},  {14, 4, 5461},
                                 {14, 1, 0},     {14, 3, 0},     {14, 5, 0},
                                 {15, 1, 10923}, {15, 5, 10923}, {15, 3, 10922},
                                 {15, 0, 0},     {15, 2, 0},     {15, 4, 0}};
  for (const Row& row : rows)
    if (circulant_kernel_offset(ring, row.k, row.offset) != row.expect)
      return {false, "offset " + std::to_string(row.offset) + " at K=" + std::to_string(row.k)};
  return {true, "12 golden entries, exact"};
}

// 2. Closed form vs matrix-power oracle, M in {2,4,6,8}, K <= 20, all offsets.
Outcome criterion2() {
  long checked = 0;
  for (long m : {2L, 4L, 6L, 8L}) {
    RingSpec ring(m);
    for (long k = 0; k <= 20; ++k) {
      CirculantPower oracle = circulant_power_oracle(ring, k);
      for (long d = 0; d < m; ++d) {
        if (circulant_power_entry(ring, k, 1 + d, 1) != oracle.entry_offset(d))
          return {false, "M=" + std::to_string(m) + " K=" + std::to_string(k) +
                             " d=" + std::to_string(d)};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " entries, exact"};
}

// 3. Ramus identity, R in 1..8, n <= 20, all t, absolute 1e-9.
Outcome criterion3() {
  double worst = 0.0;
  for (long r = 1; r <= 8; ++r)
    for (long n = 0; n <= 20; ++n)
      for (long t = 0; t < r; ++t) {
        double trig;
        BigInt exact;
        ramus_check(r, n, t, 1e-9, &trig, &exact);
        worst = std::max(worst, std::abs(trig - to_double(exact)));
      }
  return {worst <= 1e-9, "max |trig - exact| = " + sci(worst) + ", tol 1e-9 abs"};
}

// 4. Generalized Ramus and determinantal corollary, >= 50 random pairs,
//    relative 1e-8.
Outcome criterion4() {
  std::mt19937 rng(42);
  double worst_prod = 0.0, worst_det = 0.0;
  long pairs = 0;
  for (long m : {4L, 6L, 8L}) {
    RingSpec ring(m);
    for (long n = 1; n <= 3; ++n) {
      auto mus = enumerate_strict(n, std::min(m, 5L));
      if (mus.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, mus.size() - 1);
      std::uniform_int_distribution<long> kpick(0, 6);
      for (int rep = 0; rep < 8; ++rep) {
        const StrictPartition& l = mus[pick(rng)];
        const StrictPartition& r = mus[pick(rng)];
        long k = kpick(rng);
        worst_prod = std::max(worst_prod,
                              rel_gap(to_double(generalized_ramus_lhs(ring, k, l, r)),
                                      generalized_ramus_rhs(ring, k, l, r)));
        auto [lhs, rhs] = det_ramus_identity(ring, k, l, r);
        worst_det = std::max(worst_det, rel_gap(to_double(lhs), rhs));
        ++pairs;
      }
    }
  }
  double worst = std::max(worst_prod, worst_det);
  return {pairs >= 50 && worst <= 1e-8,
          std::to_string(pairs) + " pairs, max rel gap " + sci(worst) + ", tol 1e-8"};
}

// 5. Walker formula vs exhaustive oracle: N <= 3, K <= 6, line and rings
//    M in {6,8}, all strict partitions with parts <= 5, exact.
Outcome criterion5() {
  WalkLimits lim{3, 8};
  long checked = 0;
  for (long n = 1; n <= 3; ++n) {
    auto mus = enumerate_strict(n, 5);
    std::vector<WalkConfig> cfgs{{Geometry::Line, 0, false},
                                 {Geometry::Ring, 6, false},
                                 {Geometry::Ring, 8, false}};
    for (const auto& cfg : cfgs)
      for (const auto& l : mus)
        for (const auto& r : mus)
          for (long k = 0; k <= 6; ++k) {
            if (count_formula(cfg, l, r, k) != oracle_count(cfg, l, r, k, lim).total)
              return {false, "N=" + std::to_string(n) + " K=" + std::to_string(k)};
            ++checked;
          }
  }
  return {true, std::to_string(checked) + " configurations, exact"};
}

// 6. Bessel determinant generating function vs oracle counts (exact), plus
//    the staircase 2^K J(K,N) identity within 1e-6.
Outcome criterion6() {
  WalkLimits lim{3, 8};
  WalkConfig line{Geometry::Line, 0, false};
  long checked = 0;
  for (long n = 1; n <= 3; ++n) {
    auto mus = enumerate_strict(n, 5);
    for (const auto& l : mus)
      for (const auto& r : mus) {
        TruncatedSeries gen = bessel_det_generating(l, r, 6);
        for (long k = 0; k <= 6; ++k) {
          if (extract_dk(gen, k) != BigRatio(oracle_count(line, l, r, k, lim).total))
            return {false, "series mismatch at N=" + std::to_string(n)};
          ++checked;
        }
      }
  }
  double worst = 0.0;
  for (long n = 1; n <= 3; ++n) {
    StrictPartition delta = staircase(n);
    for (long k = 0; k <= 8; ++k) {
      double lhs = to_double(count_formula(line, delta, delta, k));
      double rhs = std::pow(2.0, static_cast<double>(k)) * j_integral(k, n);
      worst = std::max(worst, rel_gap(lhs, rhs));
    }
  }
  return {worst <= 1e-6, std::to_string(checked) + " coefficients exact; Gross-Witten gap " +
                             sci(worst) + ", tol 1e-6"};
}

// 7. Schur routes: bialternant vs path sum on >= 100 random rational point
//    vectors; Cauchy-Binet det vs sum; Pieri for all shapes in the 3^3 box.
Outcome criterion7() {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  auto random_points = [&](long n) {
    std::vector<BigRatio> pts;
    while (static_cast<long>(pts.size()) < n) {
      BigRatio v = make_ratio(num(rng), den(rng));
      bool dup = v == 0;
      for (const auto& w : pts) dup = dup || w == v;
      if (!dup) pts.push_back(v);
    }
    return pts;
  };

  long vectors = 0;
  for (long n = 1; n <= 4; ++n) {
    std::vector<Partition> shapes;
    for (const Partition& lam : BoxPartitions(n, 4)) shapes.push_back(lam);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    for (int rep = 0; rep < 26; ++rep) {
      auto pts = random_points(n);
      std::span<const BigRatio> xs(pts);
      ++vectors;
      if (n <= 3) {
        for (const Partition& lam : shapes)
          if (schur_bialternant(lam, xs) != schur_paths(lam, xs))
            return {false, "route mismatch at N=" + std::to_string(n)};
      } else {
        for (int s = 0; s < 15; ++s) {
          const Partition& lam = shapes[pick(rng)];
          if (schur_bialternant(lam, xs) != schur_paths(lam, xs))
            return {false, "route mismatch at N=4"};
        }
      }
    }
  }

  for (long n = 1; n <= 3; ++n)
    for (long l = 0; l <= 4; ++l) {
      auto xs = random_points(n);
      auto ys = random_points(n);
      if (cauchy_binet(n, l, std::span<const BigRatio>(xs), std::span<const BigRatio>(ys)) !=
          cauchy_binet_sum(n, l, std::span<const BigRatio>(xs), std::span<const BigRatio>(ys)))
        return {false, "cauchy-binet mismatch"};
    }

  for (int rep = 0; rep < 5; ++rep) {
    auto pts = random_points(3);
    std::span<const BigRatio> xs(pts);
    for (const Partition& lam : BoxPartitions(3, 3))
      if (!pieri_sum_check(lam, xs)) return {false, "pieri failure"};
  }
  return {true, std::to_string(vectors) + " point vectors, exact"};
}

// 8. Eigenvector residuals <= 1e-10 for every quantum-number set, and the
//    norm formula against the direct Schur sum within 1e-10.
Outcome criterion8() {
  double worst_res = 0.0, worst_norm = 0.0;
  for (long m : {4L, 6L, 8L})
    for (long n = 1; n <= 3; ++n) {
      ChainSpec spec(m, n, 0.3);
      for (const auto& two_i : all_quantum_numbers(spec)) {
        BetheSpectrum s = bethe_roots(spec, two_i);
        worst_res = std::max(worst_res, eigen_residual(spec, s));
        double direct = 0.0;
        for (const ComplexF& c : bethe_vector(spec, s)) direct += std::norm(c);
        worst_norm = std::max(worst_norm, std::abs(direct - s.norm_sq) /
                                              std::max(1.0, s.norm_sq));
      }
    }
  return {worst_res <= 1e-10 && worst_norm <= 1e-10,
          "max residual " + sci(worst_res) + ", max norm gap " + sci(worst_norm) +
              ", tol 1e-10"};
}

// 9. MacMahon vs enumeration, norm-trace determinant vs enumeration
//    polynomial at 5 random rationals, diagonal slices summing to MacMahon.
Outcome criterion9() {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> num(2, 9);
  if (macmahon(2, 2) != 20) return {false, "A(2,2,2) != 20"};
  for (long n = 1; n <= 3; ++n)
    for (long box = 0; box <= 3; ++box) {
      long direct = 0;
      for_each_plane_partition(n, box, [&](const PlanePartition&) { ++direct; });
      if (macmahon(n, box) != direct) return {false, "macmahon enumeration mismatch"};

      QGammaPoly poly = norm_trace_sum(n, box);
      for (int rep = 0; rep < 5; ++rep) {
        BigRatio q = make_ratio(num(rng), 11);
        BigRatio g = make_ratio(num(rng), 13);
        if (norm_trace_det(n, box, q, g) != poly.evaluate(q, g))
          return {false, "norm-trace determinant mismatch"};
      }

      BigInt total = 0;
      long lo = n * (n + 1) / 2;
      for (long m = lo; m <= lo + n * box; ++m) total += diag_constrained_count(n, box, m);
      if (total != macmahon(n, box)) return {false, "diagonal slice sum mismatch"};
    }
  return {true, "exact over N <= 3, box <= 3, 5 rational (q, gamma) each"};
}

// 10. Total trace vs dense spin-space oracle (1e-10 rel), Fermi-weight
//     minors vs finite differences (1e-5 rel), flat-weight correlator
//     2^-l (1e-10).
Outcome criterion10() {
  double worst_trace = 0.0;
  for (long m : {2L, 4L})
    for (double beta : {0.1, 1.0, 3.0})
      for (double h : {0.0, 0.5}) {
        std::vector<double> zero(static_cast<std::size_t>(m), 0.0);
        worst_trace = std::max(worst_trace, rel_gap(total_trace(m, h, zero, beta),
                                                    vw_test::dense_trace(m, h, zero, beta)));
      }
  if (worst_trace > 1e-10)
    return {false, "dense trace gap " + sci(worst_trace) + ", tol 1e-10"};

  const long m = 4;
  const double beta = 1.0, h = 0.0, step = 1e-4;
  double worst_minor = 0.0;
  for (bool half : {false, true}) {
    auto big_g = [&](const std::vector<double>& alpha) {
      std::vector<double> zero(static_cast<std::size_t>(m), 0.0);
      return sector_determinant(m, h, alpha, beta, +1, half) /
             sector_determinant(m, h, zero, beta, +1, half);
    };
    FermiKernel kernel{beta, h, +1, false, m, half, 0};
    std::vector<double> a(static_cast<std::size_t>(m), 0.0);
    a[1] = step;
    double plus = big_g(a);
    a[1] = -step;
    double minus = big_g(a);
    worst_minor = std::max(worst_minor, rel_gap(minor_derivative(kernel, std::vector<long>{2}),
                                                (plus - minus) / (2.0 * step)));
    double acc = 0.0;
    for (int s1 : {+1, -1})
      for (int s2 : {+1, -1}) {
        std::vector<double> ab(static_cast<std::size_t>(m), 0.0);
        ab[2] = s1 * step;
        ab[0] = s2 * step;
        acc += s1 * s2 * big_g(ab);
      }
    worst_minor =
        std::max(worst_minor, rel_gap(minor_derivative(kernel, std::vector<long>{3, 1}),
                                      acc / (4.0 * step * step)));
  }
  if (worst_minor > 1e-5)
    return {false, "minor finite-difference gap " + sci(worst_minor) + ", tol 1e-5"};

  double worst_flat = 0.0;
  for (long l = 1; l <= 3; ++l) {
    FermiKernel kernel;
    kernel.beta = 0.0;
    kernel.infinite_chain = true;
    std::vector<long> sites;
    for (long i = 0; i < l; ++i) sites.push_back(l - i + 2);
    worst_flat = std::max(worst_flat, std::abs(minor_derivative(kernel, sites) -
                                               std::pow(0.5, static_cast<double>(l))));
  }
  if (worst_flat > 1e-10)
    return {false, "flat correlator gap " + sci(worst_flat) + ", tol 1e-10"};
  return {true, "trace gap " + sci(worst_trace) + " (1e-10), minor gap " + sci(worst_minor) +
                    " (1e-5), flat gap " + sci(worst_flat) + " (1e-10)"};
}

// 11. Convergence trends: bounded norm-trace -> unbounded double product;
//     Barnes asymptotic gap <= 5 log N; ell = -1 sector decay in M.
Outcome criterion11() {
  double det30 = norm_trace_det(2, 30, 0.3, 0.8);
  double target = unbounded_products(2, 0.3, 0.8, 400).double_product;
  if (std::abs(det30 - target) > 1e-8)
    return {false, "double-product gap " + sci(std::abs(det30 - target)) + ", tol 1e-8"};

  for (long n = 2; n <= 12; ++n) {
    MehtaBarnes mb = mehta_barnes(n, 1.0, 0.0);
    if (std::abs(mb.phi - mb.phi_asymptotic) > 5.0 * std::log(static_cast<double>(n)))
      return {false, "Barnes gap exceeds 5 log N at N=" + std::to_string(n)};
  }

  double prev = 1e300;
  for (long m : {4L, 6L, 8L, 10L}) {
    std::vector<double> zero(static_cast<std::size_t>(m), 0.0);
    TotalTraceParts parts = total_trace_parts(m, 0.3, zero, 1.0);
    double rel = std::abs(parts.ell_minus) / parts.total;
    if (rel >= prev) return {false, "ell=-1 sector not decaying at M=" + std::to_string(m)};
    prev = rel;
  }
  return {true, "double-product gap " + sci(std::abs(det30 - target)) +
                    " (1e-8); Barnes gap within 5 log N for N in 2..12; ell=-1 "
                    "relative weight decays over M in {4,6,8,10}"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "golden circulant entries at M=6", criterion1},
      {2, "circulant closed form vs matrix oracle", criterion2},
      {3, "ramus identity grid", criterion3},
      {4, "generalized and determinantal ramus identities", criterion4},
      {5, "walker formula vs exhaustive enumeration", criterion5},
      {6, "bessel generating function and gross-witten quadrature", criterion6},
      {7, "schur evaluation routes", criterion7},
      {8, "bethe eigenvectors and norms", criterion8},
      {9, "macmahon and norm-trace enumerations", criterion9},
      {10, "fermi-determinant traces and minors", criterion10},
      {11, "convergence trends", criterion11},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%s) [%.2fs]\n", out.pass ? "PASS" : "FAIL", c.id,
                c.title, out.detail.c_str(), secs);
    if (!out.pass) ++failures;
  }
  if (failures != 0) std::printf("%d criterion(s) FAILED\n", failures);
  return failures;
}
