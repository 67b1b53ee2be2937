#ifndef VW_GENFUN_HPP
#define VW_GENFUN_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "vw/bigratio.hpp"
#include "vw/partitions.hpp"
#include "vw/schur.hpp"
#include "vw/series.hpp"

namespace vw {

// Number of plane partitions in an N x N x box box (MacMahon product).
BigInt macmahon(long n, long box);

// Bivariate polynomial in (q, gamma) with integer coefficients; the
// coefficient of q^v gamma^t counts boxed plane partitions with volume v and
// main-diagonal trace t.
class QGammaPoly {
 public:
  void add_term(long q_pow, long gamma_pow, const BigInt& c);
  const BigInt& coefficient(long q_pow, long gamma_pow) const;
  // Terms sorted lexicographically by (q_pow, gamma_pow).
  std::vector<std::pair<std::pair<long, long>, BigInt>> items() const;
  BigInt gamma_slice_total(long gamma_pow) const;

  template <class F>
  F evaluate(const F& q, const F& gamma) const {
    F total(0);
    for (const auto& [mono, c] : terms_) {
      F term(1);
      for (long i = 0; i < mono.first; ++i) term = term * q;
      for (long i = 0; i < mono.second; ++i) term = term * gamma;
      if constexpr (std::is_same_v<F, BigRatio>)
        total = total + term * BigRatio(c);
      else
        total = total + term * to_double(c);
    }
    return total;
  }

  bool operator==(const QGammaPoly&) const = default;

 private:
  std::map<std::pair<long, long>, BigInt> terms_;
};

struct GenFunLimits {
  long max_side = 4;
  long max_box = 4;
  long max_states = 200000;  // strict-partition sums
};

// Norm-trace generating function by exhaustive plane-partition enumeration,
// weight q^{|pi|} gamma^{tr_N pi}.
QGammaPoly norm_trace_sum(long n, long box, const GenFunLimits& limits = {});

// Determinant route det(h_M(gamma q^{i+j-1})) / (V(q_N/q) V(gamma q_N)),
// M = box + N; degenerate points (q = +-1) fall back to the enumeration sum.
BigRatio norm_trace_det(long n, long box, const BigRatio& q, const BigRatio& gamma,
                        const GenFunLimits& limits = {});
double norm_trace_det(long n, long box, double q, double gamma);

struct UnboundedProducts {
  double double_product;   // prod_{i,j<=N} (1 - gamma q^{i+j-1})^-1
  double double_scaling;   // prod_{n<=truncation} (1 - gamma q^n)^-n
};
UnboundedProducts unbounded_products(long n, double q, double gamma, long truncation);

// sum over pinned mu~ of S_{mu~-delta}(1)^2: plane partitions with l diagonal
// columns of prescribed height and position.
BigInt pinned_pp_count(long n, long box, const StrictPartition& pins);

// Number of boxed plane partitions whose main-diagonal trace is
// m - N(N+1)/2, summed over strict partitions of weight m.
BigInt diag_constrained_count(long n, long box, long m);

// I_N(beta, a) = sum_mu det(e^{alpha_mu_i} I_{|mu_i - mu_j|}(beta)) over
// strict partitions with parts <= M.
double bessel_partition_sum(long n, long m, double beta, std::span<const double> alpha,
                            const GenFunLimits& limits = {});

// G_{N,beta}(a) ~ I_N(beta,a) / I_N(beta,0).
double nparticle_mean(long n, double beta, std::span<const double> alpha, long m,
                      const GenFunLimits& limits = {});

// D^l_alpha moment of the first-moment operator under the linear weight:
// N^-l sum_mu |mu|^l det(I(beta)) / I_N(beta, 0).
double moment_mean(long n, long m, double beta, long l,
                   const GenFunLimits& limits = {});

// Exact beta-expansion data of e^{beta w / 2} I_N(beta, a): for each K the
// polynomial in w = h(M-2N) whose w^p coefficient is C(K,p) P_{K-p,N}.
struct TraceSeries {
  long order = 0;
  // poly_by_k[K][p], p <= K
  std::vector<std::vector<BigRatio>> poly_by_k;
};
TraceSeries series_of_trace(long n, long m, long order,
                            std::span<const BigRatio> weights = {},
                            const GenFunLimits& limits = {});

struct MehtaBarnes {
  double value;            // V_N(beta, h)
  double phi;              // log of the Mehta integral
  double phi_asymptotic;   // (N^2/2) log N - 3 N^2 / 4
};
MehtaBarnes mehta_barnes(long n, double beta, double h);

// det(I + ell e^{-beta eps-hat} e^{alpha-hat}) on one momentum grid
// (half-integer grid when half_grid is set). Building block of the Laplace
// split of the total trace.
double sector_determinant(long m, double h, std::span<const double> alpha, double beta,
                          int ell, bool half_grid);

struct TotalTraceParts {
  double total;
  double ell_plus;   // ell = +1 contribution (with the e^{beta h M/2}/2 factor)
  double ell_minus;  // ell = -1 contribution
};
TotalTraceParts total_trace_parts(long m, double h, std::span<const double> alpha,
                                  double beta);
double total_trace(long m, double h, std::span<const double> alpha, double beta);

struct FermiKernel {
  double beta = 1.0;
  double h = 0.0;
  int ell = +1;
  bool infinite_chain = false;
  long sites = 0;          // finite mode
  bool half_grid = false;  // finite mode: momentum grid parity
  long quad_points = 4096; // infinite mode
};

// det of the l x l matrix of Fourier-transformed Fermi weights at a = 0
// (the infinite chain replaces the momentum sum by
// quadrature).
double minor_derivative(const FermiKernel& kernel, std::span<const long> sites);

double bessel_i_numeric(long nu, double x);

}  // namespace vw

#endif
