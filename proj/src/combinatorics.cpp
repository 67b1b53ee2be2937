#include "vw/combinatorics.hpp"

namespace vw {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be non-negative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt lacunary_binomial(long K, long L, long R) {
  if (K < 0) throw std::invalid_argument("lacunary_binomial: K must be non-negative");
  if (L < 0) throw std::invalid_argument("lacunary_binomial: L must be non-negative");
  if (R <= 0) throw std::invalid_argument("lacunary_binomial: R must be positive");
  BigInt sum = 0;
  for (long idx = L; idx <= K; idx += R) sum += binomial(K, idx);
  return sum;
}

BigInt multinomial(std::span<const long> n) {
  long total = 0;
  for (long v : n) {
    if (v < 0) throw std::invalid_argument("multinomial: entries must be non-negative");
    total += v;
  }
  BigInt r = factorial(total);
  for (long v : n) r /= factorial(v);
  return r;
}

}  // namespace vw
