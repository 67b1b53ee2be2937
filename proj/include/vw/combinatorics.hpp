#ifndef VW_COMBINATORICS_HPP
#define VW_COMBINATORICS_HPP

#include <span>
#include <vector>

#include "vw/bigratio.hpp"

namespace vw {

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt factorial(long n);

// Lacunary sum of binomial coefficients sum_{i>=0} C(K, L + R*i).
BigInt lacunary_binomial(long K, long L, long R);

// (sum n_i)! / prod n_i!
BigInt multinomial(std::span<const long> n);

}  // namespace vw

#endif
