#ifndef VW_BIGRATIO_HPP
#define VW_BIGRATIO_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace vw {

// Arbitrary-precision integers and rationals. GMP keeps mpq_class values in
// lowest terms with a positive denominator as long as every value is built
// through the helpers below, so equality tests are plain comparisons.
using BigInt = mpz_class;
using BigRatio = mpq_class;

using ComplexF = std::complex<double>;

// Absolute-tolerance comparison for root-of-unity arithmetic; callers pass
// the tolerance explicitly, there is no global epsilon.
inline bool approx_equal(const ComplexF& a, const ComplexF& b, double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}

inline BigRatio make_ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_ratio: zero denominator");
  BigRatio r(num, den);
  r.canonicalize();
  return r;
}

inline BigRatio make_ratio(long num, long den = 1) {
  return make_ratio(BigInt(num), BigInt(den));
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRatio& v) { return v.get_str(); }

inline bool is_integer(const BigRatio& v) { return v.get_den() == 1; }

inline double to_double(const BigRatio& v) { return v.get_d(); }

inline double to_double(const BigInt& v) { return v.get_d(); }

// Guard violations (desk-scale enumeration ceilings). CLI maps these to a
// dedicated exit code, so they are distinct from argument errors.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vw

#endif
