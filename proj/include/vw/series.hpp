#ifndef VW_SERIES_HPP
#define VW_SERIES_HPP

#include <string>
#include <vector>

#include "vw/bigratio.hpp"

namespace vw {

// One-variable formal power series with exact rational coefficients,
// truncated at a fixed order. The order is set at construction; binary
// operations on mismatched orders or variables throw instead of silently
// truncating.
class TruncatedSeries {
 public:
  TruncatedSeries(std::string variable, long order);
  static TruncatedSeries constant(const BigRatio& value, std::string variable, long order);

  const std::string& variable() const { return variable_; }
  long order() const { return order_; }

  const BigRatio& coefficient(long power) const;
  void set_coefficient(long power, const BigRatio& value);

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);

  TruncatedSeries scaled(const BigRatio& factor) const;

  bool operator==(const TruncatedSeries& rhs) const = default;

  double evaluate(double x) const;
  BigRatio evaluate(const BigRatio& x) const;

 private:
  void require_compatible(const TruncatedSeries& rhs) const;

  std::string variable_;
  long order_ = 0;
  std::vector<BigRatio> coeff_;
};

// Power-series expansion of the modified Bessel function I_nu:
// the coefficient of x^K is 2^-K / (((K-nu)/2)! ((K+nu)/2)!) for K >= nu
// with K - nu even, and zero otherwise.
TruncatedSeries bessel_i_series(long nu, long order, std::string variable = "beta");

// exp(c * x) truncated at the given order.
TruncatedSeries exp_series(const BigRatio& c, long order, std::string variable = "beta");

// Exact determinant over the truncated-series ring (division-free).
TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& m);

// K-th derivative with respect to x/2 at x = 0, i.e. 2^K K! [x^K].
BigRatio extract_dk(const TruncatedSeries& s, long k);

}  // namespace vw

#endif
