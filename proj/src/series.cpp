#include "vw/series.hpp"

#include "vw/combinatorics.hpp"
#include "vw/linalg.hpp"

namespace vw {

TruncatedSeries::TruncatedSeries(std::string variable, long order)
    : variable_(std::move(variable)), order_(order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  coeff_.assign(static_cast<std::size_t>(order) + 1, BigRatio(0));
}

TruncatedSeries TruncatedSeries::constant(const BigRatio& value, std::string variable,
                                          long order) {
  TruncatedSeries s(std::move(variable), order);
  s.coeff_[0] = value;
  return s;
}

const BigRatio& TruncatedSeries::coefficient(long power) const {
  if (power < 0 || power > order_)
    throw std::out_of_range("TruncatedSeries: coefficient index out of range");
  return coeff_[static_cast<std::size_t>(power)];
}

void TruncatedSeries::set_coefficient(long power, const BigRatio& value) {
  if (power < 0 || power > order_)
    throw std::out_of_range("TruncatedSeries: coefficient index out of range");
  coeff_[static_cast<std::size_t>(power)] = value;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& rhs) const {
  if (order_ != rhs.order_)
    throw std::invalid_argument("TruncatedSeries: mismatched orders");
  if (variable_ != rhs.variable_)
    throw std::invalid_argument("TruncatedSeries: mismatched variables");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  TruncatedSeries out = *this;
  out += rhs;
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  TruncatedSeries out = *this;
  out -= rhs;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(variable_, order_);
  for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = -coeff_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  require_compatible(rhs);
  TruncatedSeries out(variable_, order_);
  for (long i = 0; i <= order_; ++i) {
    const BigRatio& a = coeff_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (long j = 0; i + j <= order_; ++j) {
      const BigRatio& b = rhs.coeff_[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      out.coeff_[static_cast<std::size_t>(i + j)] += a * b;
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const BigRatio& factor) const {
  TruncatedSeries out(variable_, order_);
  for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = coeff_[i] * factor;
  return out;
}

double TruncatedSeries::evaluate(double x) const {
  double acc = 0.0;
  for (long i = order_; i >= 0; --i)
    acc = acc * x + to_double(coeff_[static_cast<std::size_t>(i)]);
  return acc;
}

BigRatio TruncatedSeries::evaluate(const BigRatio& x) const {
  BigRatio acc(0);
  for (long i = order_; i >= 0; --i) acc = acc * x + coeff_[static_cast<std::size_t>(i)];
  return acc;
}

TruncatedSeries bessel_i_series(long nu, long order, std::string variable) {
  if (nu < 0) throw std::invalid_argument("bessel_i_series: nu must be non-negative");
  TruncatedSeries s(std::move(variable), order);
  for (long k = nu; k <= order; k += 2) {
    BigInt half = BigInt(1) << static_cast<unsigned long>(k);
    BigInt denom = half * factorial((k - nu) / 2) * factorial((k + nu) / 2);
    s.set_coefficient(k, make_ratio(BigInt(1), denom));
  }
  return s;
}

TruncatedSeries exp_series(const BigRatio& c, long order, std::string variable) {
  TruncatedSeries s(std::move(variable), order);
  BigRatio term(1);
  for (long k = 0; k <= order; ++k) {
    s.set_coefficient(k, term);
    term = term * c / BigRatio(k + 1);
  }
  return s;
}

TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& m) {
  if (m.empty()) throw std::invalid_argument("series_det: empty matrix");
  const TruncatedSeries& probe = m[0][0];
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("series_det: matrix not square");
    for (const auto& e : row)
      if (e.order() != probe.order() || e.variable() != probe.variable())
        throw std::invalid_argument("series_det: mismatched series entries");
  }
  TruncatedSeries zero(probe.variable(), probe.order());
  TruncatedSeries one = TruncatedSeries::constant(BigRatio(1), probe.variable(), probe.order());
  return det_ring(m, zero, one);
}

BigRatio extract_dk(const TruncatedSeries& s, long k) {
  if (k < 0 || k > s.order())
    throw std::invalid_argument("extract_dk: derivative order exceeds series order");
  BigInt scale = (BigInt(1) << static_cast<unsigned long>(k)) * factorial(k);
  return s.coefficient(k) * BigRatio(scale);
}

}  // namespace vw
