#include "alag/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace alag {

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<RationalPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order + 1) {
    throw std::invalid_argument("TruncatedSeries: expected order+1 coefficients");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
  const auto lead = den[0].constant_value();
  if (!lead || *lead == 0) {
    throw std::domain_error("series_div: constant term of the divisor is not an invertible constant");
  }
  const unsigned order = std::min(num.order(), den.order());
  TruncatedSeries q(order);
  for (unsigned j = 0; j <= order; ++j) {
    RationalPoly acc = num[j];
    for (unsigned i = 1; i <= j; ++i) acc -= den[i] * q[j - i];
    q[j] = acc / *lead;
  }
  return q;
}

}  // namespace alag
