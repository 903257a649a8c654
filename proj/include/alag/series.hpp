#pragma once

#include <vector>

#include "alag/exactpoly.hpp"

namespace alag {

/// Formal power series in x truncated after x^order. Coefficients are
/// RationalPoly in the remaining variables.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order) : coeffs_(order + 1) {}
  TruncatedSeries(unsigned order, std::vector<RationalPoly> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const RationalPoly& operator[](unsigned j) const { return coeffs_.at(j); }
  RationalPoly& operator[](unsigned j) { return coeffs_.at(j); }
  const std::vector<RationalPoly>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  /// Cauchy product truncated to the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<RationalPoly> coeffs_;
};

/// q with q * den == num through the common order. The constant term of den
/// must be a non-zero rational constant; throws std::domain_error otherwise.
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

}  // namespace alag
