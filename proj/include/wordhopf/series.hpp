#pragma once

#include <vector>

#include "wordhopf/element.hpp"

namespace wordhopf {

// Truncated formal series in alpha with Element coefficients. The truncation
// order is part of the value; binary operations truncate to the smaller
// order of the operands.
class AlphaSeries {
 public:
  // Zero series of the given order (coefficients 0..order all zero).
  explicit AlphaSeries(int order);

  // 1 (the empty word) as a series of the given order.
  static AlphaSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Element& coeff(int n) const { return coeffs_.at(n); }
  void set_coeff(int n, Element value) { coeffs_.at(n) = std::move(value); }

  AlphaSeries truncated(int new_order) const;

  bool operator==(const AlphaSeries&) const = default;

 private:
  std::vector<Element> coeffs_;
};

AlphaSeries series_add(const AlphaSeries& x, const AlphaSeries& y);

// Cauchy product with quasi-shuffle as the coefficient product.
AlphaSeries series_mul(const AlphaSeries& x, const AlphaSeries& y);

// x^k for the quasi-shuffle product. k = 0 gives the unit series. A negative
// k requires constant coefficient exactly 1 (the empty word); the inverse is
// the truncated geometric series and is raised to |k|.
// Throws std::domain_error("series not invertible") otherwise.
AlphaSeries series_int_pow(const AlphaSeries& x, int k);

}  // namespace wordhopf
