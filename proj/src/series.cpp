#include "wordhopf/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordhopf {

AlphaSeries::AlphaSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

AlphaSeries AlphaSeries::one(int order) {
  AlphaSeries s(order);
  s.coeffs_[0] = Element::unit();
  return s;
}

AlphaSeries AlphaSeries::truncated(int new_order) const {
  AlphaSeries out(std::min(new_order, order()));
  for (int n = 0; n <= out.order(); ++n) out.coeffs_[n] = coeffs_[n];
  return out;
}

AlphaSeries series_add(const AlphaSeries& x, const AlphaSeries& y) {
  AlphaSeries out(std::min(x.order(), y.order()));
  for (int n = 0; n <= out.order(); ++n) {
    out.set_coeff(n, x.coeff(n) + y.coeff(n));
  }
  return out;
}

AlphaSeries series_mul(const AlphaSeries& x, const AlphaSeries& y) {
  AlphaSeries out(std::min(x.order(), y.order()));
  for (int n = 0; n <= out.order(); ++n) {
    Element acc;
    for (int p = 0; p <= n; ++p) {
      const Element& xp = x.coeff(p);
      const Element& yq = y.coeff(n - p);
      if (xp.is_zero() || yq.is_zero()) continue;
      acc += quasi_shuffle(xp, yq);
    }
    out.set_coeff(n, std::move(acc));
  }
  return out;
}

namespace {

AlphaSeries series_inverse(const AlphaSeries& x) {
  if (x.coeff(0) != Element::unit()) {
    throw std::domain_error("series not invertible");
  }
  const int order = x.order();
  // x = 1 + y with y of valuation >= 1; inverse = sum (-1)^m y^m.
  AlphaSeries y = x;
  y.set_coeff(0, Element());
  AlphaSeries out = AlphaSeries::one(order);
  AlphaSeries power = AlphaSeries::one(order);
  for (int m = 1; m <= order; ++m) {
    power = series_mul(power, y);
    for (int n = m; n <= order; ++n) {
      Element c = out.coeff(n);
      if (m % 2 == 1) {
        c -= power.coeff(n);
      } else {
        c += power.coeff(n);
      }
      out.set_coeff(n, std::move(c));
    }
  }
  return out;
}

}  // namespace

AlphaSeries series_int_pow(const AlphaSeries& x, int k) {
  const AlphaSeries base = k < 0 ? series_inverse(x) : x;
  int reps = k < 0 ? -k : k;
  AlphaSeries out = AlphaSeries::one(x.order());
  for (int i = 0; i < reps; ++i) out = series_mul(out, base);
  return out;
}

}  // namespace wordhopf
