#include "wordhopf/dyson.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace wordhopf {

void CDSESystem::validate() const {
  if (generator_count < 1) {
    throw std::invalid_argument("R must be >= 1");
  }
  if (static_cast<int>(eta.size()) != generator_count) {
    throw std::invalid_argument("eta must have length R");
  }
  if (static_cast<int>(couplings.size()) != generator_count) {
    throw std::invalid_argument("c must have length R");
  }
  for (int i = 0; i < generator_count; ++i) {
    if (eta[static_cast<std::size_t>(i)] == 0) {
      throw std::invalid_argument("eta[" + std::to_string(i) +
                                  "] must be nonzero");
    }
    if (couplings[static_cast<std::size_t>(i)] == 0) {
      throw std::invalid_argument("c[" + std::to_string(i) +
                                  "] must be nonzero");
    }
  }
  if (order < 1) {
    throw std::invalid_argument("order must be >= 1");
  }
}

Rational CDSESystem::a_paper() const {
  Rational acc;
  for (int i = 0; i < generator_count; ++i) {
    acc += Rational(eta[static_cast<std::size_t>(i)]) *
           couplings[static_cast<std::size_t>(i)];
  }
  return acc;
}

Rational CDSESystem::a_tilde() const {
  Rational acc;
  for (int i = 0; i < generator_count; ++i) {
    acc += Rational(std::abs(eta[static_cast<std::size_t>(i)])) *
           couplings[static_cast<std::size_t>(i)];
  }
  return acc;
}

GeneralRHS::GeneralRHS(int generator_count_, int order_,
                       std::vector<Monomials> monomials)
    : generator_count(generator_count_), order(order_) {
  if (generator_count < 1) throw std::invalid_argument("R must be >= 1");
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (static_cast<int>(monomials.size()) != generator_count) {
    throw std::invalid_argument("general_rhs must have length R");
  }
  per_equation.resize(monomials.size());
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    for (auto& [tuple, coeff] : monomials[r]) {
      if (static_cast<int>(tuple.size()) != generator_count) {
        throw std::invalid_argument(
            "general_rhs powers must have length R");
      }
      int total = 0;
      for (int p : tuple) {
        if (p < 0) {
          throw std::invalid_argument(
              "general_rhs powers must be nonnegative");
        }
        total += p;
      }
      if (total > order || coeff == 0) continue;
      per_equation[r][tuple] += coeff;
      if (per_equation[r][tuple] == 0) per_equation[r].erase(tuple);
    }
  }
}

std::vector<AlphaSeries> solve_cdse(const CDSESystem& sys) {
  sys.validate();
  const int n_max = sys.order;
  const int r_count = sys.generator_count;
  std::vector<AlphaSeries> solution(static_cast<std::size_t>(r_count),
                                    AlphaSeries(n_max));
  for (auto& x : solution) x.set_coeff(0, Element::unit());

  for (int n = 0; n < n_max; ++n) {
    std::vector<AlphaSeries> current;
    current.reserve(static_cast<std::size_t>(r_count));
    for (const auto& x : solution) current.push_back(x.truncated(n));

    AlphaSeries q = AlphaSeries::one(n);
    for (int rp = 0; rp < r_count; ++rp) {
      q = series_mul(q, series_int_pow(current[static_cast<std::size_t>(rp)],
                                       sys.eta[static_cast<std::size_t>(rp)]));
    }
    for (int r = 0; r < r_count; ++r) {
      AlphaSeries xq =
          series_mul(current[static_cast<std::size_t>(r)], q);
      Element next = b_plus(r + 1, xq.coeff(n));
      if (sys.eta[static_cast<std::size_t>(r)] < 0) next = -next;
      solution[static_cast<std::size_t>(r)].set_coeff(n + 1, std::move(next));
    }
  }
  return solution;
}

std::vector<AlphaSeries> solve_general(const GeneralRHS& rhs) {
  const int n_max = rhs.order;
  const int r_count = rhs.generator_count;
  std::vector<AlphaSeries> solution(static_cast<std::size_t>(r_count),
                                    AlphaSeries(n_max));
  for (auto& x : solution) x.set_coeff(0, Element::unit());

  for (int n = 0; n < n_max; ++n) {
    std::vector<AlphaSeries> current;
    current.reserve(static_cast<std::size_t>(r_count));
    for (const auto& x : solution) current.push_back(x.truncated(n));

    for (int r = 0; r < r_count; ++r) {
      Element order_n;
      for (const auto& [tuple, coeff] :
           rhs.per_equation[static_cast<std::size_t>(r)]) {
        AlphaSeries monomial = AlphaSeries::one(n);
        for (int rp = 0; rp < r_count; ++rp) {
          const int power = tuple[static_cast<std::size_t>(rp)];
          if (power == 0) continue;
          monomial = series_mul(
              monomial,
              series_int_pow(current[static_cast<std::size_t>(rp)], power));
        }
        order_n.add_scaled(monomial.coeff(n), coeff);
      }
      solution[static_cast<std::size_t>(r)].set_coeff(n + 1,
                                                      b_plus(r + 1, order_n));
    }
  }
  return solution;
}

namespace {

// Multivariate polynomials in the shifted variables y_r = X_r - 1, truncated
// at the given total degree; used to re-express negative powers of X.
using ShiftedPoly = std::map<std::vector<int>, Rational>;

ShiftedPoly shifted_mul(const ShiftedPoly& a, const ShiftedPoly& b,
                        int max_total) {
  ShiftedPoly out;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      std::vector<int> t(ta.size());
      int total = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = ta[i] + tb[i];
        total += t[i];
      }
      if (total > max_total) continue;
      out[t] += ca * cb;
      if (out[t] == 0) out.erase(t);
    }
  }
  return out;
}

}  // namespace

GeneralRHS general_rhs_from_cdse(const CDSESystem& sys) {
  sys.validate();
  const int r_count = sys.generator_count;
  // f^r is exact for solution orders <= N once known modulo total y-degree N,
  // so every expansion below is truncated at total degree N - 1.
  const int max_total = sys.order - 1;
  const std::vector<int> zero_tuple(static_cast<std::size_t>(r_count), 0);

  // (1 + y_r)^e truncated, e possibly negative.
  auto x_power = [&](int r, int e) {
    ShiftedPoly out;
    for (int m = 0; m <= max_total; ++m) {
      Rational c = binomial(Rational(e), static_cast<unsigned>(m));
      if (c == 0) continue;
      std::vector<int> t = zero_tuple;
      t[static_cast<std::size_t>(r)] = m;
      out[t] = c;
    }
    return out;
  };

  std::vector<GeneralRHS::Monomials> monomials(
      static_cast<std::size_t>(r_count));
  for (int r = 0; r < r_count; ++r) {
    ShiftedPoly f = x_power(r, 1);
    for (int rp = 0; rp < r_count; ++rp) {
      f = shifted_mul(f, x_power(rp, sys.eta[static_cast<std::size_t>(rp)]),
                      max_total);
    }
    const Rational sign(sys.eta[static_cast<std::size_t>(r)] < 0 ? -1 : 1);
    // Convert back to monomials in the X's: y^m = (X - 1)^m.
    GeneralRHS::Monomials out;
    for (const auto& [tuple, coeff] : f) {
      std::vector<std::size_t> active;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] > 0) active.push_back(i);
      }
      // Expand each (X_i - 1)^{m_i} independently.
      std::vector<int> expo = zero_tuple;
      Rational acc = coeff * sign;
      std::function<void(std::size_t, Rational)> expand =
          [&](std::size_t idx, Rational running) {
            if (idx == active.size()) {
              out[expo] += running;
              if (out[expo] == 0) out.erase(expo);
              return;
            }
            const std::size_t var = active[idx];
            const int m = tuple[var];
            for (int j = 0; j <= m; ++j) {
              Rational c = binomial(Rational(m), static_cast<unsigned>(j));
              if ((m - j) % 2 == 1) c = -c;
              expo[var] = j;
              expand(idx + 1, running * c);
            }
            expo[var] = 0;
          };
      if (active.empty()) {
        out[expo] += acc;
        if (out[expo] == 0) out.erase(expo);
      } else {
        expand(0, acc);
      }
    }
    monomials[static_cast<std::size_t>(r)] = std::move(out);
  }
  return GeneralRHS(r_count, sys.order, std::move(monomials));
}

GreenFunction green_function(const SigmaSpec& sigma, const AlphaSeries& x) {
  GreenFunction g;
  g.rows.resize(static_cast<std::size_t>(x.order()) + 1);
  for (int i = 0; i <= x.order(); ++i) {
    LPolynomial value = feynman_eval(sigma, x.coeff(i));
    if (value.degree() > i) {
      throw std::domain_error("green function is not triangular at order " +
                              std::to_string(i));
    }
    std::vector<Rational> row(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) row[static_cast<std::size_t>(j)] = value.coeff(j);
    g.rows[static_cast<std::size_t>(i)] = std::move(row);
  }
  return g;
}

LeadingLog leading_log(const GreenFunction& g) {
  LeadingLog ll;
  ll.coefficients.reserve(g.rows.size());
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    ll.coefficients.push_back(g.rows[i][i]);
  }
  return ll;
}

std::vector<Rational> binom_series(const Rational& exponent,
                                   const Rational& scale, int order) {
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    out[static_cast<std::size_t>(k)] =
        binomial(exponent, static_cast<unsigned>(k)) *
        pow_rational(scale, k);
  }
  return out;
}

LeadingLog closed_form_ll(const CDSESystem& sys, int r, ClosedFormMode mode) {
  sys.validate();
  if (r < 1 || r > sys.generator_count) {
    throw std::invalid_argument("equation index r out of range");
  }
  const int sign = sys.eta[static_cast<std::size_t>(r - 1)] < 0 ? -1 : 1;
  const Rational& c_r = sys.couplings[static_cast<std::size_t>(r - 1)];
  LeadingLog out;
  if (mode == ClosedFormMode::kDerived) {
    const Rational a_tilde = sys.a_tilde();
    if (a_tilde == 0) {
      // Degenerate system: the differential identity collapses to
      // g' = sign c_r g^0 ... g, solved by the plain exponential.
      out.coefficients.resize(static_cast<std::size_t>(sys.order) + 1);
      for (int k = 0; k <= sys.order; ++k) {
        out.coefficients[static_cast<std::size_t>(k)] =
            pow_rational(Rational(sign) * c_r, k) / factorial(
                static_cast<unsigned>(k));
      }
      return out;
    }
    out.coefficients =
        binom_series(Rational(-sign) * c_r / a_tilde, -a_tilde, sys.order);
    return out;
  }
  // Paper mode: the printed closed form, defined only for single-sign eta.
  bool any_pos = false, any_neg = false;
  for (int e : sys.eta) (e > 0 ? any_pos : any_neg) = true;
  if (any_pos && any_neg) {
    throw std::domain_error("paper formula undefined for mixed signs");
  }
  const Rational a = sys.a_paper();
  if (a == 0) {
    throw std::domain_error("degenerate system: A = 0 in paper formula");
  }
  if (sign < 0) {
    out.coefficients = binom_series(-c_r / a, a, sys.order);
  } else {
    out.coefficients = binom_series(c_r / a, -a, sys.order);
  }
  return out;
}

namespace {

// Dense univariate rational power series truncated at a fixed order.
using RatSeries = std::vector<Rational>;

RatSeries rat_mul(const RatSeries& a, const RatSeries& b) {
  RatSeries out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

RatSeries rat_int_pow(const RatSeries& x, int k) {
  RatSeries base = x;
  if (k < 0) {
    if (x.empty() || x[0] != 1) {
      throw std::domain_error("power series not invertible");
    }
    RatSeries y = x;
    y[0] = 0;
    RatSeries inv(x.size());
    inv[0] = 1;
    RatSeries power(x.size());
    power[0] = 1;
    for (std::size_t m = 1; m < x.size(); ++m) {
      power = rat_mul(power, y);
      for (std::size_t n = m; n < x.size(); ++n) {
        if (m % 2 == 1) {
          inv[n] -= power[n];
        } else {
          inv[n] += power[n];
        }
      }
    }
    base = inv;
    k = -k;
  }
  RatSeries out(x.size());
  out[0] = 1;
  for (int i = 0; i < k; ++i) out = rat_mul(out, base);
  return out;
}

}  // namespace

bool Theorem2Report::all_zero() const {
  for (const auto& e : entries) {
    if (e.residual != 0) return false;
  }
  return true;
}

Theorem2Report verify_theorem2(const CDSESystem& sys,
                               const std::vector<LeadingLog>& lls) {
  sys.validate();
  if (static_cast<int>(lls.size()) != sys.generator_count) {
    throw std::invalid_argument("one leading log per equation required");
  }
  const std::size_t size = static_cast<std::size_t>(sys.order) + 1;
  std::vector<RatSeries> g;
  for (const auto& ll : lls) {
    if (ll.coefficients.size() != size || ll.coefficients[0] != 1) {
      throw std::invalid_argument("leading log must start at 1 with order N");
    }
    g.push_back(ll.coefficients);
  }
  Theorem2Report report;
  for (int r = 0; r < sys.generator_count; ++r) {
    RatSeries rhs = g[static_cast<std::size_t>(r)];
    for (int rp = 0; rp < sys.generator_count; ++rp) {
      rhs = rat_mul(rhs, rat_int_pow(g[static_cast<std::size_t>(rp)],
                                     sys.eta[static_cast<std::size_t>(rp)]));
    }
    const Rational factor =
        Rational(sys.eta[static_cast<std::size_t>(r)] < 0 ? -1 : 1) *
        sys.couplings[static_cast<std::size_t>(r)];
    for (int k = 0; k < sys.order; ++k) {
      Rational residual =
          Rational(k + 1) *
              g[static_cast<std::size_t>(r)][static_cast<std::size_t>(k) + 1] -
          factor * rhs[static_cast<std::size_t>(k)];
      report.entries.push_back({r + 1, k, std::move(residual)});
    }
  }
  return report;
}

Theorem2Report verify_theorem2_general(const GeneralRHS& rhs,
                                       const std::vector<Rational>& couplings,
                                       const std::vector<LeadingLog>& lls) {
  if (static_cast<int>(couplings.size()) != rhs.generator_count ||
      static_cast<int>(lls.size()) != rhs.generator_count) {
    throw std::invalid_argument("one coupling and leading log per equation");
  }
  const std::size_t size = static_cast<std::size_t>(rhs.order) + 1;
  std::vector<RatSeries> g;
  for (const auto& ll : lls) {
    if (ll.coefficients.size() != size || ll.coefficients[0] != 1) {
      throw std::invalid_argument("leading log must start at 1 with order N");
    }
    g.push_back(ll.coefficients);
  }
  Theorem2Report report;
  for (int r = 0; r < rhs.generator_count; ++r) {
    RatSeries f_of_g(size);
    for (const auto& [tuple, coeff] :
         rhs.per_equation[static_cast<std::size_t>(r)]) {
      RatSeries monomial(size);
      monomial[0] = 1;
      for (int rp = 0; rp < rhs.generator_count; ++rp) {
        const int power = tuple[static_cast<std::size_t>(rp)];
        if (power == 0) continue;
        monomial =
            rat_mul(monomial, rat_int_pow(g[static_cast<std::size_t>(rp)],
                                          power));
      }
      for (std::size_t i = 0; i < size; ++i) f_of_g[i] += coeff * monomial[i];
    }
    for (int k = 0; k < rhs.order; ++k) {
      Rational residual =
          Rational(k + 1) *
              g[static_cast<std::size_t>(r)][static_cast<std::size_t>(k) + 1] -
          couplings[static_cast<std::size_t>(r)] *
              f_of_g[static_cast<std::size_t>(k)];
      report.entries.push_back({r + 1, k, std::move(residual)});
    }
  }
  return report;
}

}  // namespace wordhopf
