#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordhopf/coalg.hpp"
#include "wordhopf/series.hpp"

namespace wordhopf {

// The fixed-point system X^r = 1 + sign(eta_r) alpha B+^{a_r}(X^r Q) with
// Q the product of the X^{r'} raised to eta_{r'}, solved to the given order.
struct CDSESystem {
  int generator_count = 0;          // R
  std::vector<int> eta;             // R nonzero integer exponents
  std::vector<Rational> couplings;  // R nonzero values sigma(a_r)
  int order = 1;                    // truncation order N >= 1

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  Rational a_paper() const;  // sum of eta_r * c_r
  Rational a_tilde() const;  // sum of |eta_r| * c_r

  SigmaSpec sigma() const { return SigmaSpec(couplings); }
};

// Right-hand sides f^r for the general system X^r = 1 + alpha B+^{a_r}(f^r(X)),
// each a finitely supported map from exponent tuples (n_1..n_R) to rationals.
// Tuples of total degree above the order cannot influence the truncated
// solution and are dropped on construction.
struct GeneralRHS {
  using Monomials = std::map<std::vector<int>, Rational>;

  GeneralRHS(int generator_count, int order,
             std::vector<Monomials> monomials);

  int generator_count;
  int order;
  std::vector<Monomials> per_equation;
};

// Forward order-by-order iteration; coefficient n+1 of X^r only uses
// coefficients of order <= n. Index r is 1-based in letters, 0-based in the
// returned vector.
std::vector<AlphaSeries> solve_cdse(const CDSESystem& sys);

std::vector<AlphaSeries> solve_general(const GeneralRHS& rhs);

// Encodes sign(eta_r) X^r prod (X^{r'})^{eta_{r'}} as monomials in the X's,
// exact for all solution orders <= sys.order; negative powers are expanded
// around X = 1. solve_general on the result reproduces solve_cdse.
GeneralRHS general_rhs_from_cdse(const CDSESystem& sys);

// Triangular table of the log expansion: rows[i][j] is the coefficient of
// alpha^i L^j, 0 <= j <= i.
struct GreenFunction {
  std::vector<std::vector<Rational>> rows;
};

// rows[i] = coefficients of feynman_eval(sigma, coefficient i of x). Throws
// std::domain_error if some coefficient exceeds degree i in L.
GreenFunction green_function(const SigmaSpec& sigma, const AlphaSeries& x);

// The diagonal b[k][k]; always starts at 1 for solver output.
struct LeadingLog {
  std::vector<Rational> coefficients;
};

LeadingLog leading_log(const GreenFunction& g);

enum class ClosedFormMode { kDerived, kPaper };

// Coefficient k of (1 + scale x)^exponent.
std::vector<Rational> binom_series(const Rational& exponent,
                                   const Rational& scale, int order);

// Closed-form leading-log coefficients for equation r (1-based).
//  kDerived: (1 - At x)^(-sign(eta_r) c_r / At) with At = sum |eta| c; the
//  degenerate At = 0 falls back to exp(sign(eta_r) c_r x).
//  kPaper: the printed power law with A = sum eta c; throws
//  std::domain_error on mixed-sign eta or A = 0.
LeadingLog closed_form_ll(const CDSESystem& sys, int r, ClosedFormMode mode);

// Order-by-order residuals of the leading-log differential identity
// (k+1) g_{k+1} = sign(eta_r) c_r [x^k](g_r prod g^eta).
struct Theorem2Report {
  struct Entry {
    int r;  // 1-based
    int k;
    Rational residual;
  };
  std::vector<Entry> entries;
  bool all_zero() const;
};

Theorem2Report verify_theorem2(const CDSESystem& sys,
                               const std::vector<LeadingLog>& lls);

// Same residuals for a general system: (k+1) g_{k+1} = c_r [x^k](f^r(g)).
Theorem2Report verify_theorem2_general(const GeneralRHS& rhs,
                                       const std::vector<Rational>& couplings,
                                       const std::vector<LeadingLog>& lls);

}  // namespace wordhopf
