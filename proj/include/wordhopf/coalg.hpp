#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "wordhopf/element.hpp"

namespace wordhopf {

enum class HopfProduct { kShuffle, kQuasiShuffle };

Element hopf_multiply(const Element& u, const Element& v, HopfProduct product);

// A rational combination of k-tuples of words (k >= 2), the image space of
// iterated coproducts.
class TensorElement {
 public:
  using SlotWords = std::vector<Word>;

  struct SlotsLess {
    bool operator()(const SlotWords& a, const SlotWords& b) const;
  };
  using TermMap = std::map<SlotWords, Rational, SlotsLess>;

  explicit TensorElement(int arity);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorElement& add_term(SlotWords slots, const Rational& coeff);
  TensorElement& add_scaled(const TensorElement& other, const Rational& scale);

  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-(const TensorElement& other) const;

  bool operator==(const TensorElement&) const = default;

 private:
  int arity_;
  TermMap terms_;
};

// Deconcatenation: w = uv contributes v (x) u (suffix first, prefix second).
TensorElement coproduct(const Word& w);
TensorElement coproduct(const Element& x);

// Coproduct minus the two trivial cuts; zero on the empty word.
TensorElement reduced_coproduct(const Element& x);

// k-th power of the reduced coproduct (arity k+1), expanding the last slot
// at each step. k = 0 is rejected.
TensorElement reduced_coproduct_power(const Element& x, int k);

// Replace one slot through a word-to-element linear map (same arity).
TensorElement map_slot(const TensorElement& t, int slot,
                       const std::function<Element(const Word&)>& fn);

// Replace one slot by its (reduced) coproduct; arity grows by one.
TensorElement expand_slot(const TensorElement& t, int slot, bool reduced);

// Multiply all slots together with the chosen product.
Element multiply_slots(const TensorElement& t, HopfProduct product);

// Componentwise product of two arity-2 tensors.
TensorElement tensor_pair_product(const TensorElement& a,
                                  const TensorElement& b, HopfProduct product);

// Smallest k with reduced_coproduct_power(x, k) == 0; 0 for multiples of the
// empty word, 1 for primitives. Throws std::invalid_argument on x = 0.
int coradical_degree(const Element& x);

// Antipode by the connected-filtered recursion S(x) = -x - m(S (x) Id) dTilde(x)
// with the selected product as m; S(empty word) = empty word.
Element antipode(const Element& x, HopfProduct product);

// Linear functional vanishing on the empty word and on every word of length
// >= 2: generator letter a_i maps to c[i-1], inherited letters default to 0
// and may carry explicit values. Nonzero inherited values break the
// infinitesimal-character law and are rejected at construction.
class SigmaSpec {
 public:
  explicit SigmaSpec(std::vector<Rational> generator_values,
                     std::map<Letter, Rational> inherited_values = {});

  int generator_count() const {
    return static_cast<int>(generator_values_.size());
  }
  const std::vector<Rational>& generator_values() const {
    return generator_values_;
  }

  Rational on_letter(const Letter& letter) const;
  Rational on_word(const Word& w) const;
  Rational on_element(const Element& x) const;

 private:
  std::vector<Rational> generator_values_;
  std::map<Letter, Rational> inherited_values_;
};

// n-th convolution power of sigma at w: the sum over ordered deconcatenations
// of w into n nonempty factors of the product of sigma values. n = 0 is the
// counit.
Rational sigma_conv_power(const SigmaSpec& sigma, int n, const Word& w);

// Polynomial in the kinematic variable L with rational coefficients.
class LPolynomial {
 public:
  static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

  LPolynomial() = default;
  explicit LPolynomial(std::vector<Rational> coeffs);
  static LPolynomial constant(Rational c);

  bool is_zero() const { return coeffs_.empty(); }
  // kNegInfDegree for the zero polynomial.
  int degree() const;
  Rational coeff(int power) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  LPolynomial operator+(const LPolynomial& other) const;
  LPolynomial operator*(const LPolynomial& other) const;
  LPolynomial operator*(const Rational& scale) const;
  LPolynomial& operator+=(const LPolynomial& other);

  bool operator==(const LPolynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // coeffs_[j] multiplies L^j
};

// Feynman rules: the character exp_star(L sigma) applied to x, i.e. the sum
// over n of sigma_conv_power(sigma, n, .) / n! * L^n, extended linearly.
LPolynomial feynman_eval(const SigmaSpec& sigma, const Element& x);

// Degree in L of feynman_eval; LPolynomial::kNegInfDegree when the image is
// zero. Throws std::invalid_argument on the zero element.
int kinematical_degree(const SigmaSpec& sigma, const Element& x);

// The cocycle prepending generator letter a_r to every word.
Element b_plus(GeneratorIndex r, const Element& x);

}  // namespace wordhopf
