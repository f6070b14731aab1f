#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wordhopf/rational.hpp"
#include "wordhopf/words.hpp"

namespace wordhopf {

// A finitely supported rational linear combination of words. Terms are kept
// in word order with no zero coefficients, so equality is structural.
class Element {
 public:
  using TermMap = std::map<Word, Rational, WordLess>;

  // max_word_length() of the zero element.
  static constexpr int kNegInfLength = std::numeric_limits<int>::min();

  Element() = default;

  static Element zero() { return Element(); }
  // The empty word with coefficient 1 (the algebra unit).
  static Element unit() { return basis(Word()); }
  static Element basis(Word w);
  static Element term(Rational coeff, Word w);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Word& w) const;
  std::size_t support_size() const { return terms_.size(); }

  // Length of the longest word in the support; kNegInfLength when zero.
  int max_word_length() const;

  Element& add_term(const Word& w, const Rational& coeff);
  Element& add_scaled(const Element& other, const Rational& scale);

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(const Rational& scale) const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scale);

  bool operator==(const Element&) const = default;

 private:
  TermMap terms_;
};

// Normalized rational combination of elements.
Element linear_combine(const std::vector<std::pair<Rational, Element>>& parts);

// Bilinear extension of word concatenation.
Element concat(const Element& u, const Element& v);

// One fixed letter prepended to every word (bilinear in the element).
Element prepend_letter(const Letter& letter, const Element& x);

// Interleaving shuffle product.
Element shuffle(const Element& u, const Element& v);

// Shuffle enriched with the leading-letter merge term.
Element quasi_shuffle(const Element& u, const Element& v);

// concat(u, v) - concat(v, u).
Element lie_bracket(const Element& u, const Element& v);

// Hoffman's exponential: for a word of length n, the sum over compositions
// (j_1,...,j_l) of n of the word whose letters are the merges of the
// consecutive blocks, weighted by 1/(j_1! ... j_l!). Linear in the element.
Element hat_exp(const Element& x);

std::string to_string(const Element& x);

}  // namespace wordhopf
