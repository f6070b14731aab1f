#include "wordhopf/element.hpp"

#include <unordered_map>

namespace wordhopf {

Element Element::basis(Word w) {
  Element e;
  e.terms_.emplace(std::move(w), Rational(1));
  return e;
}

Element Element::term(Rational coeff, Word w) {
  Element e;
  e.add_term(w, coeff);
  return e;
}

Rational Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Element::max_word_length() const {
  int best = kNegInfLength;
  for (const auto& [w, c] : terms_) {
    best = std::max(best, static_cast<int>(w.length()));
  }
  return best;
}

Element& Element::add_term(const Word& w, const Rational& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Element& Element::add_scaled(const Element& other, const Rational& scale) {
  if (scale == 0) return *this;
  for (const auto& [w, c] : other.terms_) add_term(w, c * scale);
  return *this;
}

Element Element::operator+(const Element& other) const {
  Element out = *this;
  out += other;
  return out;
}

Element Element::operator-(const Element& other) const {
  Element out = *this;
  out -= other;
  return out;
}

Element Element::operator-() const {
  Element out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Element Element::operator*(const Rational& scale) const {
  Element out;
  if (scale == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * scale);
  return out;
}

Element& Element::operator+=(const Element& other) {
  return add_scaled(other, Rational(1));
}

Element& Element::operator-=(const Element& other) {
  return add_scaled(other, Rational(-1));
}

Element& Element::operator*=(const Rational& scale) {
  *this = *this * scale;
  return *this;
}

Element linear_combine(
    const std::vector<std::pair<Rational, Element>>& parts) {
  Element out;
  for (const auto& [coeff, elem] : parts) out.add_scaled(elem, coeff);
  return out;
}

Element concat(const Element& u, const Element& v) {
  Element out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      out.add_term(wu.concat_with(wv), cu * cv);
    }
  }
  return out;
}

Element prepend_letter(const Letter& letter, const Element& x) {
  Element out;
  for (const auto& [w, c] : x.terms()) {
    std::vector<Letter> letters;
    letters.reserve(w.length() + 1);
    letters.push_back(letter);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

namespace {

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const {
    std::size_t a = hash_value(p.first);
    std::size_t b = hash_value(p.second);
    return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  }
};

using PairCache =
    std::unordered_map<std::pair<Word, Word>, Element, WordPairHash>;

// Recursive interleaving of two basis words; with_merge adds the
// quasi-shuffle term. Memoized per thread on (smaller, larger) word pairs;
// both products are commutative, so the normalized key is sound.
const Element& product_words(const Word& u, const Word& v, bool with_merge) {
  thread_local PairCache cache_shuffle;
  thread_local PairCache cache_quasi;
  PairCache& cache = with_merge ? cache_quasi : cache_shuffle;

  const bool swap = word_compare(v, u) < 0;
  std::pair<Word, Word> key = swap ? std::make_pair(v, u)
                                   : std::make_pair(u, v);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const Word& a = key.first;
  const Word& b = key.second;
  Element result;
  if (a.empty()) {
    result = Element::basis(b);
  } else if (b.empty()) {
    result = Element::basis(a);
  } else {
    const Word ta = a.slice(1, a.length());
    const Word tb = b.slice(1, b.length());
    result = prepend_letter(a.letters()[0], product_words(ta, b, with_merge));
    result += prepend_letter(b.letters()[0], product_words(a, tb, with_merge));
    if (with_merge) {
      result += prepend_letter(theta_merge(a.letters()[0], b.letters()[0]),
                               product_words(ta, tb, with_merge));
    }
  }
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

Element bilinear_product(const Element& u, const Element& v, bool with_merge) {
  Element out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      out.add_scaled(product_words(wu, wv, with_merge), cu * cv);
    }
  }
  return out;
}

}  // namespace

Element shuffle(const Element& u, const Element& v) {
  return bilinear_product(u, v, false);
}

Element quasi_shuffle(const Element& u, const Element& v) {
  return bilinear_product(u, v, true);
}

Element lie_bracket(const Element& u, const Element& v) {
  return concat(u, v) - concat(v, u);
}

namespace {

Element hat_exp_word(const Word& w) {
  const std::size_t n = w.length();
  if (n == 0) return Element::unit();
  Element out;
  // Compositions of n as bitmask over the n-1 gaps; a set bit cuts.
  for (std::size_t mask = 0; mask < (std::size_t(1) << (n - 1)); ++mask) {
    std::vector<Letter> letters;
    Rational weight(1);
    std::size_t block_start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool cut = i + 1 == n || (mask & (std::size_t(1) << i));
      if (!cut) continue;
      Letter merged = w.letters()[block_start];
      for (std::size_t j = block_start + 1; j <= i; ++j) {
        merged = theta_merge(merged, w.letters()[j]);
      }
      letters.push_back(std::move(merged));
      weight /= factorial(static_cast<unsigned>(i - block_start + 1));
      block_start = i + 1;
    }
    out.add_term(Word(std::move(letters)), weight);
  }
  return out;
}

}  // namespace

Element hat_exp(const Element& x) {
  Element out;
  for (const auto& [w, c] : x.terms()) out.add_scaled(hat_exp_word(w), c);
  return out;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    out += "*";
    out += to_string(w);
  }
  return out;
}

}  // namespace wordhopf
