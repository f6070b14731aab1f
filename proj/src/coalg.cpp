#include "wordhopf/coalg.hpp"

#include <stdexcept>
#include <unordered_map>

namespace wordhopf {

Element hopf_multiply(const Element& u, const Element& v,
                      HopfProduct product) {
  return product == HopfProduct::kShuffle ? shuffle(u, v)
                                          : quasi_shuffle(u, v);
}

bool TensorElement::SlotsLess::operator()(const SlotWords& a,
                                          const SlotWords& b) const {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Word& u, const Word& v) { return word_compare(u, v) < 0; });
}

TensorElement::TensorElement(int arity) : arity_(arity) {
  if (arity < 2) throw std::invalid_argument("tensor arity must be >= 2");
}

TensorElement& TensorElement::add_term(SlotWords slots,
                                       const Rational& coeff) {
  if (static_cast<int>(slots.size()) != arity_) {
    throw std::invalid_argument("tensor term arity mismatch");
  }
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(std::move(slots), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

TensorElement& TensorElement::add_scaled(const TensorElement& other,
                                         const Rational& scale) {
  if (other.arity_ != arity_) {
    throw std::invalid_argument("tensor arity mismatch");
  }
  if (scale == 0) return *this;
  for (const auto& [slots, c] : other.terms_) add_term(slots, c * scale);
  return *this;
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  TensorElement out = *this;
  out.add_scaled(other, Rational(1));
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
  TensorElement out = *this;
  out.add_scaled(other, Rational(-1));
  return out;
}

TensorElement coproduct(const Word& w) {
  TensorElement out(2);
  for (std::size_t cut = 0; cut <= w.length(); ++cut) {
    // w = uv with u the first cut letters; slot 0 holds v, slot 1 holds u.
    out.add_term({w.slice(cut, w.length()), w.slice(0, cut)}, Rational(1));
  }
  return out;
}

TensorElement coproduct(const Element& x) {
  TensorElement out(2);
  for (const auto& [w, c] : x.terms()) out.add_scaled(coproduct(w), c);
  return out;
}

TensorElement reduced_coproduct(const Element& x) {
  TensorElement out(2);
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) continue;
    for (std::size_t cut = 1; cut + 1 <= w.length(); ++cut) {
      out.add_term({w.slice(cut, w.length()), w.slice(0, cut)}, c);
    }
  }
  return out;
}

TensorElement reduced_coproduct_power(const Element& x, int k) {
  if (k < 1) {
    throw std::invalid_argument(
        "reduced coproduct power needs k >= 1; use coproduct or identity");
  }
  TensorElement out = reduced_coproduct(x);
  for (int step = 2; step <= k; ++step) {
    out = expand_slot(out, out.arity() - 1, /*reduced=*/true);
  }
  return out;
}

TensorElement map_slot(const TensorElement& t, int slot,
                       const std::function<Element(const Word&)>& fn) {
  TensorElement out(t.arity());
  for (const auto& [slots, c] : t.terms()) {
    Element image = fn(slots[slot]);
    for (const auto& [w, cw] : image.terms()) {
      TensorElement::SlotWords next = slots;
      next[slot] = w;
      out.add_term(std::move(next), c * cw);
    }
  }
  return out;
}

TensorElement expand_slot(const TensorElement& t, int slot, bool reduced) {
  TensorElement out(t.arity() + 1);
  for (const auto& [slots, c] : t.terms()) {
    const Word& w = slots[slot];
    TensorElement piece =
        reduced ? reduced_coproduct(Element::basis(w)) : coproduct(w);
    for (const auto& [pair_slots, cp] : piece.terms()) {
      TensorElement::SlotWords next;
      next.reserve(slots.size() + 1);
      next.insert(next.end(), slots.begin(), slots.begin() + slot);
      next.push_back(pair_slots[0]);
      next.push_back(pair_slots[1]);
      next.insert(next.end(), slots.begin() + slot + 1, slots.end());
      out.add_term(std::move(next), c * cp);
    }
  }
  return out;
}

Element multiply_slots(const TensorElement& t, HopfProduct product) {
  Element out;
  for (const auto& [slots, c] : t.terms()) {
    Element acc = Element::basis(slots[0]);
    for (std::size_t i = 1; i < slots.size(); ++i) {
      acc = hopf_multiply(acc, Element::basis(slots[i]), product);
    }
    out.add_scaled(acc, c);
  }
  return out;
}

TensorElement tensor_pair_product(const TensorElement& a,
                                  const TensorElement& b,
                                  HopfProduct product) {
  if (a.arity() != 2 || b.arity() != 2) {
    throw std::invalid_argument("tensor_pair_product needs arity 2");
  }
  TensorElement out(2);
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      Element left = hopf_multiply(Element::basis(sa[0]),
                                   Element::basis(sb[0]), product);
      Element right = hopf_multiply(Element::basis(sa[1]),
                                    Element::basis(sb[1]), product);
      const Rational scale = ca * cb;
      for (const auto& [wl, cl] : left.terms()) {
        for (const auto& [wr, cr] : right.terms()) {
          out.add_term({wl, wr}, scale * cl * cr);
        }
      }
    }
  }
  return out;
}

int coradical_degree(const Element& x) {
  if (x.is_zero()) {
    throw std::invalid_argument("coradical degree undefined for zero");
  }
  bool only_empty = true;
  for (const auto& [w, c] : x.terms()) {
    if (!w.empty()) only_empty = false;
  }
  if (only_empty) return 0;
  TensorElement power = reduced_coproduct(x);
  int k = 1;
  while (!power.is_zero()) {
    power = expand_slot(power, power.arity() - 1, /*reduced=*/true);
    ++k;
  }
  return k;
}

namespace {

Element antipode_word(const Word& w, HopfProduct product) {
  struct Key {
    Word w;
    bool quasi;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return hash_value(k.w) * 2 + (k.quasi ? 1 : 0);
    }
  };
  thread_local std::unordered_map<Key, Element, KeyHash> cache;

  if (w.empty()) return Element::unit();
  Key key{w, product == HopfProduct::kQuasiShuffle};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // S(w) = -w - m(S (x) Id) dTilde(w); the first slot of dTilde holds the
  // suffix of each cut, so the recursion descends on proper suffixes.
  Element out = -Element::basis(w);
  for (std::size_t cut = 1; cut + 1 <= w.length(); ++cut) {
    Element s_suffix = antipode_word(w.slice(cut, w.length()), product);
    out -= hopf_multiply(s_suffix, Element::basis(w.slice(0, cut)), product);
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

Element antipode(const Element& x, HopfProduct product) {
  Element out;
  for (const auto& [w, c] : x.terms()) {
    out.add_scaled(antipode_word(w, product), c);
  }
  return out;
}

SigmaSpec::SigmaSpec(std::vector<Rational> generator_values,
                     std::map<Letter, Rational> inherited_values)
    : generator_values_(std::move(generator_values)),
      inherited_values_(std::move(inherited_values)) {
  for (const auto& [letter, value] : inherited_values_) {
    if (!letter.inherited()) {
      throw std::invalid_argument(
          "sigma extra values are only for inherited letters, got " +
          wordhopf::to_string(letter));
    }
    if (value == 0) continue;
    // Re-verify the derivation law sigma(u qs v) = sigma(u) eps(v) +
    // eps(u) sigma(v) on a split of this letter; both sides must be 0.
    Letter head({letter.content().front()});
    Letter tail(std::vector<GeneratorIndex>(letter.content().begin() + 1,
                                            letter.content().end()));
    Element product = quasi_shuffle(Element::basis(Word({head})),
                                    Element::basis(Word({tail})));
    Rational lhs;
    for (const auto& [w, c] : product.terms()) lhs += c * on_word(w);
    if (lhs != 0) {
      throw std::invalid_argument(
          "sigma_extra violates the infinitesimal-character law on letter " +
          wordhopf::to_string(letter));
    }
  }
}

Rational SigmaSpec::on_letter(const Letter& letter) const {
  if (!letter.inherited()) {
    const GeneratorIndex i = letter.content().front();
    if (i > generator_count()) {
      throw std::out_of_range("generator index exceeds alphabet size");
    }
    return generator_values_[static_cast<std::size_t>(i) - 1];
  }
  auto it = inherited_values_.find(letter);
  return it == inherited_values_.end() ? Rational(0) : it->second;
}

Rational SigmaSpec::on_word(const Word& w) const {
  if (w.length() != 1) return Rational(0);
  return on_letter(w.letters().front());
}

Rational SigmaSpec::on_element(const Element& x) const {
  Rational out;
  for (const auto& [w, c] : x.terms()) out += c * on_word(w);
  return out;
}

namespace {

// Sum over deconcatenations of the tail of w starting at `from` into `parts`
// nonempty factors of the product of sigma values.
Rational conv_power_tail(const SigmaSpec& sigma, const Word& w,
                         std::size_t from, int parts) {
  const std::size_t n = w.length();
  if (parts == 0) return from == n ? Rational(1) : Rational(0);
  Rational acc;
  for (std::size_t next = from + 1; next + (parts - 1) <= n; ++next) {
    Rational head = sigma.on_word(w.slice(from, next));
    if (head == 0) continue;
    acc += head * conv_power_tail(sigma, w, next, parts - 1);
  }
  return acc;
}

}  // namespace

Rational sigma_conv_power(const SigmaSpec& sigma, int n, const Word& w) {
  if (n < 0) throw std::invalid_argument("convolution power needs n >= 0");
  if (n == 0) return w.empty() ? Rational(1) : Rational(0);
  return conv_power_tail(sigma, w, 0, n);
}

LPolynomial::LPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

LPolynomial LPolynomial::constant(Rational c) {
  LPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

void LPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int LPolynomial::degree() const {
  return coeffs_.empty() ? kNegInfDegree
                         : static_cast<int>(coeffs_.size()) - 1;
}

Rational LPolynomial::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(power)];
}

LPolynomial LPolynomial::operator+(const LPolynomial& other) const {
  LPolynomial out = *this;
  out += other;
  return out;
}

LPolynomial& LPolynomial::operator+=(const LPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

LPolynomial LPolynomial::operator*(const LPolynomial& other) const {
  if (is_zero() || other.is_zero()) return LPolynomial();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return LPolynomial(std::move(out));
}

LPolynomial LPolynomial::operator*(const Rational& scale) const {
  if (scale == 0) return LPolynomial();
  std::vector<Rational> out = coeffs_;
  for (Rational& c : out) c *= scale;
  return LPolynomial(std::move(out));
}

LPolynomial feynman_eval(const SigmaSpec& sigma, const Element& x) {
  LPolynomial out;
  for (const auto& [w, c] : x.terms()) {
    // The convolution exponential truncates at the coradical degree, which
    // for a basis word equals its length.
    std::vector<Rational> coeffs(w.length() + 1);
    for (int n = 0; n <= static_cast<int>(w.length()); ++n) {
      coeffs[static_cast<std::size_t>(n)] =
          c * sigma_conv_power(sigma, n, w) / factorial(n);
    }
    out += LPolynomial(std::move(coeffs));
  }
  return out;
}

int kinematical_degree(const SigmaSpec& sigma, const Element& x) {
  if (x.is_zero()) {
    throw std::invalid_argument("kinematical degree undefined for zero");
  }
  return feynman_eval(sigma, x).degree();
}

Element b_plus(GeneratorIndex r, const Element& x) {
  return prepend_letter(Letter::generator(r), x);
}

}  // namespace wordhopf
