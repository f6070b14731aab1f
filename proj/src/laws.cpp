#include "wordhopf/laws.hpp"

#include <algorithm>

namespace wordhopf::laws {

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    passed = false;
    if (failures.size() < 16) failures.push_back(what);
  }
}

std::vector<Letter> all_letters(int generator_count, int max_degree) {
  std::vector<Letter> out;
  std::vector<GeneratorIndex> current;
  // Nondecreasing sequences of indices, i.e. sorted multisets.
  std::function<void(int)> build = [&](int min_index) {
    if (!current.empty()) out.push_back(Letter(current));
    if (static_cast<int>(current.size()) == max_degree) return;
    for (int i = min_index; i <= generator_count; ++i) {
      current.push_back(i);
      build(i);
      current.pop_back();
    }
  };
  build(1);
  std::sort(out.begin(), out.end(),
            [](const Letter& a, const Letter& b) { return a < b; });
  return out;
}

std::vector<Word> words_over(const std::vector<Letter>& letters,
                             int max_length) {
  std::vector<Word> out{Word()};
  std::vector<Word> last{Word()};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    next.reserve(last.size() * letters.size());
    for (const Word& w : last) {
      for (const Letter& l : letters) {
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        next.push_back(Word(std::move(ls)));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    last = std::move(next);
  }
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

std::vector<Word> generator_words(int generator_count, int max_length) {
  std::vector<Letter> letters;
  for (int i = 1; i <= generator_count; ++i) {
    letters.push_back(Letter::generator(i));
  }
  return words_over(letters, max_length);
}

std::vector<Word> words_of_degree(int generator_count, int degree) {
  std::vector<Word> out;
  std::vector<Letter> current;
  std::function<void(int)> build = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(Word(current));
      return;
    }
    for (int d = 1; d <= remaining; ++d) {
      for (const Letter& l : all_letters(generator_count, d)) {
        if (l.degree() != d) continue;
        current.push_back(l);
        build(remaining - d);
        current.pop_back();
      }
    }
  };
  build(degree);
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

SigmaSpec seeded_sigma(int generator_count, std::uint64_t seed) {
  std::vector<Rational> values;
  std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
  auto next = [&state]() {
    state ^= state >> 33;
    state *= 0xff51afd7ed558ccdull;
    state ^= state >> 33;
    return state;
  };
  for (int i = 0; i < generator_count; ++i) {
    long num = static_cast<long>(next() % 9) - 4;  // -4..4
    if (num == 0) num = static_cast<long>(next() % 4) + 1;
    long den = static_cast<long>(next() % 4) + 1;  // 1..4
    Rational value(num, den);
    value.canonicalize();
    values.push_back(std::move(value));
  }
  return SigmaSpec(std::move(values));
}

long lyndon_count_moebius(int alphabet_size, int length) {
  auto moebius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    if (n > 1) result = -result;
    return result;
  };
  long total = 0;
  for (int d = 1; d <= length; ++d) {
    if (length % d != 0) continue;
    long power = 1;
    for (int i = 0; i < length / d; ++i) power *= alphabet_size;
    total += moebius(d) * power;
  }
  return total / length;
}

namespace {

std::vector<std::pair<Word, Word>> word_pairs(int generator_count,
                                              int combined_length) {
  std::vector<std::pair<Word, Word>> out;
  const std::vector<Word> words =
      generator_words(generator_count, combined_length);
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (static_cast<int>(u.length() + v.length()) <= combined_length) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

Element counit_scaled_unit(const Word& w) {
  return w.empty() ? Element::unit() : Element::zero();
}

}  // namespace

SuiteResult hopf_axioms(const VerifyOptions& opts) {
  SuiteResult result;
  result.name = "hopf-axioms";
  const std::vector<Word> words =
      generator_words(opts.generators, opts.max_degree);
  const auto pairs = word_pairs(opts.generators, opts.max_degree);

  for (const Word& w : words) {
    const TensorElement delta = coproduct(w);
    // Coassociativity with the same slot convention on both sides.
    result.check(expand_slot(delta, 0, false) == expand_slot(delta, 1, false),
                 "coassociativity fails on " + to_string(w));
    // Both one-sided counit contractions return w.
    Element left, right;
    for (const auto& [slots, c] : delta.terms()) {
      if (slots[0].empty()) left.add_term(slots[1], c);
      if (slots[1].empty()) right.add_term(slots[0], c);
    }
    result.check(left == Element::basis(w) && right == Element::basis(w),
                 "counit law fails on " + to_string(w));
  }

  for (HopfProduct product :
       {HopfProduct::kShuffle, HopfProduct::kQuasiShuffle}) {
    const char* tag =
        product == HopfProduct::kShuffle ? " [shuffle]" : " [quasi-shuffle]";
    for (const auto& [u, v] : pairs) {
      const Element prod = hopf_multiply(Element::basis(u), Element::basis(v),
                                         product);
      result.check(coproduct(prod) == tensor_pair_product(
                                          coproduct(u), coproduct(v), product),
                   "bialgebra compatibility fails on " + to_string(u) + ", " +
                       to_string(v) + tag);
    }
    for (const Word& w : words) {
      const TensorElement delta = coproduct(w);
      const Element expected = counit_scaled_unit(w);
      const auto s = [product](const Word& x) {
        return antipode(Element::basis(x), product);
      };
      const Element lhs = multiply_slots(map_slot(delta, 0, s), product);
      const Element rhs = multiply_slots(map_slot(delta, 1, s), product);
      result.check(lhs == expected && rhs == expected,
                   "antipode law fails on " + to_string(w) + tag);
    }
  }
  return result;
}

SuiteResult hoffman_isomorphism(const VerifyOptions& opts,
                                const ShuffleFn& shuffle_fn) {
  SuiteResult result;
  result.name = "hoffman-isomorphism";
  const ShuffleFn sh = shuffle_fn
                           ? shuffle_fn
                           : [](const Element& a, const Element& b) {
                               return shuffle(a, b);
                             };
  for (const auto& [u, v] : word_pairs(opts.generators, opts.max_degree)) {
    const Element lhs = hat_exp(sh(Element::basis(u), Element::basis(v)));
    const Element rhs = quasi_shuffle(hat_exp(Element::basis(u)),
                                      hat_exp(Element::basis(v)));
    result.check(lhs == rhs, "hat_exp is not a morphism on " + to_string(u) +
                                 ", " + to_string(v));
  }
  return result;
}

SuiteResult cocycle(const VerifyOptions& opts) {
  SuiteResult result;
  result.name = "cocycle";
  for (const Word& w : generator_words(opts.generators, opts.max_degree)) {
    const TensorElement delta = coproduct(w);
    for (int r = 1; r <= opts.generators; ++r) {
      const Element image = b_plus(r, Element::basis(w));
      TensorElement rhs = map_slot(delta, 1, [r](const Word& u) {
        return b_plus(r, Element::basis(u));
      });
      for (const auto& [word_image, c] : image.terms()) {
        rhs.add_term({word_image, Word()}, c);
      }
      result.check(coproduct(image) == rhs,
                   "cocycle identity fails on " + to_string(w) + " with r=" +
                       std::to_string(r));
    }
  }
  return result;
}

SuiteResult character_group(const VerifyOptions& opts) {
  SuiteResult result;
  result.name = "character-group";
  const SigmaSpec sigma = seeded_sigma(opts.generators, opts.seed);
  const auto pairs = word_pairs(opts.generators, opts.max_degree);

  for (const auto& [u, v] : pairs) {
    const Element eu = Element::basis(u);
    const Element ev = Element::basis(v);
    // Multiplicative for the quasi-shuffle product.
    result.check(feynman_eval(sigma, quasi_shuffle(eu, ev)) ==
                     feynman_eval(sigma, eu) * feynman_eval(sigma, ev),
                 "character property fails on " + to_string(u) + ", " +
                     to_string(v));
    // Infinitesimal-character law for sigma itself.
    const Rational lhs = sigma.on_element(quasi_shuffle(eu, ev));
    const Rational rhs = sigma.on_word(u) * (v.empty() ? 1 : 0) +
                         (u.empty() ? 1 : 0) * sigma.on_word(v);
    result.check(lhs == rhs, "infinitesimal law fails on " + to_string(u) +
                                 ", " + to_string(v));
  }
  // phi composed with the antipode is the convolution inverse of phi.
  for (const Word& w : generator_words(opts.generators, opts.max_degree)) {
    LPolynomial acc;
    const TensorElement delta = coproduct(w);
    for (const auto& [slots, c] : delta.terms()) {
      const LPolynomial first = feynman_eval(sigma, Element::basis(slots[0]));
      const LPolynomial second = feynman_eval(
          sigma, antipode(Element::basis(slots[1]), HopfProduct::kQuasiShuffle));
      acc += first * second * c;
    }
    const LPolynomial expected = w.empty() ? LPolynomial::constant(Rational(1))
                                           : LPolynomial();
    result.check(acc == expected,
                 "character inverse fails on " + to_string(w));
  }
  return result;
}

SuiteResult theorem1(const VerifyOptions& opts) {
  SuiteResult result;
  result.name = "theorem1";
  const SigmaSpec sigma = seeded_sigma(opts.generators, opts.seed);

  // Generator words one longer than the law-suite bound, plus shorter words
  // over an alphabet with inherited letters.
  std::vector<Word> universe =
      generator_words(opts.generators, opts.max_degree + 1);
  for (const Word& w :
       words_over(all_letters(opts.generators, 2),
                  std::min(opts.max_degree, 3))) {
    universe.push_back(w);
  }

  for (const Word& w : universe) {
    if (w.empty()) continue;
    const unsigned n = static_cast<unsigned>(w.length());
    Rational expected(1);
    for (const Letter& l : w.letters()) {
      expected *= sigma.on_letter(l);
    }
    expected /= factorial(n);
    const LPolynomial phi = feynman_eval(sigma, Element::basis(w));
    result.check(phi.coeff(static_cast<int>(n)) == expected,
                 "top L-coefficient fails on " + to_string(w));
    if (!phi.is_zero()) {
      result.check(phi.degree() <= coradical_degree(Element::basis(w)),
                   "kinematical degree exceeds coradical degree on " +
                       to_string(w));
    } else {
      ++result.checks;  // zero image: degree is the sentinel, trivially below
    }
  }
  return result;
}

SuiteResult proposition11(const VerifyOptions& opts) {
  SuiteResult result;
  result.name = "proposition11";
  const SigmaSpec sigma = seeded_sigma(opts.generators, opts.seed);

  std::vector<std::vector<GeneratorIndex>> tuples{{}};
  for (int n = 0; n <= opts.max_degree; ++n) {
    if (n > 0) {
      std::vector<std::vector<GeneratorIndex>> next;
      for (const auto& t : tuples) {
        for (int i = 1; i <= opts.generators; ++i) {
          auto extended = t;
          extended.push_back(i);
          next.push_back(std::move(extended));
        }
      }
      tuples = std::move(next);
    }
    for (const auto& tuple : tuples) {
      Element product = Element::unit();
      Rational coupling_product(1);
      for (GeneratorIndex i : tuple) {
        product = quasi_shuffle(product,
                                Element::basis(Word({Letter::generator(i)})));
        coupling_product *= sigma.on_letter(Letter::generator(i));
      }
      for (int r = 1; r <= opts.generators; ++r) {
        const LPolynomial phi = feynman_eval(sigma, b_plus(r, product));
        const Rational expected = sigma.on_letter(Letter::generator(r)) /
                                  Rational(n + 1) * coupling_product;
        result.check(phi.coeff(n + 1) == expected,
                     "prepend identity fails for n=" + std::to_string(n) +
                         ", r=" + std::to_string(r));
      }
    }
  }
  return result;
}

SuiteResult lyndon_count(const VerifyOptions& opts) {
  SuiteResult result;
  result.name = "lyndon-count";
  for (int len = 1; len <= opts.max_degree + 1; ++len) {
    long found = 0;
    for (const Word& w : generator_words(opts.generators, len)) {
      if (static_cast<int>(w.length()) == len && is_lyndon(w)) ++found;
    }
    const long expected = lyndon_count_moebius(opts.generators, len);
    result.check(found == expected,
                 "Lyndon count mismatch at length " + std::to_string(len) +
                     ": " + std::to_string(found) + " vs " +
                     std::to_string(expected));
  }
  return result;
}

std::vector<SuiteResult> run_all(const VerifyOptions& opts) {
  return {hopf_axioms(opts),   hoffman_isomorphism(opts), cocycle(opts),
          character_group(opts), theorem1(opts),          proposition11(opts),
          lyndon_count(opts)};
}

}  // namespace wordhopf::laws
