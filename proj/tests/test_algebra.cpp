#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <thread>

#include "wordhopf/element.hpp"
#include "wordhopf/laws.hpp"

using namespace wordhopf;

namespace {

const Word a1 = Word::from_generators({1});
const Word a2 = Word::from_generators({2});

Element basis(std::initializer_list<GeneratorIndex> gens) {
  return Element::basis(Word::from_generators(gens));
}

// Independent oracle for the permutation-sum identity: the shuffle of n
// distinct generator letters must be the sum of all n! permutation words.
Element permutation_sum(const std::vector<GeneratorIndex>& indices) {
  std::vector<GeneratorIndex> perm = indices;
  std::sort(perm.begin(), perm.end());
  Element out;
  do {
    std::vector<Letter> letters;
    for (GeneratorIndex i : perm) letters.push_back(Letter::generator(i));
    out.add_term(Word(std::move(letters)), Rational(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("linear_combine normalizes") {
  CHECK(linear_combine({{Rational(1), basis({1})},
                        {Rational(-1), basis({1})}}) == Element::zero());
  CHECK(linear_combine({{Rational(2), basis({1, 2})},
                        {Rational(3), basis({1, 2})}}) ==
        basis({1, 2}) * Rational(5));
  const Element mixed = linear_combine({{Rational(1, 2), basis({1})},
                                        {Rational(1, 3), basis({2})}});
  CHECK(mixed.coeff(a1) == Rational(1, 2));
  CHECK(mixed.coeff(a2) == Rational(1, 3));
  CHECK(mixed.support_size() == 2);
}

TEST_CASE("element length") {
  CHECK(Element::zero().max_word_length() == Element::kNegInfLength);
  CHECK(Element::unit().max_word_length() == 0);
  CHECK((basis({1}) + basis({1, 2, 1})).max_word_length() == 3);
}

TEST_CASE("concat") {
  CHECK(concat(basis({1}), basis({2})) == basis({1, 2}));
  CHECK(concat(basis({1}) + basis({2}), basis({1})) ==
        basis({1, 1}) + basis({2, 1}));
  CHECK(concat(Element::unit(), basis({2, 1})) == basis({2, 1}));
  CHECK(concat(basis({2, 1}), Element::unit()) == basis({2, 1}));
}

TEST_CASE("shuffle base cases") {
  CHECK(shuffle(basis({1, 2}), Element::unit()) == basis({1, 2}));
  CHECK(shuffle(basis({1}), basis({2})) == basis({1, 2}) + basis({2, 1}));
}

TEST_CASE("shuffle of distinct letters is the permutation sum") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<GeneratorIndex> indices;
    Element product = Element::unit();
    for (int i = 1; i <= n; ++i) {
      indices.push_back(i);
      product = shuffle(product, Element::basis(Word({Letter::generator(i)})));
    }
    CHECK(product == permutation_sum(indices));
  }
}

TEST_CASE("quasi-shuffle base cases") {
  CHECK(quasi_shuffle(basis({2, 1}), Element::unit()) == basis({2, 1}));
  CHECK(quasi_shuffle(basis({1}), basis({2})) ==
        basis({1, 2}) + basis({2, 1}) +
            Element::basis(Word({Letter{1, 2}})));
  CHECK(quasi_shuffle(basis({1}), basis({1})) ==
        basis({1, 1}) * Rational(2) + Element::basis(Word({Letter{1, 1}})));
}

TEST_CASE("shuffle and quasi-shuffle are commutative and associative") {
  const auto words = laws::generator_words(2, 3);
  for (const Word& u : words) {
    for (const Word& v : words) {
      const Element eu = Element::basis(u);
      const Element ev = Element::basis(v);
      CHECK(shuffle(eu, ev) == shuffle(ev, eu));
      CHECK(quasi_shuffle(eu, ev) == quasi_shuffle(ev, eu));
    }
  }
  for (const Word& u : words) {
    for (const Word& v : words) {
      for (const Word& w : words) {
        const Element eu = Element::basis(u);
        const Element ev = Element::basis(v);
        const Element ew = Element::basis(w);
        CHECK(shuffle(shuffle(eu, ev), ew) == shuffle(eu, shuffle(ev, ew)));
        CHECK(quasi_shuffle(quasi_shuffle(eu, ev), ew) ==
              quasi_shuffle(eu, quasi_shuffle(ev, ew)));
      }
    }
  }
}

TEST_CASE("products grade correctly") {
  const auto words = laws::generator_words(2, 3);
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (u.empty() || v.empty()) continue;
      const int degree = u.degree() + v.degree();
      const std::size_t full_length = u.length() + v.length();
      const Element plain = shuffle(Element::basis(u), Element::basis(v));
      for (const auto& [w, c] : plain.terms()) {
        CHECK(w.length() == full_length);
        CHECK(w.degree() == degree);
      }
      const Element quasi =
          quasi_shuffle(Element::basis(u), Element::basis(v));
      for (const auto& [w, c] : quasi.terms()) {
        CHECK(w.length() <= full_length);
        CHECK(w.degree() == degree);
        if (w.length() == full_length) {
          // Top-length terms carry no new merged letter.
          for (const Letter& l : w.letters()) {
            const bool in_u =
                std::find(u.letters().begin(), u.letters().end(), l) !=
                u.letters().end();
            const bool in_v =
                std::find(v.letters().begin(), v.letters().end(), l) !=
                v.letters().end();
            CHECK((in_u || in_v));
          }
        }
      }
    }
  }
}

TEST_CASE("lie bracket") {
  CHECK(lie_bracket(basis({1}), basis({1})) == Element::zero());
  CHECK(lie_bracket(basis({1}), basis({2})) ==
        basis({1, 2}) - basis({2, 1}));
  CHECK(lie_bracket(basis({1}), lie_bracket(basis({1}), basis({2}))) ==
        basis({1, 1, 2}) - basis({1, 2, 1}) * Rational(2) + basis({2, 1, 1}));
}

TEST_CASE("hat_exp on short words") {
  CHECK(hat_exp(Element::unit()) == Element::unit());
  CHECK(hat_exp(basis({1})) == basis({1}));
  CHECK(hat_exp(basis({1, 2})) ==
        basis({1, 2}) + Element::term(Rational(1, 2), Word({Letter{1, 2}})));
  // Three letters: blocks (1,1,1), (1,2), (2,1), (3).
  const Element image = hat_exp(basis({1, 2, 1}));
  CHECK(image.coeff(Word::from_generators({1, 2, 1})) == 1);
  CHECK(image.coeff(Word({Letter::generator(1), Letter{1, 2}})) ==
        Rational(1, 2));
  CHECK(image.coeff(Word({Letter{1, 2}, Letter::generator(1)})) ==
        Rational(1, 2));
  CHECK(image.coeff(Word({Letter{1, 1, 2}})) == Rational(1, 6));
  CHECK(image.support_size() == 4);
}

TEST_CASE("hat_exp intertwines shuffle and quasi-shuffle") {
  for (const Word& u : laws::generator_words(2, 4)) {
    for (const Word& v : laws::generator_words(2, 4)) {
      if (static_cast<int>(u.length() + v.length()) > 4) continue;
      CHECK(hat_exp(shuffle(Element::basis(u), Element::basis(v))) ==
            quasi_shuffle(hat_exp(Element::basis(u)),
                          hat_exp(Element::basis(v))));
    }
  }
}

TEST_CASE("products are safe and deterministic under concurrent use") {
  const Word u = Word::from_generators({1, 2, 1, 2});
  const Word v = Word::from_generators({2, 1, 2});
  const Element expected =
      quasi_shuffle(Element::basis(u), Element::basis(v));
  std::vector<Element> results(4);
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < results.size(); ++i) {
    workers.emplace_back([&results, &u, &v, i] {
      results[i] = quasi_shuffle(Element::basis(u), Element::basis(v));
    });
  }
  for (auto& worker : workers) worker.join();
  for (const Element& result : results) CHECK(result == expected);
}

TEST_CASE("hat_exp preserves degree and has the word as top term") {
  for (const Word& w : laws::words_over(laws::all_letters(2, 2), 3)) {
    const Element image = hat_exp(Element::basis(w));
    CHECK(image.coeff(w) == 1);
    for (const auto& [u, c] : image.terms()) {
      CHECK(u.degree() == w.degree());
      if (!(u == w)) CHECK(u.length() < w.length());
    }
  }
}
