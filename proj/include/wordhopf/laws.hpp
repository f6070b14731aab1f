#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wordhopf/coalg.hpp"

namespace wordhopf::laws {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what);
};

struct VerifyOptions {
  int max_degree = 4;
  int generators = 2;
  std::uint64_t seed = 42;
};

// All multisets over {1..generator_count} of cardinality 1..max_degree.
std::vector<Letter> all_letters(int generator_count, int max_degree);

// All words over the singleton generator letters with length <= max_length,
// including the empty word, in word order.
std::vector<Word> generator_words(int generator_count, int max_length);

// All words over the given letters with length <= max_length.
std::vector<Word> words_over(const std::vector<Letter>& letters,
                             int max_length);

// All words of grading degree exactly d (letters of any cardinality).
std::vector<Word> words_of_degree(int generator_count, int degree);

// Deterministic nonzero couplings derived from the seed; portable across
// platforms (no distribution objects).
SigmaSpec seeded_sigma(int generator_count, std::uint64_t seed);

// Number of Lyndon words of the given length over an alphabet of the given
// size, by Moebius counting (independent of is_lyndon).
long lyndon_count_moebius(int alphabet_size, int length);

using ShuffleFn = std::function<Element(const Element&, const Element&)>;

SuiteResult hopf_axioms(const VerifyOptions& opts);
// shuffle_fn exists as an injection point for fault-detection tests.
SuiteResult hoffman_isomorphism(const VerifyOptions& opts,
                                const ShuffleFn& shuffle_fn = nullptr);
SuiteResult cocycle(const VerifyOptions& opts);
SuiteResult character_group(const VerifyOptions& opts);
SuiteResult theorem1(const VerifyOptions& opts);
SuiteResult proposition11(const VerifyOptions& opts);
SuiteResult lyndon_count(const VerifyOptions& opts);

// The full battery in the order above.
std::vector<SuiteResult> run_all(const VerifyOptions& opts);

}  // namespace wordhopf::laws
