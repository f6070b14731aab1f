#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace wordhopf {

// 1-based index into the fixed generator alphabet a_1, ..., a_R.
using GeneratorIndex = int;

// A letter is a nonempty multiset of generator indices, kept sorted.
// Singletons are the generators themselves; letters of cardinality >= 2
// arise from the commutative associative merge and are called inherited.
class Letter {
 public:
  explicit Letter(std::vector<GeneratorIndex> generators);
  Letter(std::initializer_list<GeneratorIndex> generators)
      : Letter(std::vector<GeneratorIndex>(generators)) {}

  static Letter generator(GeneratorIndex i) { return Letter({i}); }

  const std::vector<GeneratorIndex>& content() const { return content_; }
  int degree() const { return static_cast<int>(content_.size()); }
  bool inherited() const { return content_.size() >= 2; }

  bool operator==(const Letter&) const = default;

 private:
  std::vector<GeneratorIndex> content_;
};

// Multiset union of the two letters; commutative, associative,
// degree-additive.
Letter theta_merge(const Letter& x, const Letter& y);

// Total order on letters: smaller cardinality first, then lexicographic on
// the sorted content. Restricts to a_i < a_j <=> i < j on generators and to
// "generator < inherited" on mixed pairs.
std::strong_ordering letter_compare(const Letter& x, const Letter& y);

inline std::strong_ordering operator<=>(const Letter& x, const Letter& y) {
  return letter_compare(x, y);
}

// A word is a finite, possibly empty, sequence of letters.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Convenience: word made of singleton generator letters.
  static Word from_generators(std::initializer_list<GeneratorIndex> indices);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  int degree() const;

  Word concat_with(const Word& other) const;
  // Letters [begin, end) as a word.
  Word slice(std::size_t begin, std::size_t end) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Lexicographic extension of the letter order; a proper prefix is smaller
// than the longer word, and the empty word is the minimum.
std::strong_ordering word_compare(const Word& u, const Word& v);

inline std::strong_ordering operator<=>(const Word& u, const Word& v) {
  return word_compare(u, v);
}

struct WordLess {
  bool operator()(const Word& u, const Word& v) const {
    return word_compare(u, v) < 0;
  }
};

std::size_t hash_value(const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const { return hash_value(w); }
};

// True iff w is strictly smaller than every proper suffix of w.
// Throws std::invalid_argument for the empty word.
bool is_lyndon(const Word& w);

// Compact debug form, e.g. "{1}{1,2}"; the empty word prints as "1".
std::string to_string(const Letter& letter);
std::string to_string(const Word& w);

}  // namespace wordhopf
