#include "wordhopf/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordhopf {

Letter::Letter(std::vector<GeneratorIndex> generators)
    : content_(std::move(generators)) {
  if (content_.empty()) {
    throw std::invalid_argument("a letter must contain at least one generator");
  }
  for (GeneratorIndex g : content_) {
    if (g < 1) {
      throw std::invalid_argument("generator indices are 1-based");
    }
  }
  std::sort(content_.begin(), content_.end());
}

Letter theta_merge(const Letter& x, const Letter& y) {
  std::vector<GeneratorIndex> merged;
  merged.reserve(x.content().size() + y.content().size());
  std::merge(x.content().begin(), x.content().end(), y.content().begin(),
             y.content().end(), std::back_inserter(merged));
  return Letter(std::move(merged));
}

std::strong_ordering letter_compare(const Letter& x, const Letter& y) {
  if (auto c = x.content().size() <=> y.content().size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      x.content().begin(), x.content().end(), y.content().begin(),
      y.content().end());
}

Word Word::from_generators(std::initializer_list<GeneratorIndex> indices) {
  std::vector<Letter> letters;
  letters.reserve(indices.size());
  for (GeneratorIndex i : indices) letters.push_back(Letter::generator(i));
  return Word(std::move(letters));
}

int Word::degree() const {
  int d = 0;
  for (const Letter& l : letters_) d += l.degree();
  return d;
}

Word Word::concat_with(const Word& other) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(letters));
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  return Word(std::vector<Letter>(letters_.begin() + begin,
                                  letters_.begin() + end));
}

std::strong_ordering word_compare(const Word& u, const Word& v) {
  return std::lexicographical_compare_three_way(
      u.letters().begin(), u.letters().end(), v.letters().begin(),
      v.letters().end(), letter_compare);
}

std::size_t hash_value(const Word& w) {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const Letter& l : w.letters()) {
    mix(l.content().size());
    for (GeneratorIndex g : l.content()) mix(static_cast<std::size_t>(g));
  }
  return h;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("Lyndon undefined for the empty word");
  }
  const auto& ls = w.letters();
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto c = std::lexicographical_compare_three_way(
        ls.begin(), ls.end(), ls.begin() + i, ls.end(), letter_compare);
    if (c >= 0) return false;
  }
  return true;
}

std::string to_string(const Letter& letter) {
  std::string out = "{";
  for (std::size_t i = 0; i < letter.content().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(letter.content()[i]);
  }
  out += '}';
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) out += to_string(l);
  return out;
}

}  // namespace wordhopf
