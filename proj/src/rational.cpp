#include "wordhopf/rational.hpp"

#include <stdexcept>

namespace wordhopf {

namespace {

bool all_digits(const std::string& s, size_t begin, size_t end) {
  if (begin >= end) return false;
  for (size_t i = begin; i < end; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) &&
         all_digits(text, slash + 1, text.size());
  }
  if (!ok) {
    throw std::invalid_argument("not a valid rational: \"" + text + "\"");
  }
  Rational value(text, 10);
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: \"" + text +
                                "\"");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(const Rational& a, unsigned k) {
  Rational num(1);
  for (unsigned i = 0; i < k; ++i) {
    num *= a - Rational(static_cast<long>(i));
  }
  return num / factorial(k);
}

Rational pow_rational(const Rational& base, long exponent) {
  if (exponent < 0 && base == 0) {
    throw std::domain_error("negative power of zero");
  }
  Rational acc(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned long e =
      exponent < 0 ? static_cast<unsigned long>(-exponent)
                   : static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace wordhopf
