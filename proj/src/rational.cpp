#include "credal/rational.hpp"

#include <cctype>

#include "credal/errors.hpp"

namespace credal {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  if (text.find('/') != std::string::npos) {
    try {
      Rational q(text);
      if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal: " + text);
    }
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    try {
      Rational q(text);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal: " + text);
    }
  }
  // Exact decimal: digits before and after the dot.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  bool neg = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits.erase(digits.begin());
  }
  if (digits.empty()) throw ParseError("bad decimal literal: " + text);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad decimal literal: " + text);
  mpz_class num(digits, 10);
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational q(num, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_double(double x) {
  Rational q(x);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace credal
