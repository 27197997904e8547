#include "plan2bt/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace plan2bt {

Rational Rational::from_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed numeric literal: " + text);
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed numeric literal: " + text);
    num = num * 10 + (c - '0');
    if (seen_dot) den *= 10;
    any_digit = true;
  }
  if (!any_digit) throw std::invalid_argument("malformed numeric literal: " + text);
  return Rational(negative ? -num : num, den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  // Exact decimal if the denominator is of the form 2^a * 5^b.
  std::int64_t d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  std::int64_t scale = 1;
  int digits = 0;
  while (scale % den_ != 0) { scale *= 10; ++digits; }
  return to_decimal(digits);
}

std::string Rational::to_decimal(int digits) const {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled_num = num_ * scale;
  std::int64_t whole = scaled_num / den_;
  std::int64_t rem = scaled_num % den_;
  if (rem < 0) rem = -rem;
  // round half away from zero
  if (2 * rem >= den_) whole += (scaled_num < 0 ? -1 : 1);
  bool negative = whole < 0;
  if (negative) whole = -whole;
  std::string body = std::to_string(whole);
  if (digits == 0) return (negative ? "-" : "") + body;
  while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
  body.insert(body.size() - digits, ".");
  return (negative ? "-" : "") + body;
}

}  // namespace plan2bt
