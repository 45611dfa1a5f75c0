#include "isel/rational_text.hpp"

#include "isel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

namespace isel {
namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt digits_to_int(const std::string& s) {
  BigInt v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c) != 0; }),
          s.end());
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(s.begin());
  }
  if (s.empty()) throw ParseError("sign without digits in rational literal");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction: " + text);
    BigInt d = digits_to_int(den);
    if (d == 0) throw ParseError("zero denominator: " + text);
    value = Rational(digits_to_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw ParseError("malformed decimal: " + text);
    if (!whole.empty() && !all_digits(whole))
      throw ParseError("malformed decimal: " + text);
    if (!frac.empty() && !all_digits(frac))
      throw ParseError("malformed decimal: " + text);
    BigInt scaled = whole.empty() ? BigInt(0) : digits_to_int(whole);
    BigInt den = 1;
    for (char c : frac) {
      scaled = scaled * 10 + (c - '0');
      den *= 10;
    }
    value = Rational(scaled, den);
  } else {
    if (!all_digits(s)) throw ParseError("malformed number: " + text);
    value = Rational(digits_to_int(s));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();

  // Terminating decimal iff den = 2^a 5^b.
  BigInt probe = den;
  int twos = 0, fives = 0;
  while (probe % 2 == 0) {
    probe /= 2;
    ++twos;
  }
  while (probe % 5 == 0) {
    probe /= 5;
    ++fives;
  }
  if (probe != 1) return num.str() + "/" + den.str();

  const int digits = std::max(twos, fives);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale / den;  // exact by construction
  const bool neg = scaled < 0;
  std::string body = (neg ? BigInt(-scaled) : scaled).str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(body.begin(), digits + 1 - body.size(), '0');
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return (neg ? "-" : "") + body;
}

std::string rational_to_decimal(const Rational& r, int digits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  const bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero.
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(body.begin(), digits + 1 - body.size(), '0');
  if (digits > 0)
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return (neg && scaled != 0 ? "-" : "") + body;
}

}  // namespace isel
