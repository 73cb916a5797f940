#include "tropical/rational.hpp"

#include "tropical/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>

namespace tropical {

namespace {

using Int = boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int pow10(unsigned exponent) {
  Int result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

Int parse_integer(std::string_view digits) { return Int(std::string(digits)); }

Rat parse_decimal(std::string_view token, std::string_view original) {
  bool negative = false;
  if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }

  long exponent = 0;
  if (const auto e = token.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = token.substr(e + 1);
    token = token.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw ParseError("invalid number '" + std::string(original) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = token;
  std::string_view frac_part;
  if (const auto dot = token.find('.'); dot != std::string_view::npos) {
    int_part = token.substr(0, dot);
    frac_part = token.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError("invalid number '" + std::string(original) + "'");
  }

  Int numerator = 0;
  if (!int_part.empty()) numerator = parse_integer(int_part);
  if (!frac_part.empty()) {
    numerator = numerator * pow10(static_cast<unsigned>(frac_part.size())) + parse_integer(frac_part);
  }
  exponent -= static_cast<long>(frac_part.size());

  Rat value = exponent >= 0 ? Rat(numerator * pow10(static_cast<unsigned>(exponent)))
                            : Rat(numerator, pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rat(-value) : value;
}

}  // namespace

Rat parse_rational(std::string_view token) {
  if (token.empty()) throw ParseError("empty number");
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return parse_decimal(token, token);

  std::string_view num = token.substr(0, slash);
  std::string_view den = token.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("invalid rational '" + std::string(token) + "'");
  }
  Int d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
  // The two-argument constructor normalizes; the string constructor does not.
  Rat value(parse_integer(num), d);
  return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace tropical
