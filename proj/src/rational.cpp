#include "quartic_pd/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qpd {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw std::invalid_argument("invalid rational literal '" + std::string(text) + "': " + why);
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Rational parse_decimal(std::string_view text, std::string_view body) {
  // body: digits[.digits][(e|E)[+-]digits]
  std::string_view mantissa = body;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = body.substr(0, e);
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(text, "bad exponent");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_literal(text, "no digits");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      bad_literal(text, "unexpected character");
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) bad_literal(text, "unexpected character");
    digits = std::string(mantissa);
  }

  Rational value{mpz_class(digits, 10)};
  long scale = exponent - fraction_digits;
  if (scale > 0) {
    value *= pow10(static_cast<unsigned long>(scale));
  } else if (scale < 0) {
    value /= pow10(static_cast<unsigned long>(-scale));
  }
  value.canonicalize();
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_literal(text, "empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text, "expected p/q with integer p, q");
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_literal(text, "zero denominator");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    value = parse_decimal(text, s);
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_str(10);
}

int sign(const Rational& value) {
  return sgn(value);
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational root(rn, rd);
  root.canonicalize();
  return root;
}

Rational rationalize(double value, long denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot rationalize a non-finite value");
  if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
  // Exact enough for sphere points, where |value| <= 1.
  const double scaled = std::round(value * static_cast<double>(denominator));
  Rational result{mpz_class(scaled), mpz_class(denominator)};
  result.canonicalize();
  return result;
}

RationalVector rationalize(std::span<const double> values, long denominator) {
  RationalVector out;
  out.reserve(values.size());
  for (double v : values) out.push_back(rationalize(v, denominator));
  return out;
}

FloatVector to_float(std::span<const Rational> values) {
  FloatVector out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_d());
  return out;
}

}  // namespace qpd
