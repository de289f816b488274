#include "ifnorder/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ifnorder/errors.hpp"

namespace ifnorder {

namespace {

using Int = boost::multiprecision::mpz_int;

Int pow10(unsigned n) {
  Int r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw ParseError("not a number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 4) bad_number(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);
  } else if (!all_digits(int_part)) {
    bad_number(text);
  }

  std::string digits = std::string(int_part) + std::string(frac_part);
  // A leading zero would be read as an octal prefix.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  Int mantissa(digits.empty() ? std::string("0") : digits);
  long scale = static_cast<long>(frac_part.size()) - exponent;

  Rational::Value v;
  if (scale >= 0) {
    v = Rational::Value(mantissa, pow10(static_cast<unsigned>(scale)));
  } else {
    v = Rational::Value(mantissa * pow10(static_cast<unsigned>(-scale)));
  }
  if (negative) v = -v;
  return Rational(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = Value(Int(num), Int(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

std::string Rational::numerator_str() const {
  return boost::multiprecision::numerator(value_).str();
}

std::string Rational::denominator_str() const {
  return boost::multiprecision::denominator(value_).str();
}

bool Rational::terminates() const {
  Int d = boost::multiprecision::denominator(value_);
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string Rational::str() const {
  if (!terminates()) return numerator_str() + "/" + denominator_str();
  // Smallest number of places that represents the value exactly.
  int places = 0;
  Int d = boost::multiprecision::denominator(value_);
  Int scale = 1;
  while (scale % d != 0) {
    scale *= 10;
    ++places;
  }
  return to_decimal(places);
}

std::string Rational::to_decimal(int places) const {
  if (places < 0) places = 0;
  const Int num = boost::multiprecision::numerator(value_);
  const Int den = boost::multiprecision::denominator(value_);
  const bool negative = num < 0;
  const Int scaled = (negative ? Int(-num) : num) * pow10(static_cast<unsigned>(places));

  Int q = scaled / den;
  const Int twice_rem = 2 * (scaled % den);
  if (twice_rem > den || (twice_rem == den && q % 2 == 1)) ++q;

  std::string digits = q.str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');

  std::string out;
  if (negative && q != 0) out.push_back('-');
  const std::size_t int_len = digits.size() - static_cast<std::size_t>(places);
  out.append(digits, 0, int_len);
  if (places > 0) {
    out.push_back('.');
    out.append(digits, int_len, std::string::npos);
  }
  return out;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ifnorder
