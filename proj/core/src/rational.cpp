#include "worldseq/rational.hpp"

#include <cctype>

#include "worldseq/error.hpp"

namespace worldseq {
namespace {

using boost::multiprecision::cpp_int;

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw SemanticError("malformed number '" + std::string(whole) + "'");

  cpp_int numerator = 0;
  cpp_int denominator = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) throw SemanticError("malformed number '" + std::string(whole) + "'");
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw SemanticError("malformed number '" + std::string(whole) + "'");
    }
    seen_digit = true;
    numerator = numerator * 10 + (c - '0');
    if (seen_point) denominator *= 10;
  }
  if (!seen_digit) throw SemanticError("malformed number '" + std::string(whole) + "'");
  Rational value(numerator, denominator);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view whole = trim(text);
  const auto slash = whole.find('/');
  if (slash == std::string_view::npos) return parse_decimal(whole, whole);

  const Rational numerator = parse_decimal(trim(whole.substr(0, slash)), whole);
  const Rational denominator = parse_decimal(trim(whole.substr(slash + 1)), whole);
  if (denominator == 0) throw SemanticError("zero denominator in '" + std::string(whole) + "'");
  return numerator / denominator;
}

std::string format_rational(const Rational& value) {
  const cpp_int numerator = boost::multiprecision::numerator(value);
  const cpp_int denominator = boost::multiprecision::denominator(value);
  if (denominator == 1) return numerator.str();

  cpp_int rest = denominator;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return numerator.str() + "/" + denominator.str();

  const unsigned digits = std::max(twos, fives);
  cpp_int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  cpp_int scaled = numerator * (scale / denominator);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;

  std::string text = scaled.str();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  text.insert(text.size() - digits, ".");
  if (negative) text.insert(0, "-");
  return text;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool approx_equal(const Rational& a, const Rational& b, const Rational& tolerance) {
  const Rational diff = a - b;
  return (diff < 0 ? Rational(-diff) : diff) <= tolerance;
}

const Rational& weight_tolerance() {
  static const Rational tolerance(1, 1000000000);
  return tolerance;
}

}  // namespace worldseq
