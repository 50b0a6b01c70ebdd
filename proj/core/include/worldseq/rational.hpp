#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace worldseq {

/// Exact arbitrary-precision rational used for weights, probabilities and
/// possibility degrees.
using Rational = boost::multiprecision::cpp_rational;

/// Parses `3`, `0.15`, `.5`, `1/99` or `0.3/2`. A leading `-` is accepted;
/// callers that need non-negative values check for themselves.
/// Throws SemanticError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Shortest exact rendering: a terminating decimal when the denominator has
/// only the prime factors 2 and 5 (`0.15`, `1`), otherwise `a/b`.
/// parse_rational(format_rational(r)) == r for every r.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// |a - b| <= tolerance, evaluated exactly.
bool approx_equal(const Rational& a, const Rational& b, const Rational& tolerance);

/// 1e-9, the tolerance used where weights are compared "within tolerance".
const Rational& weight_tolerance();

}  // namespace worldseq
