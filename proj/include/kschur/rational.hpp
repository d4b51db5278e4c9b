#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kschur {

using Rational = mpq_class;

/// "3", "-1/2".
std::string to_string(const Rational& q);

/// Accepts integers, fractions "a/b" and decimals "0.25" / "1e-3" (decimals are
/// converted exactly from their written form).
Rational parse_rational(const std::string& text);

/// Comma separated list of rationals, e.g. "1,1/2,0.3".
std::vector<Rational> parse_rational_list(const std::string& text);

inline double to_double(const Rational& q) { return q.get_d(); }

std::vector<double> to_doubles(const std::vector<Rational>& v);

/// Exact rational value of a finite double.
Rational from_double(double x);

}  // namespace kschur
