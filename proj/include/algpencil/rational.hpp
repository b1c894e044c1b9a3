#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace algpencil {

// Exact scalars. cpp_rational keeps values reduced with positive denominator,
// which is exactly the invariant the rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Accepts "p", "-p", "p/q" with q > 0 after sign normalization.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& r);

double to_double(const Rational& r);

}  // namespace algpencil
