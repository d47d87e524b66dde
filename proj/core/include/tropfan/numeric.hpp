#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tropfan {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Parses "12", "-3/4" or "0.25". Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "3", "-1/2"; never a decimal expansion.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

// gcd of absolute values; 0 for the zero vector.
Integer content(const IntVector& v);

bool is_zero(const IntVector& v);
bool is_integral(const Rational& q);

RatVector to_rational(const IntVector& v);

Rational dot(const IntVector& u, const RatVector& p);
Integer dot(const IntVector& u, const IntVector& v);

}  // namespace tropfan
