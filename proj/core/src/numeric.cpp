#include "tropfan/numeric.hpp"

#include "tropfan/error.hpp"

#include <cctype>

namespace tropfan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError, "malformed number '" + std::string(text) + "'");
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_number(text);
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    auto den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) bad_number(text);
    Integer den = parse_integer(den_text);
    if (den == 0) bad_number(text);
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) bad_number(text);
    if (!whole.empty() && !all_digits(whole)) bad_number(text);
    if (!frac.empty() && !all_digits(frac)) bad_number(text);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = (whole.empty() ? Integer(0) : Integer(std::string(whole))) * scale +
                  (frac.empty() ? Integer(0) : Integer(std::string(frac)));
    Rational q(num, scale);
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return Integer(num).str();
  return Integer(num).str() + "/" + Integer(den).str();
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return abs(g);
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Rational dot(const IntVector& u, const RatVector& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) s += Rational(u[i]) * p[i];
  }
  return s;
}

Integer dot(const IntVector& u, const IntVector& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace tropfan
