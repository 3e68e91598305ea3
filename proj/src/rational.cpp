#include "chebwalk/rational.hpp"

#include <algorithm>
#include <cctype>

namespace chebwalk {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(token) + "'");
  }
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) {
    throw ParseError("zero denominator in '" + std::string(token) + "'");
  }
  Rational r(negative ? BigInt(-p) : p, q);
  r.canonicalize();
  return r;
}

namespace {

Rational canonical(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c;
}

}  // namespace

std::string to_string(const Rational& q) { return canonical(q).get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_fraction_string(const Rational& q) {
  const Rational c = canonical(q);
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::vector<Rational> to_rationals(std::span<const BigInt> values) {
  return {values.begin(), values.end()};
}

std::vector<Rational> to_rationals(std::span<const std::size_t> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

}  // namespace chebwalk
