#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chebwalk {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised for malformed text input (graph files, matrix files, numbers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its domain
/// (e.g. the Eulerian check on an unbalanced digraph).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts "p", "-p" or "p/q" with q > 0, decimal digits only.
Rational parse_rational(std::string_view token);

// Reduced form, integers without denominator: "3", "-7/2".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Always "p/q", e.g. "3/1". Used by the JSON encoders.
std::string to_fraction_string(const Rational& q);

std::vector<Rational> to_rationals(std::span<const BigInt> values);
std::vector<Rational> to_rationals(std::span<const std::size_t> values);

}  // namespace chebwalk
