#pragma once

// Exact arithmetic types shared by every module. All counting is done in
// arbitrary precision; doubles only appear as natural logs for reporting.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bipcount {

using Integer = mpz_class;
using Rational = mpq_class;

/// Precondition on an argument was not met (wrong degree, missing variable, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bound was requested outside the n < r regime it is stated for.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive oracle was asked for an instance beyond its size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

Integer pow2(unsigned long e);

/// Natural log of a positive integer, from its bit length plus the leading
/// 53-bit mantissa. Relative error is at the level of double rounding.
double ln(const Integer& x);

/// ln(num) - ln(den) for a positive rational.
double ln(const Rational& x);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Decimal rendering of a rational with `digits` places after the point
/// (truncated toward zero).
std::string to_decimal(const Rational& x, unsigned digits);

}  // namespace bipcount
