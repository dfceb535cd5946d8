#pragma once

#include <bipcount/numeric.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bipcount {

/// Cycle structure of a permutation of degree n: mult(k) is the number of
/// k-cycles. Always satisfies sum_k k * mult(k) == n.
class CycleType {
 public:
  CycleType() = default;

  /// Builds from a multiset of cycle lengths, e.g. {3, 1, 1} for n = 5.
  /// Throws ContractViolation on a zero part.
  static CycleType from_parts(std::vector<unsigned> parts);

  /// Builds from (length, multiplicity) pairs; degree is inferred.
  static CycleType from_multiplicities(std::initializer_list<std::pair<unsigned, unsigned>> mult);

  /// mult(k) = n
  static CycleType identity(unsigned n);

  /// mult(1) = n - 2, mult(2) = 1. Requires n >= 2.
  static CycleType transposition(unsigned n);

  unsigned degree() const { return degree_; }
  unsigned mult(unsigned k) const { return k < mult_.size() ? mult_[k] : 0; }

  /// Total number of cycles, sum_k mult(k).
  unsigned cycle_count() const;

  bool is_identity() const { return mult(1) == degree_; }

  /// Nonzero (length, multiplicity) pairs in increasing length.
  std::vector<std::pair<unsigned, unsigned>> support() const;

  /// Cycle lengths in non-increasing order.
  std::vector<unsigned> parts() const;

  /// "3,1,1"; the empty type prints as "".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  unsigned degree_ = 0;
  // Indexed by cycle length, slot 0 unused. Trailing zeros trimmed.
  std::vector<unsigned> mult_ = {0};
};

/// One cycle type per integer partition of n. Ordered lexicographically by
/// the non-increasing part sequence, so the identity comes first and the
/// transposition type (when n >= 2) second. n = 0 yields one empty type.
std::vector<CycleType> generate_cycle_types(unsigned n);

/// Size of the conjugacy class of S_n with this cycle type:
/// n! / prod_k (k^mult(k) * mult(k)!).
Integer permutation_count(const CycleType& t);

Integer factorial(unsigned n);

/// Exact C(a, b); zero when b > a.
Integer binomial(unsigned long a, unsigned long b);

/// Parses "3,1,1" into a cycle type. Throws ContractViolation on bad input.
CycleType parse_partition(const std::string& spec);

}  // namespace bipcount
