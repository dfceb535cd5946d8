#pragma once

// Class counts of n x r binary matrices under row and column permutations,
// together with the binomial lower/upper bounds and the per-term values that
// appear in the upper-bound argument.

#include <bipcount/cycle_index.hpp>
#include <bipcount/numeric.hpp>
#include <bipcount/partitions.hpp>

#include <string_view>

namespace bipcount {

struct CountResult {
  unsigned n = 0;
  unsigned r = 0;
  Integer count;
  double ln_count = 0.0;
};

enum class Regime { kRowsFewer, kSquare, kRowsMore };  // n<r, n=r, n>r

std::string_view to_string(Regime regime);

struct BoundsResult {
  unsigned n = 0;
  unsigned r = 0;
  Rational lower;
  Rational upper;
  Regime regime = Regime::kRowsFewer;
};

enum class CountMethod {
  /// Outer sum over cycle types of min(n, r); the inner sum over the other
  /// side is m! Z_{S_m}(2^{e_1}, 2^{e_2}, ...) from the cycle-index recurrence
  /// in integer form. O(p(min) * max^2) big-integer steps.
  kColumnRecurrence,
  /// Plain double sum over all (row type, column type) pairs.
  kTypePairs,
};

struct CountOptions {
  CountMethod method = CountMethod::kColumnRecurrence;
  /// Threads splitting the row-type axis of the double sum. 0 or 1 runs inline.
  unsigned workers = 1;
  /// Test hook: perturbs the gcd table (gcd(1,1) reads as 2) so verification
  /// front-ends can prove they detect a broken pipeline.
  bool inject_gcd_fault = false;
};

/// Number of equivalence classes of n x r binary matrices under independent
/// row and column permutations:
///   (1/(n! r!)) sum_{a,b} N(a) N(b) 2^{sum_{k,j} a_k b_j gcd(k,j)}
/// over cycle types a of n and b of r. Z_{S_n x S_r} is never materialized.
/// The result is symmetric, so the smaller side is always enumerated by type.
/// n = 0 or r = 0 gives 1.
CountResult count_matrix_classes(unsigned n, unsigned r, const CountOptions& options = {});

/// C(r + c - 1, r) = Z_{S_r}(c, ..., c). Requires c >= 1.
Integer uniform_substitution_closed_form(unsigned r, const Integer& c);

/// C(r + 2^n - 1, r) / n!. Throws RegimeError unless n < r.
Rational lower_bound(unsigned n, unsigned r);

/// 2 C(r + 2^n - 1, r) / n!. Throws RegimeError unless n < r.
Rational upper_bound(unsigned n, unsigned r);

/// Bounds for any n, r >= 1. n > r swaps roles. n = r uses
/// C(n + 2^n - 1, n) / (2 n!) below and the n x (n+1) upper bound above.
BoundsResult bounds(unsigned n, unsigned r);

/// Contribution of a single row permutation of type t:
/// (1/n!) Z_{S_r}(2^{e_1}, 2^{e_2}, ...), e_j = sum_k t.mult(k) gcd(k, j).
/// Weighted by permutation_count and summed over all types this is the count.
Rational general_term_value(unsigned n, unsigned r, const CycleType& t);

/// general_term_value for the transposition type; the substitution
/// alternates 2^{n-1} (odd j) and 2^n (even j). Requires n >= 2.
Rational second_term_value(unsigned n, unsigned r);

/// Z_{S_r}(2^{n-1}, 2^n, 2^{n-1}, ...) without the 1/n! factor.
Rational alternating_substitution(unsigned n, unsigned r);

/// C(r + 2^n - 1, r) / (n! (n! - 1)), the per-term budget that makes the
/// doubling argument work. Requires n >= 2.
Rational second_term_budget(unsigned n, unsigned r);

}  // namespace bipcount
