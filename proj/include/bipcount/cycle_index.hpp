#pragma once

#include <bipcount/numeric.hpp>
#include <bipcount/partitions.hpp>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bipcount {

/// Product of powers x_k^e_k. Stored sparse and sorted by variable index;
/// zero exponents are never stored, so the empty monomial is the constant 1.
class Monomial {
 public:
  using Entry = std::pair<unsigned, unsigned>;  // (variable index, exponent)

  Monomial() = default;
  /// Entries may be unsorted, repeated or carry zero exponents; they are
  /// canonicalized. Variable index 0 is rejected.
  explicit Monomial(std::vector<Entry> entries);

  static Monomial of(const CycleType& t);

  unsigned exponent(unsigned var) const;
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_constant() const { return entries_.empty(); }

  /// sum_k k * e_k
  unsigned long weight() const;

  /// Multiplies in x_var^e.
  void multiply_var(unsigned var, unsigned e = 1);

  /// "x1^3 x2^1"; constant renders as "".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Canonical order: compare exponent vectors from x1 upward, larger
  /// exponent first. Puts x1^n ahead of everything else of the same weight.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<Entry> entries_;
};

/// X_m (.) X_t = prod_{k,j} x_{lcm(k,j)}^{a_k * b_j * gcd(k,j)}
Monomial boxtimes_monomial(const Monomial& a, const Monomial& b);

/// Sparse polynomial with exact rational coefficients whose monomials all
/// share one weight (the degree of the permutation group it describes).
class CycleIndex {
 public:
  using Terms = std::map<Monomial, Rational>;

  /// No terms, degree 0.
  CycleIndex() = default;
  /// No terms yet; every term added must have this weight.
  explicit CycleIndex(unsigned long degree) : degree_(degree) {}

  /// The constant polynomial 1 (Z_{S_0}).
  static CycleIndex one();

  /// Adds `coeff * m`. Throws ContractViolation if weight(m) != degree.
  void add_term(const Monomial& m, const Rational& coeff);

  unsigned long degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m, zero if absent.
  Rational coefficient(const Monomial& m) const;

  /// Sum of all coefficients; 1 for any genuine cycle index.
  Rational coefficient_sum() const;

  void scale(const Rational& c);

  /// One term per line, "num/den x{k}^{e} ...", in canonical monomial order.
  std::string to_text() const;

  friend bool operator==(const CycleIndex&, const CycleIndex&) = default;

 private:
  unsigned long degree_ = 0;
  Terms terms_;
};

/// Z_{S_n}, one term per cycle type, coefficient = class size / n!.
CycleIndex cycle_index_symmetric(unsigned n);

/// Z_{S_r} via Z_{S_r} = (1/r) sum_{i=1..r} x_i Z_{S_{r-i}}, Z_{S_0} = 1.
CycleIndex cycle_index_by_recurrence(unsigned r);

/// Distributes boxtimes_monomial over the terms of both operands. A degree-0
/// operand scales the other by its constant coefficient.
CycleIndex boxtimes(const CycleIndex& a, const CycleIndex& b);

/// Returns the value for variable x_k, or nullopt if it has none.
using Assignment = std::function<std::optional<Rational>(unsigned)>;

/// sum coeff * prod assign(k)^e_k. Throws ContractViolation if a variable
/// that appears in z has no value.
Rational evaluate(const CycleIndex& z, const Assignment& assign);

/// values[k-1] is the value of x_k.
Rational evaluate(const CycleIndex& z, std::span<const Rational> values);

/// Every variable set to c.
Rational evaluate_uniform(const CycleIndex& z, const Rational& c);

}  // namespace bipcount
