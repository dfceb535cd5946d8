#include <bipcount/polya.hpp>

#include <numeric>
#include <thread>
#include <vector>

namespace bipcount {
namespace {

class GcdTable {
 public:
  GcdTable(unsigned max, bool fault) : stride_(max + 1), table_(stride_ * stride_, 0) {
    for (unsigned k = 1; k <= max; ++k) {
      for (unsigned j = 1; j <= max; ++j) table_[k * stride_ + j] = std::gcd(k, j);
    }
    if (fault && max >= 1) table_[1 * stride_ + 1] += 1;
  }
  unsigned operator()(unsigned k, unsigned j) const { return table_[k * stride_ + j]; }

 private:
  std::size_t stride_;
  std::vector<unsigned> table_;
};

// Cycle type flattened for the inner loop, with its class size attached.
struct WeightedType {
  std::vector<std::pair<unsigned, unsigned>> support;
  Integer class_size;
};

std::vector<WeightedType> weighted_types(unsigned n) {
  std::vector<WeightedType> out;
  for (const CycleType& t : generate_cycle_types(n)) {
    out.push_back({t.support(), permutation_count(t)});
  }
  return out;
}

// sum_{b} N(b) 2^{cells(a, b)} for one row type a.
Integer column_sum(const WeightedType& a, const std::vector<WeightedType>& cols,
                   const GcdTable& gcd) {
  Integer acc = 0;
  Integer term;
  for (const WeightedType& b : cols) {
    unsigned long cells = 0;
    for (auto [k, ak] : a.support) {
      for (auto [j, bj] : b.support) cells += static_cast<unsigned long>(ak) * bj * gcd(k, j);
    }
    mpz_mul_2exp(term.get_mpz_t(), b.class_size.get_mpz_t(), cells);
    acc += term;
  }
  return acc * a.class_size;
}

// m! Z_{S_m}(2^{e_1}, ..., 2^{e_m}) with e_j = sum_k a_k gcd(k, j), via the
// integer form of the cycle-index recurrence:
//   W_0 = 1,  W_len = sum_{i=1..len} (len-1)!/(len-i)! * 2^{e_i} * W_{len-i}.
// Multiplied by the class size of a.
Integer recurrence_column_sum(const WeightedType& a, unsigned m, const GcdTable& gcd) {
  std::vector<unsigned long> e(m + 1, 0);
  for (unsigned j = 1; j <= m; ++j) {
    for (auto [k, ak] : a.support) e[j] += static_cast<unsigned long>(ak) * gcd(k, j);
  }
  std::vector<Integer> w(m + 1);
  w[0] = 1;
  Integer falling, term;
  for (unsigned len = 1; len <= m; ++len) {
    Integer& acc = w[len];
    acc = 0;
    falling = 1;
    for (unsigned i = 1; i <= len; ++i) {
      mpz_mul_2exp(term.get_mpz_t(), w[len - i].get_mpz_t(), e[i]);
      term *= falling;
      acc += term;
      falling *= len - i;
    }
  }
  return w[m] * a.class_size;
}

Rational pow2_rational(unsigned long e) { return Rational(pow2(e)); }

// C(r + 2^n - 1, r)
Integer stars_and_bars(unsigned n, unsigned r) {
  if (n >= 63) throw ContractViolation("2^n does not fit the binomial argument for n >= 63");
  return binomial(r + (1ul << n) - 1, r);
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void require_rows_fewer(unsigned n, unsigned r, const char* what) {
  if (n == 0 || n >= r) {
    throw RegimeError(std::string(what) + " is stated for 1 <= n < r (got n=" + std::to_string(n) +
                      ", r=" + std::to_string(r) + ")");
  }
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kRowsFewer: return "n<r";
    case Regime::kSquare: return "n=r";
    case Regime::kRowsMore: return "n>r";
  }
  return "?";
}

CountResult count_matrix_classes(unsigned n, unsigned r, const CountOptions& options) {
  CountResult result{n, r, Integer(1), 0.0};
  if (n == 0 || r == 0) return result;

  const unsigned small = std::min(n, r);
  const unsigned large = std::max(n, r);
  const GcdTable gcd(large, options.inject_gcd_fault);
  const std::vector<WeightedType> rows = weighted_types(small);
  std::vector<WeightedType> cols;
  if (options.method == CountMethod::kTypePairs) cols = weighted_types(large);

  auto row_sum = [&](const WeightedType& a) {
    return options.method == CountMethod::kTypePairs ? column_sum(a, cols, gcd)
                                                     : recurrence_column_sum(a, large, gcd);
  };

  // One partial sum per row type; the final reduction runs in row order.
  std::vector<Integer> partial(rows.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, rows.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) partial[i] = row_sum(rows[i]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < rows.size(); i += workers) partial[i] = row_sum(rows[i]);
      });
    }
  }

  Integer total = 0;
  for (const Integer& p : partial) total += p;
  const Integer order = factorial(n) * factorial(r);
  if (!options.inject_gcd_fault && !mpz_divisible_p(total.get_mpz_t(), order.get_mpz_t())) {
    throw std::logic_error("Burnside sum not divisible by group order");
  }
  mpz_tdiv_q(result.count.get_mpz_t(), total.get_mpz_t(), order.get_mpz_t());
  result.ln_count = ln(result.count);
  return result;
}

Integer uniform_substitution_closed_form(unsigned r, const Integer& c) {
  if (c < 1) throw ContractViolation("substitution value must be >= 1");
  Integer top = c + (r - 1);  // r + c - 1, taken as an Integer so c may be large
  if (!top.fits_ulong_p()) throw ContractViolation("substitution value too large");
  return binomial(top.get_ui(), r);
}

Rational lower_bound(unsigned n, unsigned r) {
  require_rows_fewer(n, r, "lower_bound");
  return ratio(stars_and_bars(n, r), factorial(n));
}

Rational upper_bound(unsigned n, unsigned r) {
  require_rows_fewer(n, r, "upper_bound");
  return 2 * lower_bound(n, r);
}

BoundsResult bounds(unsigned n, unsigned r) {
  if (n == 0 || r == 0) throw ContractViolation("bounds need n, r >= 1");
  if (n < r) return {n, r, lower_bound(n, r), upper_bound(n, r), Regime::kRowsFewer};
  if (n > r) return {n, r, lower_bound(r, n), upper_bound(r, n), Regime::kRowsMore};
  return {n, r, ratio(stars_and_bars(n, n), 2 * factorial(n)), upper_bound(n, n + 1),
          Regime::kSquare};
}

Rational general_term_value(unsigned n, unsigned r, const CycleType& t) {
  if (t.degree() != n) {
    throw ContractViolation("cycle type " + t.to_string() + " has degree " +
                            std::to_string(t.degree()) + ", expected " + std::to_string(n));
  }
  if (r == 0) throw ContractViolation("general_term_value needs r >= 1");
  const auto support = t.support();
  const CycleIndex z = cycle_index_symmetric(r);
  Rational value = evaluate(z, [&](unsigned j) -> std::optional<Rational> {
    unsigned long e = 0;
    for (auto [k, m] : support) e += static_cast<unsigned long>(m) * std::gcd(k, j);
    return pow2_rational(e);
  });
  value /= factorial(n);
  return value;
}

Rational second_term_value(unsigned n, unsigned r) {
  if (n < 2) throw ContractViolation("second_term_value needs n >= 2");
  return general_term_value(n, r, CycleType::transposition(n));
}

Rational alternating_substitution(unsigned n, unsigned r) {
  if (n < 1) throw ContractViolation("alternating_substitution needs n >= 1");
  const Rational odd = pow2_rational(n - 1);
  const Rational even = pow2_rational(n);
  return evaluate(cycle_index_symmetric(r),
                  [&](unsigned j) -> std::optional<Rational> { return j % 2 ? odd : even; });
}

Rational second_term_budget(unsigned n, unsigned r) {
  if (n < 2) throw ContractViolation("second_term_budget needs n >= 2");
  const Integer nf = factorial(n);
  return ratio(stars_and_bars(n, r), nf * (nf - 1));
}

}  // namespace bipcount
