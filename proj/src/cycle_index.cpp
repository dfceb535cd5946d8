#include <bipcount/cycle_index.hpp>

#include <algorithm>
#include <numeric>

namespace bipcount {

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (auto [var, e] : entries) {
    if (var == 0) throw ContractViolation("variable indices start at 1");
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == var) {
      entries_.back().second += e;
    } else {
      entries_.emplace_back(var, e);
    }
  }
}

Monomial Monomial::of(const CycleType& t) { return Monomial(t.support()); }

unsigned Monomial::exponent(unsigned var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  return (it != entries_.end() && it->first == var) ? it->second : 0;
}

unsigned long Monomial::weight() const {
  unsigned long w = 0;
  for (auto [var, e] : entries_) w += static_cast<unsigned long>(var) * e;
  return w;
}

void Monomial::multiply_var(unsigned var, unsigned e) {
  if (var == 0) throw ContractViolation("variable indices start at 1");
  if (e == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  if (it != entries_.end() && it->first == var) {
    it->second += e;
  } else {
    entries_.insert(it, Entry{var, e});
  }
}

std::string Monomial::to_string() const {
  std::string s;
  for (auto [var, e] : entries_) {
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(var) + '^' + std::to_string(e);
  }
  return s;
}

bool operator<(const Monomial& a, const Monomial& b) {
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    if (ia->first != ib->first) {
      // The side holding the smaller variable has a positive exponent there
      // while the other has zero.
      return ia->first < ib->first;
    }
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.entries_.end() && ib == b.entries_.end();
}

Monomial boxtimes_monomial(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> out;
  out.reserve(a.entries().size() * b.entries().size());
  for (auto [k, ek] : a.entries()) {
    for (auto [j, ej] : b.entries()) {
      const unsigned g = std::gcd(k, j);
      out.emplace_back(k / g * j, ek * ej * g);
    }
  }
  return Monomial(std::move(out));
}

CycleIndex CycleIndex::one() {
  CycleIndex z(0);
  z.terms_.emplace(Monomial{}, Rational(1));
  return z;
}

void CycleIndex::add_term(const Monomial& m, const Rational& coeff) {
  if (m.weight() != degree_) {
    throw ContractViolation("monomial weight " + std::to_string(m.weight()) +
                            " does not match cycle index degree " + std::to_string(degree_));
  }
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational CycleIndex::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CycleIndex::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

void CycleIndex::scale(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
}

std::string CycleIndex::to_text() const {
  std::string s;
  for (const auto& [m, c] : terms_) {
    s += c.get_num().get_str() + '/' + c.get_den().get_str();
    if (!m.is_constant()) s += ' ' + m.to_string();
    s += '\n';
  }
  return s;
}

CycleIndex cycle_index_symmetric(unsigned n) {
  CycleIndex z(n);
  const Integer n_fact = factorial(n);
  for (const CycleType& t : generate_cycle_types(n)) {
    Rational coeff(permutation_count(t), n_fact);
    coeff.canonicalize();
    z.add_term(Monomial::of(t), coeff);
  }
  return z;
}

CycleIndex cycle_index_by_recurrence(unsigned r) {
  std::vector<CycleIndex> z;
  z.reserve(r + 1);
  z.push_back(CycleIndex::one());
  for (unsigned m = 1; m <= r; ++m) {
    CycleIndex next(m);
    const Rational inv_m(1, m);
    for (unsigned i = 1; i <= m; ++i) {
      for (const auto& [mono, coeff] : z[m - i].terms()) {
        Monomial shifted = mono;
        shifted.multiply_var(i);
        next.add_term(shifted, coeff * inv_m);
      }
    }
    z.push_back(std::move(next));
  }
  return std::move(z.back());
}

CycleIndex boxtimes(const CycleIndex& a, const CycleIndex& b) {
  if (a.degree() == 0 || b.degree() == 0) {
    const CycleIndex& constant = a.degree() == 0 ? a : b;
    CycleIndex other = a.degree() == 0 ? b : a;
    other.scale(constant.coefficient(Monomial{}));
    return other;
  }
  CycleIndex out(a.degree() * b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add_term(boxtimes_monomial(ma, mb), ca * cb);
    }
  }
  return out;
}

Rational evaluate(const CycleIndex& z, const Assignment& assign) {
  Rational total = 0;
  // Variables repeat across terms; resolve each once.
  std::map<unsigned, Rational> cache;
  for (const auto& [m, coeff] : z.terms()) {
    Rational term = coeff;
    for (auto [var, e] : m.entries()) {
      auto it = cache.find(var);
      if (it == cache.end()) {
        std::optional<Rational> v = assign(var);
        if (!v) throw ContractViolation("no value assigned to x" + std::to_string(var));
        it = cache.emplace(var, std::move(*v)).first;
      }
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      p.canonicalize();
      term *= p;
    }
    total += term;
  }
  return total;
}

Rational evaluate(const CycleIndex& z, std::span<const Rational> values) {
  return evaluate(z, [values](unsigned var) -> std::optional<Rational> {
    if (var == 0 || var > values.size()) return std::nullopt;
    return values[var - 1];
  });
}

Rational evaluate_uniform(const CycleIndex& z, const Rational& c) {
  return evaluate(z, [&c](unsigned) -> std::optional<Rational> { return c; });
}

}  // namespace bipcount
