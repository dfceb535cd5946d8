#include <bipcount/partitions.hpp>

#include <algorithm>
#include <charconv>
#include <functional>

namespace bipcount {

CycleType CycleType::from_parts(std::vector<unsigned> parts) {
  CycleType t;
  for (unsigned p : parts) {
    if (p == 0) throw ContractViolation("cycle length must be positive");
    if (p >= t.mult_.size()) t.mult_.resize(p + 1, 0);
    ++t.mult_[p];
    t.degree_ += p;
  }
  return t;
}

CycleType CycleType::from_multiplicities(
    std::initializer_list<std::pair<unsigned, unsigned>> mult) {
  std::vector<unsigned> parts;
  for (auto [k, m] : mult) parts.insert(parts.end(), m, k);
  return from_parts(std::move(parts));
}

CycleType CycleType::identity(unsigned n) {
  return from_parts(std::vector<unsigned>(n, 1));
}

CycleType CycleType::transposition(unsigned n) {
  if (n < 2) throw ContractViolation("transposition type needs degree >= 2");
  std::vector<unsigned> parts(n - 2, 1);
  parts.insert(parts.begin(), 2);
  return from_parts(std::move(parts));
}

unsigned CycleType::cycle_count() const {
  unsigned c = 0;
  for (unsigned m : mult_) c += m;
  return c;
}

std::vector<std::pair<unsigned, unsigned>> CycleType::support() const {
  std::vector<std::pair<unsigned, unsigned>> s;
  for (unsigned k = 1; k < mult_.size(); ++k) {
    if (mult_[k] != 0) s.emplace_back(k, mult_[k]);
  }
  return s;
}

std::vector<unsigned> CycleType::parts() const {
  std::vector<unsigned> p;
  p.reserve(cycle_count());
  for (unsigned k = static_cast<unsigned>(mult_.size()); k-- > 1;) p.insert(p.end(), mult_[k], k);
  return p;
}

std::string CycleType::to_string() const {
  std::string s;
  for (unsigned p : parts()) {
    if (!s.empty()) s += ',';
    s += std::to_string(p);
  }
  return s;
}

std::vector<CycleType> generate_cycle_types(unsigned n) {
  std::vector<CycleType> out;
  std::vector<unsigned> prefix;
  // Leading part ascending, remaining parts bounded by it: this visits the
  // non-increasing part sequences in lexicographic order.
  std::function<void(unsigned, unsigned)> extend = [&](unsigned remaining, unsigned cap) {
    if (remaining == 0) {
      out.push_back(CycleType::from_parts(prefix));
      return;
    }
    for (unsigned p = 1; p <= std::min(remaining, cap); ++p) {
      prefix.push_back(p);
      extend(remaining - p, p);
      prefix.pop_back();
    }
  };
  extend(n, n);
  return out;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned long a, unsigned long b) {
  if (b > a) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), a, b);
  return c;
}

Integer permutation_count(const CycleType& t) {
  Integer denom = 1;
  for (auto [k, m] : t.support()) {
    Integer km;
    mpz_ui_pow_ui(km.get_mpz_t(), k, m);
    denom *= km * factorial(m);
  }
  return factorial(t.degree()) / denom;
}

CycleType parse_partition(const std::string& spec) {
  std::vector<unsigned> parts;
  const char* p = spec.data();
  const char* end = p + spec.size();
  if (p == end) return CycleType{};
  while (true) {
    unsigned v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || next == p) throw ContractViolation("malformed partition: '" + spec + "'");
    if (v == 0) throw ContractViolation("partition parts must be positive: '" + spec + "'");
    parts.push_back(v);
    p = next;
    if (p == end) break;
    if (*p != ',') throw ContractViolation("malformed partition: '" + spec + "'");
    ++p;
  }
  return CycleType::from_parts(std::move(parts));
}

}  // namespace bipcount
