#include <bipcount/oracle.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace bipcount::oracle {
namespace {

std::uint64_t low_bits(unsigned count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

// Bit 0 of every row.
std::uint64_t row_starts(unsigned n, unsigned r) {
  std::uint64_t m = 0;
  for (unsigned i = 0; i < n; ++i) m |= std::uint64_t{1} << (i * r);
  return m;
}

class BitTable {
 public:
  explicit BitTable(std::uint64_t size) : words_((size + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

MatrixCode swap_rows(MatrixCode m, unsigned /*n*/, unsigned r, unsigned i, unsigned k) {
  const unsigned a = i * r;
  const unsigned b = k * r;
  const std::uint64_t d = ((m.bits >> a) ^ (m.bits >> b)) & low_bits(r);
  return {m.bits ^ (d << a) ^ (d << b)};
}

MatrixCode swap_cols(MatrixCode m, unsigned n, unsigned r, unsigned j, unsigned l) {
  const std::uint64_t d = ((m.bits >> j) ^ (m.bits >> l)) & row_starts(n, r);
  return {m.bits ^ (d << j) ^ (d << l)};
}

OrbitCensus orbit_census(unsigned n, unsigned r, unsigned max_cells) {
  if (n == 0 || r == 0) throw ContractViolation("orbit_census needs n, r >= 1");
  const unsigned cells = n * r;
  if (cells > max_cells || cells > kHardMaxCells) {
    throw CapExceeded(std::to_string(n) + "x" + std::to_string(r) + " has " +
                      std::to_string(cells) + " cells, over the exhaustive-search cap of " +
                      std::to_string(std::min(max_cells, kHardMaxCells)));
  }

  const std::uint64_t space = std::uint64_t{1} << cells;
  const std::uint64_t starts = row_starts(n, r);
  const std::uint64_t row_mask = low_bits(r);
  BitTable visited(space);
  std::vector<std::uint64_t> queue;
  OrbitCensus census;
  std::uint64_t orbits = 0;

  for (std::uint64_t seed = 0; seed < space; ++seed) {
    if (visited.test(seed)) continue;
    ++orbits;
    queue.clear();
    queue.push_back(seed);
    visited.set(seed);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint64_t m = queue[head];
      auto visit = [&](std::uint64_t next) {
        if (!visited.test(next)) {
          visited.set(next);
          queue.push_back(next);
        }
      };
      for (unsigned i = 0; i + 1 < n; ++i) {
        const unsigned a = i * r;
        const std::uint64_t d = ((m >> a) ^ (m >> (a + r))) & row_mask;
        visit(m ^ (d << a) ^ (d << (a + r)));
      }
      for (unsigned j = 0; j + 1 < r; ++j) {
        const std::uint64_t d = ((m >> j) ^ (m >> (j + 1))) & starts;
        visit(m ^ (d << j) ^ (d << (j + 1)));
      }
    }
    ++census.size_histogram[queue.size()];
  }
  census.orbits = Integer(static_cast<unsigned long>(orbits));
  return census;
}

Integer orbit_count(unsigned n, unsigned r, unsigned max_cells) {
  return orbit_census(n, r, max_cells).orbits;
}

BurnsideTally burnside_tally(unsigned n, unsigned r) {
  if (n == 0 || r == 0) throw ContractViolation("burnside_tally needs n, r >= 1");
  if (n > kBurnsideMaxRows || r > kBurnsideMaxCols) {
    throw CapExceeded("explicit Burnside enumeration is limited to " +
                      std::to_string(kBurnsideMaxRows) + " rows and " +
                      std::to_string(kBurnsideMaxCols) + " columns");
  }
  const unsigned cells = n * r;
  std::vector<unsigned> sigma(n);
  std::vector<unsigned> tau(r);
  std::vector<unsigned> image(cells);
  std::vector<char> seen(cells);

  BurnsideTally tally;
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::uint64_t pairs = 0;
  do {
    // At most 7! * 2^42 per row permutation, well inside 64 bits.
    std::uint64_t partial = 0;
    std::iota(tau.begin(), tau.end(), 0u);
    do {
      ++pairs;
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < r; ++j) image[i * r + j] = sigma[i] * r + tau[j];
      }
      std::fill(seen.begin(), seen.end(), 0);
      unsigned cycles = 0;
      for (unsigned c = 0; c < cells; ++c) {
        if (seen[c]) continue;
        ++cycles;
        for (unsigned x = c; !seen[x]; x = image[x]) seen[x] = 1;
      }
      partial += std::uint64_t{1} << cycles;
    } while (std::next_permutation(tau.begin(), tau.end()));
    tally.fixed_point_sum += Integer(static_cast<unsigned long>(partial));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  tally.group_order = Integer(static_cast<unsigned long>(pairs));
  if (!mpz_divisible_p(tally.fixed_point_sum.get_mpz_t(), tally.group_order.get_mpz_t())) {
    throw std::logic_error("fixed-point sum not divisible by group order");
  }
  tally.orbits = tally.fixed_point_sum / tally.group_order;
  return tally;
}

Integer burnside_count_explicit(unsigned n, unsigned r) { return burnside_tally(n, r).orbits; }

}  // namespace bipcount::oracle
