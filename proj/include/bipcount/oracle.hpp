#pragma once

// Brute-force counters that share no code with the cycle-index pipeline.
// Used to audit count_matrix_classes on small instances.

#include <bipcount/numeric.hpp>

#include <cstdint>
#include <map>

namespace bipcount::oracle {

inline constexpr unsigned kDefaultMaxCells = 24;
inline constexpr unsigned kHardMaxCells = 30;  // 2^30-bit visited table = 128 MiB
inline constexpr unsigned kBurnsideMaxRows = 6;
inline constexpr unsigned kBurnsideMaxCols = 7;

/// Row-major n x r binary matrix, cell (i, j) at bit i*r + j.
struct MatrixCode {
  std::uint64_t bits = 0;
};

MatrixCode swap_rows(MatrixCode m, unsigned n, unsigned r, unsigned i, unsigned k);
MatrixCode swap_cols(MatrixCode m, unsigned n, unsigned r, unsigned j, unsigned l);

struct OrbitCensus {
  Integer orbits;
  /// orbit size -> number of orbits of that size
  std::map<std::uint64_t, std::uint64_t> size_histogram;
};

/// BFS closure of every code under adjacent row and column swaps.
/// Throws CapExceeded if n*r > max_cells or n*r > kHardMaxCells.
OrbitCensus orbit_census(unsigned n, unsigned r, unsigned max_cells = kDefaultMaxCells);

Integer orbit_count(unsigned n, unsigned r, unsigned max_cells = kDefaultMaxCells);

struct BurnsideTally {
  Integer fixed_point_sum;  // sum over (sigma, tau) of 2^{cell cycles}
  Integer group_order;      // n! r!
  Integer orbits;
};

/// Burnside over all n! r! permutation pairs, counting cycles of the induced
/// cell permutation by tracing. Throws CapExceeded beyond 6 rows or 7 columns.
BurnsideTally burnside_tally(unsigned n, unsigned r);

Integer burnside_count_explicit(unsigned n, unsigned r);

}  // namespace bipcount::oracle
