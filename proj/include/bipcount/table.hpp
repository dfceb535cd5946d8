#pragma once

#include <bipcount/numeric.hpp>

#include <vector>

namespace bipcount {

/// One (n, r) entry of the log table, 1 <= n < r.
struct TableRow {
  unsigned n = 0;
  unsigned r = 0;
  double ln_lower = 0.0;
  double ln_exact = 0.0;
  double ln_upper = 0.0;
  Integer count;
  Rational lower;
  Rational upper;
};

/// Rows for every 1 <= n < r <= max in (n, r) lexicographic order. Cells are
/// computed on `workers` threads; output order never depends on it.
std::vector<TableRow> build_table(unsigned max, unsigned workers = 1);

}  // namespace bipcount
