#include <bipcount/table.hpp>

#include <bipcount/polya.hpp>

#include <atomic>
#include <thread>

namespace bipcount {

std::vector<TableRow> build_table(unsigned max, unsigned workers) {
  std::vector<TableRow> rows;
  for (unsigned n = 1; n <= max; ++n) {
    for (unsigned r = n + 1; r <= max; ++r) {
      TableRow row;
      row.n = n;
      row.r = r;
      rows.push_back(std::move(row));
    }
  }

  auto fill = [](TableRow& row) {
    CountResult c = count_matrix_classes(row.n, row.r);
    row.count = std::move(c.count);
    row.ln_exact = c.ln_count;
    row.lower = lower_bound(row.n, row.r);
    row.upper = upper_bound(row.n, row.r);
    row.ln_lower = ln(row.lower);
    row.ln_upper = ln(row.upper);
  };

  workers = std::max(1u, std::min<unsigned>(workers, rows.size()));
  if (workers == 1) {
    for (TableRow& row : rows) fill(row);
    return rows;
  }
  // Largest cells sit at the end; hand out indices dynamically.
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) fill(rows[i]);
      });
    }
  }
  return rows;
}

}  // namespace bipcount
