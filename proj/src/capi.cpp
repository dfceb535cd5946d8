#include <bipcount/bipcount.h>

#include <bipcount/cycle_index.hpp>
#include <bipcount/oracle.hpp>
#include <bipcount/polya.hpp>
#include <bipcount/table.hpp>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

using namespace bipcount;

struct bipc_number {
  Rational value;
  std::string text;
  std::string decimal;
};

struct bipc_table {
  std::vector<TableRow> rows;
  std::vector<std::string> strings;  // count, lower, upper per row
};

namespace {

thread_local std::string last_error;

bipc_status fail(bipc_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
bipc_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return BIPC_OK;
  } catch (const RegimeError& e) {
    return fail(BIPC_ERR_REGIME, e.what());
  } catch (const CapExceeded& e) {
    return fail(BIPC_ERR_CAP_EXCEEDED, e.what());
  } catch (const ContractViolation& e) {
    return fail(BIPC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BIPC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BIPC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BIPC_ERR_INTERNAL, "unknown error");
  }
}

bipc_number* wrap(Rational value) {
  auto* x = new bipc_number{std::move(value), {}, {}};
  x->text = to_string(x->value);
  return x;
}

bipc_number* wrap(const Integer& value) { return wrap(Rational(value)); }

CycleType type_from(const unsigned* parts, size_t nparts) {
  if (nparts > 0 && parts == nullptr) throw ContractViolation("parts is null");
  return CycleType::from_parts(std::vector<unsigned>(parts, parts + nparts));
}

#define BIPC_REQUIRE(ptr)                                                  \
  do {                                                                     \
    if ((ptr) == nullptr) return fail(BIPC_ERR_INVALID_ARGUMENT, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* bipc_version(void) { return "0.1.0"; }

const char* bipc_status_string(bipc_status status) {
  switch (status) {
    case BIPC_OK: return "ok";
    case BIPC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BIPC_ERR_REGIME: return "regime violation";
    case BIPC_ERR_CAP_EXCEEDED: return "size cap exceeded";
    case BIPC_ERR_OUT_OF_RANGE: return "index out of range";
    case BIPC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bipc_last_error(void) { return last_error.c_str(); }

void bipc_number_free(bipc_number* x) { delete x; }

const char* bipc_number_str(const bipc_number* x) { return x ? x->text.c_str() : ""; }

int bipc_number_is_integer(const bipc_number* x) { return x && x->value.get_den() == 1; }

double bipc_number_to_double(const bipc_number* x) { return x ? x->value.get_d() : std::nan(""); }

double bipc_number_ln(const bipc_number* x) { return x ? ln(x->value) : std::nan(""); }

int bipc_number_cmp(const bipc_number* a, const bipc_number* b) {
  if (!a || !b) return 0;
  return cmp(a->value, b->value);
}

const char* bipc_number_decimal(bipc_number* x, unsigned digits) {
  if (!x) return "";
  x->decimal = to_decimal(x->value, digits);
  return x->decimal.c_str();
}

bipc_status bipc_count(unsigned n, unsigned r, bipc_number** out) {
  return bipc_count_ex(n, r, nullptr, out);
}

bipc_status bipc_count_ex(unsigned n, unsigned r, const bipc_count_options* options,
                          bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] {
    CountOptions opts;
    if (options) {
      opts.workers = options->workers;
      opts.inject_gcd_fault = options->inject_gcd_fault != 0;
      if (options->type_pairs) opts.method = CountMethod::kTypePairs;
    }
    *out = wrap(count_matrix_classes(n, r, opts).count);
  });
}

bipc_status bipc_lower_bound(unsigned n, unsigned r, bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] { *out = wrap(lower_bound(n, r)); });
}

bipc_status bipc_upper_bound(unsigned n, unsigned r, bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] { *out = wrap(upper_bound(n, r)); });
}

bipc_status bipc_bounds(unsigned n, unsigned r, bipc_number** lower, bipc_number** upper,
                        bipc_regime* regime) {
  BIPC_REQUIRE(lower);
  BIPC_REQUIRE(upper);
  return guarded([&] {
    BoundsResult b = bounds(n, r);
    *lower = wrap(std::move(b.lower));
    *upper = wrap(std::move(b.upper));
    if (regime) {
      switch (b.regime) {
        case Regime::kRowsFewer: *regime = BIPC_REGIME_ROWS_FEWER; break;
        case Regime::kSquare: *regime = BIPC_REGIME_SQUARE; break;
        case Regime::kRowsMore: *regime = BIPC_REGIME_ROWS_MORE; break;
      }
    }
  });
}

bipc_status bipc_uniform_closed_form(unsigned r, unsigned long c, bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] { *out = wrap(uniform_substitution_closed_form(r, Integer(c))); });
}

bipc_status bipc_term_value(unsigned n, unsigned r, const unsigned* parts, size_t nparts,
                            bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] { *out = wrap(general_term_value(n, r, type_from(parts, nparts))); });
}

bipc_status bipc_second_term_value(unsigned n, unsigned r, bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] { *out = wrap(second_term_value(n, r)); });
}

bipc_status bipc_class_size(const unsigned* parts, size_t nparts, bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] { *out = wrap(permutation_count(type_from(parts, nparts))); });
}

bipc_status bipc_cycle_type_count(unsigned n, size_t* count) {
  BIPC_REQUIRE(count);
  return guarded([&] { *count = generate_cycle_types(n).size(); });
}

bipc_status bipc_cycle_type(unsigned n, size_t index, unsigned* parts, size_t cap,
                            size_t* nparts) {
  BIPC_REQUIRE(nparts);
  const std::vector<CycleType> types = generate_cycle_types(n);
  if (index >= types.size()) return fail(BIPC_ERR_OUT_OF_RANGE, "cycle type index out of range");
  const std::vector<unsigned> p = types[index].parts();
  *nparts = p.size();
  if (p.size() > cap) return fail(BIPC_ERR_OUT_OF_RANGE, "parts buffer too small");
  if (!p.empty()) {
    BIPC_REQUIRE(parts);
    std::copy(p.begin(), p.end(), parts);
  }
  last_error.clear();
  return BIPC_OK;
}

bipc_status bipc_orbit_count(unsigned n, unsigned r, unsigned max_cells, bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] { *out = wrap(oracle::orbit_count(n, r, max_cells)); });
}

bipc_status bipc_burnside_count(unsigned n, unsigned r, bipc_number** out) {
  BIPC_REQUIRE(out);
  return guarded([&] { *out = wrap(oracle::burnside_count_explicit(n, r)); });
}

bipc_status bipc_cycle_index_text(unsigned n, unsigned r, char** out) {
  BIPC_REQUIRE(out);
  return guarded([&] {
    const CycleIndex z = r == 0 ? cycle_index_symmetric(n)
                                : boxtimes(cycle_index_symmetric(n), cycle_index_symmetric(r));
    const std::string text = z.to_text();
    char* s = static_cast<char*>(std::malloc(text.size() + 1));
    if (!s) throw std::bad_alloc();
    std::memcpy(s, text.c_str(), text.size() + 1);
    *out = s;
  });
}

void bipc_string_free(char* s) { std::free(s); }

bipc_status bipc_table_create(unsigned max, unsigned workers, bipc_table** out) {
  BIPC_REQUIRE(out);
  return guarded([&] {
    auto table = std::make_unique<bipc_table>();
    table->rows = build_table(max, workers);
    table->strings.reserve(3 * table->rows.size());
    for (const TableRow& row : table->rows) {
      table->strings.push_back(to_string(row.count));
      table->strings.push_back(to_string(row.lower));
      table->strings.push_back(to_string(row.upper));
    }
    *out = table.release();
  });
}

size_t bipc_table_size(const bipc_table* table) { return table ? table->rows.size() : 0; }

bipc_status bipc_table_row_at(const bipc_table* table, size_t index, bipc_table_row* row) {
  BIPC_REQUIRE(table);
  BIPC_REQUIRE(row);
  if (index >= table->rows.size()) return fail(BIPC_ERR_OUT_OF_RANGE, "table row out of range");
  const TableRow& src = table->rows[index];
  row->n = src.n;
  row->r = src.r;
  row->ln_lower = src.ln_lower;
  row->ln_exact = src.ln_exact;
  row->ln_upper = src.ln_upper;
  row->count = table->strings[3 * index].c_str();
  row->lower = table->strings[3 * index + 1].c_str();
  row->upper = table->strings[3 * index + 2].c_str();
  last_error.clear();
  return BIPC_OK;
}

void bipc_table_free(bipc_table* table) { delete table; }

}  // extern "C"
