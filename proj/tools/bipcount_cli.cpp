// bipcount: class counts of n x r binary matrices under row/column
// permutations, with bounds, per-type terms, log tables and oracle checks.
//
// Exit codes: 0 success, 1 verification mismatch (or internal failure),
// 2 usage error.

#include <bipcount/bipcount.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct NumberDeleter {
  void operator()(bipc_number* x) const { bipc_number_free(x); }
};
using Number = std::unique_ptr<bipc_number, NumberDeleter>;

struct TableDeleter {
  void operator()(bipc_table* t) const { bipc_table_free(t); }
};

struct CliError {
  int exit_code;
  std::string message;
};

void check(bipc_status status) {
  if (status == BIPC_OK) return;
  const int code = status == BIPC_ERR_INTERNAL ? kExitMismatch : kExitUsage;
  throw CliError{code, std::string(bipc_status_string(status)) + ": " + bipc_last_error()};
}

template <typename Fn>
Number call(Fn&& fn) {
  bipc_number* raw = nullptr;
  check(fn(&raw));
  return Number(raw);
}

unsigned workers_from_env() {
  const char* env = std::getenv("BIPCOUNT_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long w = std::strtoul(env, &end, 10);
  if (*end != '\0' || w == 0) {
    throw CliError{kExitUsage, std::string("BIPCOUNT_WORKERS must be a positive integer, got '") +
                                   env + "'"};
  }
  return static_cast<unsigned>(w);
}

std::vector<unsigned> parse_parts(const std::string& spec) {
  std::vector<unsigned> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0) {
      throw CliError{kExitUsage, "malformed partition spec '" + spec + "'"};
    }
    parts.push_back(static_cast<unsigned>(v));
  }
  if (parts.empty()) throw CliError{kExitUsage, "empty partition spec"};
  return parts;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

const char* regime_label(bipc_regime regime) {
  switch (regime) {
    case BIPC_REGIME_ROWS_FEWER: return "n<r";
    case BIPC_REGIME_SQUARE: return "n=r";
    case BIPC_REGIME_ROWS_MORE: return "n>r";
  }
  return "?";
}

int cmd_count(unsigned n, unsigned r, bool as_json) {
  Number c = call([&](bipc_number** out) {
    bipc_count_options opts{workers_from_env(), 0, 0};
    return bipc_count_ex(n, r, &opts, out);
  });
  const char* kind = n == r ? "matrix classes" : "unlabeled bipartite graphs";
  if (as_json) {
    json j = {{"n", n}, {"r", r}, {"kind", kind}, {"count", bipc_number_str(c.get())},
              {"ln_count", bipc_number_ln(c.get())}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n: " << n << "\nr: " << r << "\nkind: " << kind
              << "\ncount: " << bipc_number_str(c.get())
              << "\nln_count: " << fixed(bipc_number_ln(c.get()), 12) << "\n";
  }
  return kExitOk;
}

int cmd_bounds(unsigned n, unsigned r, unsigned digits, bool as_json) {
  bipc_number* lo = nullptr;
  bipc_number* hi = nullptr;
  bipc_regime regime{};
  check(bipc_bounds(n, r, &lo, &hi, &regime));
  Number lower(lo), upper(hi);
  if (as_json) {
    json j = {{"n", n},
              {"r", r},
              {"regime", regime_label(regime)},
              {"lower", bipc_number_str(lower.get())},
              {"upper", bipc_number_str(upper.get())},
              {"lower_decimal", bipc_number_decimal(lower.get(), digits)},
              {"upper_decimal", bipc_number_decimal(upper.get(), digits)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n: " << n << "\nr: " << r << "\nregime: " << regime_label(regime)
              << "\nlower: " << bipc_number_str(lower.get())
              << "\nlower_decimal: " << bipc_number_decimal(lower.get(), digits)
              << "\nupper: " << bipc_number_str(upper.get())
              << "\nupper_decimal: " << bipc_number_decimal(upper.get(), digits) << "\n";
  }
  return kExitOk;
}

int cmd_term(unsigned n, unsigned r, const std::optional<std::string>& type_spec, bool as_json) {
  std::vector<std::vector<unsigned>> types;
  if (type_spec) {
    types.push_back(parse_parts(*type_spec));
  } else {
    std::size_t count = 0;
    check(bipc_cycle_type_count(n, &count));
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<unsigned> parts(n);
      std::size_t len = 0;
      check(bipc_cycle_type(n, i, parts.data(), parts.size(), &len));
      parts.resize(len);
      types.push_back(std::move(parts));
    }
  }

  json rows = json::array();
  std::ostringstream text;
  text << "type,class_size,term_value,term_decimal\n";
  for (const auto& parts : types) {
    Number value = call([&](bipc_number** out) {
      return bipc_term_value(n, r, parts.data(), parts.size(), out);
    });
    Number size = call([&](bipc_number** out) {
      return bipc_class_size(parts.data(), parts.size(), out);
    });
    std::string spec;
    for (unsigned p : parts) spec += (spec.empty() ? "" : ",") + std::to_string(p);
    const std::string decimal = bipc_number_decimal(value.get(), 6);
    rows.push_back({{"type", spec},
                    {"class_size", bipc_number_str(size.get())},
                    {"term_value", bipc_number_str(value.get())},
                    {"term_decimal", decimal}});
    text << '"' << spec << "\"," << bipc_number_str(size.get()) << ','
         << bipc_number_str(value.get()) << ',' << decimal << "\n";
  }
  if (as_json) {
    std::cout << json{{"n", n}, {"r", r}, {"terms", rows}}.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return kExitOk;
}

int cmd_table(unsigned max, const std::string& format, const std::string& out_path) {
  bipc_table* raw = nullptr;
  check(bipc_table_create(max, workers_from_env(), &raw));
  std::unique_ptr<bipc_table, TableDeleter> table(raw);

  std::ostringstream body;
  const std::size_t size = bipc_table_size(table.get());
  if (format == "csv") {
    body << "n,r,ln_lower,ln_exact,ln_upper\n";
    for (std::size_t i = 0; i < size; ++i) {
      bipc_table_row row{};
      check(bipc_table_row_at(table.get(), i, &row));
      body << row.n << ',' << row.r << ',' << fixed(row.ln_lower, 12) << ','
           << fixed(row.ln_exact, 12) << ',' << fixed(row.ln_upper, 12) << "\n";
    }
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < size; ++i) {
      bipc_table_row row{};
      check(bipc_table_row_at(table.get(), i, &row));
      rows.push_back({{"n", row.n},
                      {"r", row.r},
                      {"ln_lower", row.ln_lower},
                      {"ln_exact", row.ln_exact},
                      {"ln_upper", row.ln_upper},
                      {"count", row.count},
                      {"lower", row.lower},
                      {"upper", row.upper}});
    }
    body << rows.dump(2) << "\n";
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw CliError{kExitUsage, "cannot open '" + out_path + "' for writing"};
    out << body.str();
  }
  return kExitOk;
}

int cmd_verify(unsigned max_cells, unsigned burnside_n, unsigned burnside_r, bool inject_fault) {
  bipc_count_options opts{workers_from_env(), inject_fault ? 1 : 0, 0};
  unsigned checks = 0;
  unsigned mismatches = 0;

  auto report = [&](const char* oracle, unsigned n, unsigned r, const bipc_number* polya,
                    const bipc_number* expected) {
    ++checks;
    const bool ok = bipc_number_cmp(polya, expected) == 0;
    if (!ok) ++mismatches;
    std::cout << (ok ? "PASS " : "FAIL ") << oracle << " n=" << n << " r=" << r
              << " polya=" << bipc_number_str(polya) << " oracle=" << bipc_number_str(expected)
              << "\n";
  };

  for (unsigned cells = 1; cells <= max_cells; ++cells) {
    for (unsigned n = 1; n <= cells; ++n) {
      if (cells % n != 0) continue;
      const unsigned r = cells / n;
      Number polya = call([&](bipc_number** out) { return bipc_count_ex(n, r, &opts, out); });
      Number orbits = call([&](bipc_number** out) { return bipc_orbit_count(n, r, max_cells, out); });
      report("orbit", n, r, polya.get(), orbits.get());
    }
  }
  for (unsigned n = 1; n <= burnside_n; ++n) {
    for (unsigned r = 1; r <= burnside_r; ++r) {
      Number polya = call([&](bipc_number** out) { return bipc_count_ex(n, r, &opts, out); });
      Number explicit_count = call([&](bipc_number** out) { return bipc_burnside_count(n, r, out); });
      report("burnside", n, r, polya.get(), explicit_count.get());
    }
  }
  std::cout << "verify: " << checks << " checks, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_cycle_index(unsigned n, unsigned r) {
  char* text = nullptr;
  check(bipc_cycle_index_text(n, r, &text));
  std::cout << text;
  bipc_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts and bounds for n x r binary matrices up to row/column permutation"};
  app.require_subcommand(1);

  unsigned n = 0, r = 0;
  bool as_json = false;

  auto* count = app.add_subcommand("count", "Exact class count via the cycle-index double sum");
  count->add_option("n", n, "rows")->required()->check(CLI::PositiveNumber);
  count->add_option("r", r, "columns")->required()->check(CLI::PositiveNumber);
  count->add_flag("--json", as_json, "emit JSON");

  unsigned digits = 6;
  auto* bnds = app.add_subcommand("bounds", "Exact lower/upper bounds");
  bnds->add_option("n", n, "rows")->required()->check(CLI::PositiveNumber);
  bnds->add_option("r", r, "columns")->required()->check(CLI::PositiveNumber);
  bnds->add_option("--digits", digits, "fractional digits in decimal output")->check(CLI::Range(0u, 60u));
  bnds->add_flag("--json", as_json, "emit JSON");

  std::optional<std::string> type_spec;
  auto* term = app.add_subcommand("term", "Per-row-type contributions to the count");
  term->add_option("n", n, "rows")->required()->check(CLI::PositiveNumber);
  term->add_option("r", r, "columns")->required()->check(CLI::PositiveNumber);
  term->add_option("--type", type_spec, "row cycle type as comma-separated parts, e.g. 3,1,1");
  term->add_flag("--json", as_json, "emit JSON");

  unsigned max = 15;
  std::string format = "csv";
  std::string out_path;
  auto* table = app.add_subcommand("table", "ln of count and bounds for 1 <= n < r <= max");
  table->add_option("--max", max, "largest r")->check(CLI::Range(2u, 20u));
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "write to file instead of stdout");

  unsigned max_cells = 20, burnside_n = 4, burnside_r = 5;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Check the cycle-index count against brute-force oracles");
  verify->add_option("--max-cells", max_cells, "orbit search over all n*r <= C")->check(CLI::Range(1u, 24u));
  verify->add_option("--burnside-n", burnside_n, "explicit Burnside up to N rows")->check(CLI::Range(0u, 6u));
  verify->add_option("--burnside-r", burnside_r, "explicit Burnside up to R columns")->check(CLI::Range(0u, 7u));
  verify->add_flag("--inject-gcd-fault", inject_fault, "corrupt the gcd table (self-test)")
      ->group("");

  auto* zdump = app.add_subcommand("cycle-index", "Dump Z(S_n), or Z(S_n) boxtimes Z(S_r) if r is given");
  unsigned zr = 0;
  zdump->add_option("n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  zdump->add_option("r", zr, "second degree")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(n, r, as_json);
    if (*bnds) return cmd_bounds(n, r, digits, as_json);
    if (*term) return cmd_term(n, r, type_spec, as_json);
    if (*table) return cmd_table(max, format, out_path);
    if (*verify) return cmd_verify(max_cells, burnside_n, burnside_r, inject_fault);
    if (*zdump) return cmd_cycle_index(n, zr);
  } catch (const CliError& e) {
    std::cerr << "bipcount: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitUsage;
}
