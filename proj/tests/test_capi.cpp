#include <bipcount/bipcount.h>

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

namespace {

std::string take(bipc_number* x) {
  std::string s = bipc_number_str(x);
  bipc_number_free(x);
  return s;
}

}  // namespace

TEST_CASE("count through the C API") {
  bipc_number* x = nullptr;
  REQUIRE(bipc_count(3, 4, &x) == BIPC_OK);
  CHECK(bipc_number_is_integer(x));
  CHECK(std::abs(bipc_number_ln(x) - std::log(87.0)) < 1e-12);
  CHECK(take(x) == "87");

  bipc_count_options opts{4, 0, 0};
  REQUIRE(bipc_count_ex(2, 3, &opts, &x) == BIPC_OK);
  CHECK(take(x) == "13");
  opts.type_pairs = 1;
  REQUIRE(bipc_count_ex(9, 11, &opts, &x) == BIPC_OK);
  const std::string pairs = take(x);
  REQUIRE(bipc_count(9, 11, &x) == BIPC_OK);
  CHECK(take(x) == pairs);
  opts.type_pairs = 0;

  opts.inject_gcd_fault = 1;
  REQUIRE(bipc_count_ex(2, 3, &opts, &x) == BIPC_OK);
  CHECK(take(x) != "13");
}

TEST_CASE("bounds and regimes") {
  bipc_number *lo = nullptr, *hi = nullptr;
  bipc_regime regime{};
  REQUIRE(bipc_bounds(2, 4, &lo, &hi, &regime) == BIPC_OK);
  CHECK(regime == BIPC_REGIME_ROWS_FEWER);
  CHECK(std::string(bipc_number_decimal(lo, 2)) == "17.50");
  CHECK(bipc_number_cmp(lo, hi) < 0);
  CHECK(take(lo) == "35/2");
  CHECK(take(hi) == "35");

  REQUIRE(bipc_bounds(2, 2, &lo, &hi, &regime) == BIPC_OK);
  CHECK(regime == BIPC_REGIME_SQUARE);
  CHECK(take(lo) == "5/2");
  take(hi);

  bipc_number* x = nullptr;
  CHECK(bipc_lower_bound(3, 3, &x) == BIPC_ERR_REGIME);
  CHECK(std::string(bipc_last_error()).find("n < r") != std::string::npos);
  CHECK(x == nullptr);
  REQUIRE(bipc_upper_bound(3, 4, &x) == BIPC_OK);
  CHECK(take(x) == "110");
  REQUIRE(bipc_uniform_closed_form(3, 4, &x) == BIPC_OK);
  CHECK(take(x) == "20");
}

TEST_CASE("terms and cycle types") {
  bipc_number* x = nullptr;
  const unsigned three[] = {3};
  REQUIRE(bipc_term_value(3, 4, three, 1, &x) == BIPC_OK);
  CHECK(take(x) == "3/2");
  REQUIRE(bipc_second_term_value(3, 4, &x) == BIPC_OK);
  CHECK(take(x) == "29/3");
  const unsigned bad[] = {2, 1};
  CHECK(bipc_term_value(4, 5, bad, 2, &x) == BIPC_ERR_INVALID_ARGUMENT);
  const unsigned zero[] = {0, 3};
  CHECK(bipc_class_size(zero, 2, &x) == BIPC_ERR_INVALID_ARGUMENT);
  const unsigned transposition[] = {2, 1};
  REQUIRE(bipc_class_size(transposition, 2, &x) == BIPC_OK);
  CHECK(take(x) == "3");

  size_t count = 0;
  REQUIRE(bipc_cycle_type_count(5, &count) == BIPC_OK);
  CHECK(count == 7);
  std::vector<unsigned> parts(5);
  size_t len = 0;
  REQUIRE(bipc_cycle_type(5, 1, parts.data(), parts.size(), &len) == BIPC_OK);
  parts.resize(len);
  CHECK(parts == std::vector<unsigned>{2, 1, 1, 1});
  CHECK(bipc_cycle_type(5, 7, parts.data(), 5, &len) == BIPC_ERR_OUT_OF_RANGE);
  unsigned tiny[1];
  CHECK(bipc_cycle_type(5, 0, tiny, 1, &len) == BIPC_ERR_OUT_OF_RANGE);
  CHECK(len == 5);
}

TEST_CASE("oracles through the C API") {
  bipc_number* x = nullptr;
  REQUIRE(bipc_orbit_count(2, 3, 24, &x) == BIPC_OK);
  CHECK(take(x) == "13");
  CHECK(bipc_orbit_count(5, 5, 24, &x) == BIPC_ERR_CAP_EXCEEDED);
  REQUIRE(bipc_burnside_count(2, 2, &x) == BIPC_OK);
  CHECK(take(x) == "7");
  CHECK(bipc_burnside_count(7, 7, &x) == BIPC_ERR_CAP_EXCEEDED);
}

TEST_CASE("null outputs are rejected") {
  CHECK(bipc_count(1, 1, nullptr) == BIPC_ERR_INVALID_ARGUMENT);
  CHECK(bipc_table_row_at(nullptr, 0, nullptr) == BIPC_ERR_INVALID_ARGUMENT);
  CHECK(bipc_cycle_index_text(2, 0, nullptr) == BIPC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cycle index text") {
  char* s = nullptr;
  REQUIRE(bipc_cycle_index_text(2, 2, &s) == BIPC_OK);
  CHECK(std::string(s) == "1/4 x1^4\n3/4 x2^2\n");
  bipc_string_free(s);
}

TEST_CASE("table through the C API") {
  bipc_table* t = nullptr;
  REQUIRE(bipc_table_create(4, 3, &t) == BIPC_OK);
  REQUIRE(bipc_table_size(t) == 6);
  bipc_table_row row{};
  REQUIRE(bipc_table_row_at(t, 3, &row) == BIPC_OK);
  CHECK(row.n == 2);
  CHECK(row.r == 3);
  CHECK(std::string(row.count) == "13");
  CHECK(std::string(row.lower) == "10");
  CHECK(std::string(row.upper) == "20");
  CHECK(std::abs(row.ln_exact - std::log(13.0)) < 1e-12);
  CHECK(bipc_table_row_at(t, 6, &row) == BIPC_ERR_OUT_OF_RANGE);
  bipc_table_free(t);
}
