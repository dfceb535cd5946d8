#include <bipcount/cycle_index.hpp>
#include <bipcount/oracle.hpp>

#include <doctest.h>

#include <random>
#include <vector>

using namespace bipcount;

namespace {

Monomial mono(std::vector<Monomial::Entry> e) { return Monomial(std::move(e)); }

Rational q(long num, long den) {
  Rational x(num, den);
  x.canonicalize();
  return x;
}

}  // namespace

TEST_CASE("monomials are canonical") {
  Monomial m({{2, 1}, {1, 0}, {2, 2}, {5, 1}});
  CHECK(m.entries() == std::vector<Monomial::Entry>{{2, 3}, {5, 1}});
  CHECK(m.exponent(1) == 0);
  CHECK(m.weight() == 11);
  CHECK(Monomial().is_constant());
  CHECK_THROWS_AS(Monomial({{0, 1}}), ContractViolation);
}

TEST_CASE("boxtimes_monomial") {
  CHECK(boxtimes_monomial(mono({{1, 2}}), mono({{2, 1}})) == mono({{2, 2}}));
  CHECK(boxtimes_monomial(mono({{1, 3}, {2, 1}}), mono({{3, 1}})) == mono({{3, 3}, {6, 1}}));
  CHECK(boxtimes_monomial(mono({{2, 1}}), mono({{2, 1}})) == mono({{2, 2}}));
}

TEST_CASE("boxtimes_monomial is symmetric and multiplies weight") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<unsigned> var(1, 9), exp(1, 4), len(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    auto random_mono = [&] {
      std::vector<Monomial::Entry> e;
      for (unsigned i = len(rng); i > 0; --i) e.emplace_back(var(rng), exp(rng));
      return Monomial(std::move(e));
    };
    const Monomial a = random_mono();
    const Monomial b = random_mono();
    const Monomial ab = boxtimes_monomial(a, b);
    CHECK(ab == boxtimes_monomial(b, a));
    CHECK(ab.weight() == a.weight() * b.weight());
  }
}

TEST_CASE("Z(S_3), Z(S_4) and Z(S_0)") {
  const CycleIndex z3 = cycle_index_symmetric(3);
  CHECK(z3.size() == 3);
  CHECK(z3.degree() == 3);
  CHECK(z3.coefficient(mono({{1, 3}})) == q(1, 6));
  CHECK(z3.coefficient(mono({{1, 1}, {2, 1}})) == q(1, 2));
  CHECK(z3.coefficient(mono({{3, 1}})) == q(1, 3));

  const CycleIndex z4 = cycle_index_symmetric(4);
  CHECK(z4.size() == 5);
  CHECK(z4.coefficient(mono({{1, 4}})) == q(1, 24));
  CHECK(z4.coefficient(mono({{1, 2}, {2, 1}})) == q(6, 24));
  CHECK(z4.coefficient(mono({{2, 2}})) == q(3, 24));
  CHECK(z4.coefficient(mono({{1, 1}, {3, 1}})) == q(8, 24));
  CHECK(z4.coefficient(mono({{4, 1}})) == q(6, 24));

  const CycleIndex z0 = cycle_index_symmetric(0);
  CHECK(z0 == CycleIndex::one());
  CHECK(z0.coefficient(Monomial{}) == 1);
}

TEST_CASE("recurrence matches partition construction") {
  CHECK(cycle_index_by_recurrence(0) == CycleIndex::one());
  const CycleIndex z1 = cycle_index_by_recurrence(1);
  CHECK(z1.size() == 1);
  CHECK(z1.coefficient(mono({{1, 1}})) == 1);
  for (unsigned r = 0; r <= 25; ++r) {
    CAPTURE(r);
    const CycleIndex z = cycle_index_symmetric(r);
    CHECK(cycle_index_by_recurrence(r) == z);
    CHECK(evaluate_uniform(z, 1) == 1);
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate_uniform(cycle_index_symmetric(3), 4) == 20);
  CHECK(evaluate_uniform(cycle_index_symmetric(4), 2) == 5);
  for (unsigned n = 0; n <= 20; ++n) CHECK(evaluate_uniform(cycle_index_symmetric(n), 1) == 1);

  const std::vector<Rational> values = {2, q(1, 2), 3};
  // (1/6)(8) + (1/2)(2 * 1/2) + (1/3)(3) = 4/3 + 1/2 + 1
  CHECK(evaluate(cycle_index_symmetric(3), values) == q(17, 6));
  CHECK(evaluate(cycle_index_symmetric(3), [](unsigned) -> std::optional<Rational> { return 0; }) == 0);
}

TEST_CASE("missing assignment is a contract violation") {
  const std::vector<Rational> short_values = {2, 2};
  CHECK_THROWS_AS(evaluate(cycle_index_symmetric(3), short_values), ContractViolation);
}

TEST_CASE("uniform evaluation is stars and bars") {
  for (unsigned r = 0; r <= 20; ++r) {
    const CycleIndex z = cycle_index_symmetric(r);
    for (unsigned c : {1u, 2u, 4u, 8u, 16u}) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(evaluate_uniform(z, c) == binomial(r + c - 1, r));
    }
  }
}

TEST_CASE("boxtimes identities") {
  for (unsigned r = 1; r <= 7; ++r) {
    CHECK(boxtimes(cycle_index_symmetric(1), cycle_index_symmetric(r)) == cycle_index_symmetric(r));
  }
  CycleIndex scaled = CycleIndex::one();
  scaled.scale(3);
  CycleIndex expect = cycle_index_symmetric(4);
  expect.scale(3);
  CHECK(boxtimes(scaled, cycle_index_symmetric(4)) == expect);
  CHECK(boxtimes(cycle_index_symmetric(4), scaled) == expect);
}

TEST_CASE("product cycle index counts matrix classes") {
  const CycleIndex z22 = boxtimes(cycle_index_symmetric(2), cycle_index_symmetric(2));
  CHECK(evaluate_uniform(z22, 2) == 7);
  CHECK(evaluate_uniform(z22, 2) == Rational(oracle::orbit_count(2, 2)));
  const CycleIndex z23 = boxtimes(cycle_index_symmetric(2), cycle_index_symmetric(3));
  CHECK(evaluate_uniform(z23, 2) == 13);
  CHECK(evaluate_uniform(z23, 2) == Rational(oracle::orbit_count(2, 3)));
}

TEST_CASE("product cycle index: weight and coefficient mass") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned r = 1; r <= 8; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const CycleIndex z = boxtimes(cycle_index_symmetric(n), cycle_index_symmetric(r));
      CHECK(z.degree() == n * r);
      for (const auto& [m, c] : z.terms()) {
        CHECK(m.weight() == n * r);
        CHECK(sgn(c) > 0);
      }
      CHECK(z.coefficient_sum() == 1);
    }
  }
}

TEST_CASE("add_term rejects the wrong weight and drops cancelled terms") {
  CycleIndex z(3);
  CHECK_THROWS_AS(z.add_term(mono({{1, 2}}), 1), ContractViolation);
  z.add_term(mono({{3, 1}}), q(1, 2));
  z.add_term(mono({{3, 1}}), q(-1, 2));
  CHECK(z.size() == 0);
}

TEST_CASE("text dump orders identity term first") {
  CHECK(cycle_index_symmetric(3).to_text() == "1/6 x1^3\n1/2 x1^1 x2^1\n1/3 x3^1\n");
  CHECK(CycleIndex::one().to_text() == "1/1\n");
}
