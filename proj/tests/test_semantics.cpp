#include <optional>

#include "doctest.h"
#include "luk/schema.hpp"
#include "luk/semantics.hpp"
#include "support/generators.hpp"

using luk::Assignment;
using luk::Connective;
using luk::Formula;
using luk::Rational;

namespace {

Rational ev(const std::string& text, const Assignment& a) {
  return luk::eval(luk::parse_formula(text), a);
}

}  // namespace

TEST_CASE("eval matches the compositional semantics") {
  CHECK(ev("X1 -> X1", {{1, Rational(2, 3)}}) == 1);
  CHECK(ev("X1 (+) X1", {{1, Rational(3, 10)}}) == Rational(3, 5));
  CHECK(ev("(~X1 -> X1) /\\ (X1 -> ~X1)", {{1, Rational(1, 2)}}) == 1);
  CHECK(ev("0", {}) == 0);
  CHECK(ev("1", {}) == 1);
}

TEST_CASE("eval rejects unassigned variables and out-of-range values") {
  CHECK_THROWS_AS(ev("X1 -> X2", {{1, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(ev("X1", {{1, Rational(3, 2)}}), std::invalid_argument);
}

TEST_CASE("all ten connective semantics hold pointwise") {
  luk::testing::Rng rng(101);
  const std::vector<unsigned> vars{1, 2, 3};
  for (int i = 0; i < 200; ++i) {
    Formula a = luk::testing::random_formula(rng, vars, 4);
    Formula b = luk::testing::random_formula(rng, vars, 4);
    Assignment w;
    for (unsigned v : vars) w[v] = luk::testing::random_rational(rng, 8);
    const Rational va = luk::eval(a, w);
    const Rational vb = luk::eval(b, w);

    CHECK(luk::eval(Formula::bottom(), w) == 0);
    CHECK(luk::eval(luk::expand(Connective::Verum), w) == 1);
    CHECK(luk::eval(Formula::negate(a), w) == 1 - va);
    CHECK(luk::eval(Formula::implies(a, b), w) == std::min(Rational(1), Rational(1 - (va - vb))));
    CHECK(luk::eval(luk::expand(Connective::Or, a, b), w) == std::max(va, vb));
    CHECK(luk::eval(luk::expand(Connective::And, a, b), w) == std::min(va, vb));
    CHECK(luk::eval(luk::expand(Connective::Iff, a, b), w) ==
          1 - abs(Rational(va - vb)));
    CHECK(luk::eval(luk::expand(Connective::Oplus, a, b), w) ==
          std::min(Rational(1), Rational(va + vb)));
    CHECK(luk::eval(luk::expand(Connective::Odot, a, b), w) ==
          std::max(Rational(0), Rational(va + vb - 1)));
    CHECK(luk::eval(luk::expand(Connective::Ominus, a, b), w) ==
          std::max(Rational(0), Rational(va - vb)));
  }
}

TEST_CASE("double negation is the identity; values stay in [0,1]") {
  luk::testing::Rng rng(102);
  for (int i = 0; i < 200; ++i) {
    Formula f = luk::testing::random_formula(rng, {1, 2}, 5);
    Assignment w{{1, luk::testing::random_rational(rng, 10)},
                 {2, luk::testing::random_rational(rng, 10)}};
    Rational v = luk::eval(f, w);
    CHECK(luk::in_unit_interval(v));
    CHECK(luk::eval(Formula::negate(Formula::negate(f)), w) == v);
  }
}

TEST_CASE("farey_sequence is ascending and complete") {
  std::vector<Rational> f4 = luk::farey_sequence(4);
  std::vector<Rational> expected{Rational(0),    Rational(1, 4), Rational(1, 3),
                                 Rational(1, 2), Rational(2, 3), Rational(3, 4),
                                 Rational(1)};
  CHECK(f4 == expected);
  CHECK(luk::farey_sequence(1) == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(luk::farey_sequence(30).size() == 279);
  CHECK_THROWS_AS(luk::farey_sequence(0), std::invalid_argument);
}

TEST_CASE("falsify finds the first counterexample in grid order") {
  auto hit = luk::falsify(luk::parse_formula("X1 \\/ ~X1"), 2);
  REQUIRE(hit.has_value());
  CHECK(hit->assignment.at(1) == Rational(1, 2));
  CHECK(hit->value == Rational(1, 2));

  CHECK_FALSE(luk::falsify(luk::parse_formula("X1 -> (X2 -> X1)"), 20).has_value());

  auto hit2 = luk::falsify(luk::parse_formula("X1 (+) X1 -> X1"), 4);
  REQUIRE(hit2.has_value());
  CHECK(hit2->assignment.at(1) == Rational(1, 4));
  CHECK(hit2->value == Rational(3, 4));
}

TEST_CASE("falsify handles variable-free formulas") {
  auto hit = luk::falsify(luk::parse_formula("0"), 3);
  REQUIRE(hit.has_value());
  CHECK(hit->value == 0);
  CHECK(hit->assignment.empty());
  CHECK_FALSE(luk::falsify(luk::parse_formula("1"), 3).has_value());
}

TEST_CASE("falsify orders assignments with the last variable fastest") {
  // Grid {0,1}^3: the first hit must flip X3 before X2 before X1.
  auto hit = luk::falsify(luk::parse_formula("X3 -> X1 (.) X2"), 1);
  REQUIRE(hit.has_value());
  CHECK(hit->assignment.at(1) == 0);
  CHECK(hit->assignment.at(2) == 0);
  CHECK(hit->assignment.at(3) == 1);
  CHECK(hit->value == 0);
}

TEST_CASE("parallel falsify agrees with the serial reference") {
  luk::testing::Rng rng(103);
  for (int i = 0; i < 120; ++i) {
    Formula f = luk::testing::random_formula(rng, {1, 2}, 4);
    unsigned max_den = 1 + static_cast<unsigned>(i % 5);
    auto parallel = luk::falsify(f, max_den);
    auto serial = luk::falsify_serial(f, max_den);
    REQUIRE(parallel.has_value() == serial.has_value());
    if (parallel) {
      CHECK(parallel->assignment == serial->assignment);
      CHECK(parallel->value == serial->value);
    }
  }
}

TEST_CASE("axiom instances are grid-unfalsifiable (soundness smoke test)") {
  luk::testing::Rng rng(104);
  for (luk::AxiomId id : luk::kAllAxioms) {
    for (int i = 0; i < 20; ++i) {
      luk::Binding binding;
      for (std::size_t m = 0; m < luk::schema_meta_count(id); ++m) {
        binding[m] = luk::testing::random_formula(rng, {1, 2}, 3);
      }
      Formula instance = luk::substitute(luk::axiom_schema(id), binding);
      CAPTURE(luk::print_formula(instance));
      CHECK_FALSE(luk::falsify(instance, 4).has_value());
    }
  }
}
