#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

#include "bipspec/bounds.hpp"
#include "bipspec/families.hpp"
#include "bipspec/graph.hpp"

using namespace bipspec;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("closed-form bound values") {
  CHECK(stevanovic_bound(6, 3) == doctest::Approx(1.0 / 1836.0).epsilon(1e-14));
  CHECK(stevanovic_bound(2, 1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(cioaba_bound(6, 3) == doctest::Approx(1.0 / 18.0).epsilon(1e-14));
  CHECK(cioaba_bound(2, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(new_bipartite_bound(6, 3) == doctest::Approx(1.0 / 23.0).epsilon(1e-14));
  CHECK(new_bipartite_bound(8, 4) == doctest::Approx(1.0 / 32.0).epsilon(1e-14));
  CHECK(sqrt_size_bound(6) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  CHECK(sqrt_size_bound(0) == 0.0);

  CHECK_THROWS_AS(stevanovic_bound(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(stevanovic_bound(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(cioaba_bound(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(cioaba_bound(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(new_bipartite_bound(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(new_bipartite_bound(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_size_bound(-1), std::invalid_argument);
}

TEST_CASE("the bipartite bound strictly dominates stevanovic") {
  for (int n = 4; n <= 1000; ++n) {
    for (int delta = 2; delta < n; ++delta) {
      if (new_bipartite_bound(n, delta) <= stevanovic_bound(n, delta)) {
        CAPTURE(n);
        CAPTURE(delta);
        FAIL_CHECK("dominance violated");
      }
    }
  }
  CHECK(true);  // reached without a violation
}

TEST_CASE("lemma5 sandwich constants") {
  Lemma5Bounds b6 = lemma5_bounds(6);
  CHECK(b6.lower == doctest::Approx(0.19806226419516174).epsilon(1e-13));
  CHECK(b6.upper == doctest::Approx(1.205771365940052).epsilon(1e-13));
  Lemma5Bounds b12 = lemma5_bounds(12);
  CHECK(b12.lower == doctest::Approx(0.05811636514789594).epsilon(1e-13));
  CHECK(b12.upper == doctest::Approx(0.16355603381247216).epsilon(1e-13));

  CHECK_THROWS_AS(lemma5_bounds(7), std::invalid_argument);
  CHECK_THROWS_AS(lemma5_bounds(4), std::invalid_argument);
  CHECK_THROWS_AS(lemma5_bounds(5), std::invalid_argument);
}

TEST_CASE("scaled lemma5 bounds bracket pi^2") {
  double pi2 = std::numbers::pi * std::numbers::pi;
  for (int n : {6, 10, 50, 100, 1000, 10000}) {
    CAPTURE(n);
    Lemma5Bounds b = lemma5_bounds(n);
    double n2 = static_cast<double>(n) * n;
    CHECK(n2 * b.lower < pi2);
    CHECK(n2 * b.upper > pi2);
  }
  // Both ends close in on pi^2.
  Lemma5Bounds far = lemma5_bounds(10000);
  CHECK(1e8 * far.lower == doctest::Approx(pi2).epsilon(1e-3));
  CHECK(1e8 * far.upper == doctest::Approx(pi2).epsilon(2e-2));
}

TEST_CASE("bound report on reference graphs") {
  BoundReport b6 = bound_report(b_graph(6));
  CHECK(b6.n == 6);
  CHECK(b6.delta == 3);
  CHECK(b6.m == 8);
  CHECK(b6.rho == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(b6.gap == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-11));
  REQUIRE(b6.new_bound.has_value());
  CHECK(*b6.new_bound == doctest::Approx(1.0 / 23.0).epsilon(1e-14));
  REQUIRE(b6.lemma5_lower.has_value());
  REQUIRE(b6.lemma5_upper.has_value());
  CHECK(b6.stevanovic_ok);
  CHECK(b6.cioaba_ok);
  CHECK(b6.new_bound_ok);
  CHECK(b6.sqrt_m_ok);
  CHECK(b6.lemma5_ok);
  CHECK(b6.all_ok);

  BoundReport h84 = bound_report(h_graph(8, 4));
  CHECK(h84.gap == doctest::Approx(4.0 - 3.7912878474779).epsilon(1e-9));
  CHECK(h84.gap > 1.0 / 32.0);
  CHECK_FALSE(h84.lemma5_lower.has_value());
  CHECK_FALSE(h84.lemma5_upper.has_value());
  CHECK(h84.lemma5_ok);  // vacuously
  CHECK(h84.all_ok);

  BoundReport p5 = bound_report(path_graph(5));
  CHECK(p5.gap == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-11));
  CHECK(p5.gap > stevanovic_bound(5, 2));
  REQUIRE(p5.new_bound.has_value());
  CHECK(p5.all_ok);

  // rho = sqrt(m) holds with equality on complete bipartite graphs; the
  // report must not flag honest equality.
  BoundReport k23 = bound_report(complete_bipartite(2, 3));
  CHECK(k23.rho == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
  CHECK(k23.sqrt_m_ok);
  CHECK(k23.all_ok);

  CHECK_THROWS_AS(bound_report(complete_bipartite(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(bound_report(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})),
                  std::invalid_argument);
}

TEST_CASE("csv shape") {
  std::string header = bound_report_csv_header();
  std::string row = bound_report_csv_row(bound_report(b_graph(6)));
  auto commas = [](const std::string& s) {
    int c = 0;
    for (char ch : s) {
      if (ch == ',') ++c;
    }
    return c;
  };
  CHECK(commas(header) == 17);
  CHECK(commas(row) == 17);
  CHECK(header.substr(0, 2) == "n,");
  CHECK(row.substr(0, 6) == "6,3,8,");
  CHECK(row.find("true") != std::string::npos);

  // Inapplicable bounds serialize as empty cells.
  std::string prow = bound_report_csv_row(bound_report(path_graph(5)));
  CHECK(prow.find(",,") != std::string::npos);  // empty lemma5 cells
}

TEST_CASE("json round trip") {
  for (const Graph& g : {b_graph(8), h_graph(9, 4), path_graph(6)}) {
    BoundReport a = bound_report(g);
    BoundReport b = bound_report_from_json(bound_report_json(a));
    CHECK(a.n == b.n);
    CHECK(a.delta == b.delta);
    CHECK(a.m == b.m);
    CHECK(a.diam == b.diam);
    CHECK(a.rho == b.rho);
    CHECK(a.gap == b.gap);
    CHECK(a.stevanovic == b.stevanovic);
    CHECK(a.cioaba == b.cioaba);
    CHECK(a.new_bound == b.new_bound);
    CHECK(a.sqrt_m == b.sqrt_m);
    CHECK(a.lemma5_lower == b.lemma5_lower);
    CHECK(a.lemma5_upper == b.lemma5_upper);
    CHECK(a.stevanovic_ok == b.stevanovic_ok);
    CHECK(a.cioaba_ok == b.cioaba_ok);
    CHECK(a.new_bound_ok == b.new_bound_ok);
    CHECK(a.sqrt_m_ok == b.sqrt_m_ok);
    CHECK(a.lemma5_ok == b.lemma5_ok);
    CHECK(a.all_ok == b.all_ok);
  }
  CHECK_THROWS(bound_report_from_json("not json"));
}

TEST_SUITE_END();
