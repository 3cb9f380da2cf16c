#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "bipspec/bounds.hpp"
#include "bipspec/canonical.hpp"
#include "bipspec/dense.hpp"
#include "bipspec/families.hpp"
#include "bipspec/graph.hpp"
#include "bipspec/spectral.hpp"
#include "test_util.hpp"

using namespace bipspec;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhi = 1.6180339887498949;  // (1 + sqrt 5)/2

double dense_rho(const Graph& g) { return jacobi_eigenvalues(adjacency_matrix(g)).back(); }

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("jacobi on known spectra") {
  auto p4 = jacobi_eigenvalues(adjacency_matrix(path_graph(4)));
  REQUIRE(p4.size() == 4);
  CHECK(p4[0] == doctest::Approx(-kPhi).epsilon(1e-12));
  CHECK(p4[1] == doctest::Approx(-1.0 / kPhi).epsilon(1e-12));
  CHECK(p4[2] == doctest::Approx(1.0 / kPhi).epsilon(1e-12));
  CHECK(p4[3] == doctest::Approx(kPhi).epsilon(1e-12));

  auto lp3 = jacobi_eigenvalues(laplacian_matrix(path_graph(3)));
  REQUIRE(lp3.size() == 3);
  CHECK(std::abs(lp3[0]) < 1e-12);
  CHECK(lp3[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp3[2] == doctest::Approx(3.0).epsilon(1e-12));

  DenseMatrix asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(jacobi_eigenvalues(asym), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_eigenvalues(DenseMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_eigenvalues(DenseMatrix(129, 129)), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_eigenvalues(DenseMatrix(2, 2), 0.0), std::invalid_argument);
}

TEST_CASE("lu solves a seeded dense system") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int n = 12;
  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = unit(rng);
    a(i, i) += n;  // diagonally dominant, hence invertible
  }
  std::vector<double> want(static_cast<size_t>(n));
  for (double& t : want) t = unit(rng);
  std::vector<double> b(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b[i] += a(i, j) * want[static_cast<size_t>(j)];
  }
  auto got = lu_solve(lu_factor(a), b);
  for (int i = 0; i < n; ++i) {
    CHECK(got[static_cast<size_t>(i)] == doctest::Approx(want[static_cast<size_t>(i)]).epsilon(1e-10));
  }
  CHECK_THROWS_AS(lu_factor(DenseMatrix(3, 3, 1.0)), std::runtime_error);
  DenseMatrix id2(2, 2);
  id2(0, 0) = id2(1, 1) = 1.0;
  CHECK_THROWS_AS(lu_solve(lu_factor(id2), std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("spectral_radius on reference graphs") {
  CHECK(spectral_radius(complete_bipartite(3, 3)).rho == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(spectral_radius(path_graph(4)).rho == doctest::Approx(kPhi).epsilon(1e-12));
  CHECK(spectral_radius(b_graph(6)).rho ==
        doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(spectral_radius(b_graph(7)).rho == doctest::Approx(2.7751688450825).epsilon(1e-11));
  CHECK(spectral_radius(b_graph(8)).rho == doctest::Approx(2.8608058531117).epsilon(1e-11));
  CHECK(spectral_radius(b_graph(12)).rho == doctest::Approx(2.9389376528650).epsilon(1e-11));
  CHECK(spectral_radius(h_graph(8, 4)).rho == doctest::Approx(3.7912878474779).epsilon(1e-11));
  SpectralResult k1 = spectral_radius(Graph(1, {}));
  CHECK(k1.rho == 0.0);
  CHECK(k1.x == std::vector<double>{1.0});
}

TEST_CASE("spectral_radius result invariants") {
  SpectralResult r = spectral_radius(b_graph(8), 1e-12);
  double norm = 0.0;
  for (double t : r.x) norm += t * t;
  CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
  for (double t : r.x) CHECK(t > 0.0);
  CHECK(r.residual <= 1e-12);
  for (double t : r.x) {
    CHECK(t <= r.x[static_cast<size_t>(r.w_hat)]);
    CHECK(t >= r.x[static_cast<size_t>(r.w_check)]);
  }
  std::vector<double> ax(r.x.size());
  adj_matvec_serial(b_graph(8), r.x.data(), ax.data());
  double res = 0.0;
  for (size_t i = 0; i < ax.size(); ++i) res = std::max(res, std::abs(ax[i] - r.rho * r.x[i]));
  CHECK(res == doctest::Approx(r.residual).epsilon(1e-9));
}

TEST_CASE("spectral_radius input validation") {
  CHECK_THROWS_AS(spectral_radius(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(path_graph(3), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(path_graph(3), -1.0), std::invalid_argument);
}

TEST_CASE("spectral_radius agrees with the dense oracle") {
  std::mt19937_64 rng(20250401);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 39);
    Graph g = testutil::random_connected_graph(rng, n, 0.3);
    CAPTURE(trial);
    CAPTURE(n);
    CHECK(std::abs(spectral_radius(g, 1e-12).rho - dense_rho(g)) < 1e-10);
  }
}

TEST_CASE("long path exercises the shifted phase") {
  SpectralResult r = spectral_radius(path_graph(200), 1e-12);
  CHECK(r.rho == doctest::Approx(2.0 * std::cos(kPi / 201.0)).epsilon(1e-12));
  CHECK(r.iterations > 64);  // warm-up alone cannot settle a long path
}

TEST_CASE("rayleigh_quotient") {
  Graph p3 = path_graph(3);
  CHECK(rayleigh_quotient(p3, {1.0, std::sqrt(2.0), 1.0}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rayleigh_quotient(p3, {1.0, 0.0, -1.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(rayleigh_quotient(p3, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(rayleigh_quotient(p3, {0.0, 0.0, 0.0}), std::invalid_argument);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 18);
    Graph g = testutil::random_connected_graph(rng, n, 0.4);
    std::vector<double> z(static_cast<size_t>(n));
    for (double& t : z) t = unit(rng);
    if (std::all_of(z.begin(), z.end(), [](double t) { return t == 0.0; })) continue;
    CHECK(rayleigh_quotient(g, z) <= spectral_radius(g).rho + 1e-10);
  }
}

TEST_CASE("deficiency identity splits the gap") {
  Graph k33 = complete_bipartite(3, 3);
  QuadraticFormReport reg = deficiency_identity(k33, spectral_radius(k33));
  CHECK(std::abs(reg.edge_term) < 1e-12);
  CHECK(reg.deficiency_term == 0.0);
  CHECK(std::abs(reg.total) < 1e-12);

  Graph p3 = path_graph(3);
  QuadraticFormReport rp3 = deficiency_identity(p3, spectral_radius(p3));
  CHECK(rp3.total == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-11));
  CHECK(rp3.total == doctest::Approx(0.5857864376269049).epsilon(1e-11));

  Graph b6 = b_graph(6);
  QuadraticFormReport rb6 = deficiency_identity(b6, spectral_radius(b6));
  CHECK(rb6.total == doctest::Approx(3.0 - (1.0 + std::sqrt(3.0))).epsilon(1e-11));

  std::mt19937_64 rng(20250402);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 28);
    Graph g = testutil::random_connected_graph(rng, n, 0.3);
    SpectralResult r = spectral_radius(g, 1e-12);
    QuadraticFormReport q = deficiency_identity(g, r);
    CAPTURE(trial);
    CHECK(std::abs(q.total - (g.max_degree() - r.rho)) <= 1e-9);
  }

  SpectralResult wrong = spectral_radius(p3);
  CHECK_THROWS_AS(deficiency_identity(path_graph(4), wrong), std::invalid_argument);
}

TEST_CASE("B_2k Perron vector has the mirror symmetry") {
  for (int k = 3; k <= 16; ++k) {
    CAPTURE(k);
    SpectralResult r = spectral_radius(b_graph(2 * k), 1e-12);
    BLabels labels = b_graph_labels(2 * k);
    for (int i = 0; i < k; ++i) {
      CHECK(std::abs(r.x[static_cast<size_t>(labels.u[static_cast<size_t>(i)])] -
                     r.x[static_cast<size_t>(labels.v[static_cast<size_t>(i)])]) < 1e-9);
    }
    // u_1 and u_2 are twins, as are v_1 and v_2.
    CHECK(std::abs(r.x[static_cast<size_t>(labels.u[0])] -
                   r.x[static_cast<size_t>(labels.u[1])]) < 1e-9);
    CHECK(std::abs(r.x[static_cast<size_t>(labels.v[0])] -
                   r.x[static_cast<size_t>(labels.v[1])]) < 1e-9);
  }
}

TEST_CASE("lemma5 test vector") {
  std::vector<double> z3 = lemma5_test_vector(3);
  REQUIRE(z3.size() == 6);
  double norm3 = 0.0;
  for (double t : z3) norm3 += t * t;
  CHECK(norm3 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(3.0 - rayleigh_quotient(b_graph(6), z3) <= 18.0 * std::pow(std::sin(kPi / 12.0), 2) + 1e-12);
  CHECK(18.0 * std::pow(std::sin(kPi / 12.0), 2) ==
        doctest::Approx(1.205771365940052).epsilon(1e-12));

  for (int k = 3; k <= 40; ++k) {
    CAPTURE(k);
    std::vector<double> z = lemma5_test_vector(k);
    double norm = 0.0;
    for (double t : z) norm += t * t;
    CHECK(norm == doctest::Approx(static_cast<double>(k - 1)).epsilon(1e-10));
    double cap = lemma5_bounds(2 * k).upper;
    CHECK(3.0 - rayleigh_quotient(b_graph(2 * k), z) <= cap + 1e-12);
  }
  CHECK_THROWS_AS(lemma5_test_vector(2), std::invalid_argument);
}

TEST_CASE("rotate_edges mechanics") {
  Graph p4 = path_graph(4);
  CHECK(rotate_edges(p4, 1, 3, {}) == p4);
  Graph rotated = rotate_edges(p4, 1, 3, {0});
  CHECK(rotated.size() == 3);
  CHECK(rotated.has_edge(0, 3));
  CHECK_FALSE(rotated.has_edge(0, 1));
  CHECK(isomorphic(rotated, p4));  // the rotation just re-threads the path
}

TEST_CASE("rotate_edges validation") {
  Graph p4 = path_graph(4);
  CHECK_THROWS_AS(rotate_edges(p4, 1, 1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(rotate_edges(p4, 1, 4, {0}), std::invalid_argument);
  CHECK_THROWS_AS(rotate_edges(p4, 1, 3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(rotate_edges(p4, 1, 3, {2}), std::invalid_argument);   // 2 in N(3)
  CHECK_THROWS_AS(rotate_edges(p4, 1, 3, {3}), std::invalid_argument);   // v itself
  CHECK_THROWS_AS(rotate_edges(p4, 0, 2, {3}), std::invalid_argument);   // 3 not in N(0)
}

TEST_CASE("rotation toward a heavier vertex never lowers rho") {
  std::mt19937_64 rng(20250403);
  int tested = 0;
  int attempts = 0;
  while (tested < 50 && attempts < 600) {
    ++attempts;
    int n = 5 + static_cast<int>(rng() % 14);
    Graph g = testutil::random_connected_graph(rng, n, 0.25);
    if (g.is_regular()) continue;
    SpectralResult r = spectral_radius(g, 1e-12);
    int u = r.w_check;
    int v = r.w_hat;
    if (u == v) continue;
    std::vector<int> candidates;
    for (int w : g.neighbors(u)) {
      if (w != v && !g.has_edge(w, v)) candidates.push_back(w);
    }
    if (candidates.empty()) continue;
    std::vector<int> s;
    for (int w : candidates) {
      if (rng() % 2) s.push_back(w);
    }
    if (s.empty()) s = candidates;
    Graph rotated = rotate_edges(g, u, v, s);
    double before = dense_rho(g);
    double after = dense_rho(rotated);  // rotated graph may be disconnected
    double floor = 0.0;
    for (int w : s) {
      floor += 2.0 * r.x[static_cast<size_t>(w)] *
               (r.x[static_cast<size_t>(v)] - r.x[static_cast<size_t>(u)]);
    }
    CAPTURE(attempts);
    CHECK(floor > 0.0);
    CHECK(after > before);
    CHECK(after - before >= floor - 1e-9);
    ++tested;
  }
  CHECK(tested == 50);
}

TEST_CASE("algebraic connectivity") {
  CHECK(algebraic_connectivity(Graph(2, {{0, 1}})) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(algebraic_connectivity(path_graph(3)) == doctest::Approx(1.0).epsilon(1e-12));
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(algebraic_connectivity(c4) == doctest::Approx(2.0).epsilon(1e-12));
  double p10 = 4.0 * std::pow(std::sin(kPi / 20.0), 2);
  CHECK(algebraic_connectivity(path_graph(10)) == doctest::Approx(p10).epsilon(1e-11));
  CHECK_THROWS_AS(algebraic_connectivity(Graph(1, {})), std::invalid_argument);
  CHECK_THROWS_AS(algebraic_connectivity(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(algebraic_connectivity(path_graph(3), 0.0), std::invalid_argument);
}

TEST_CASE("shi inequality gap") {
  CHECK(shi_inequality_gap(1.0, 1.0, 2.0, 1.0) == doctest::Approx(0.0));
  CHECK(shi_inequality_gap(2.0, 3.0, 1.0, 0.0) == doctest::Approx(0.8).epsilon(1e-12));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  std::uniform_real_distribution<double> any(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    double a = pos(rng);
    double b = pos(rng);
    double p = any(rng);
    CHECK(shi_inequality_gap(a, b, p, any(rng)) >= -1e-12);
    CHECK(std::abs(shi_inequality_gap(a, b, p, a * p / (a + b))) < 1e-12);
  }
  CHECK_THROWS_AS(shi_inequality_gap(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(shi_inequality_gap(1.0, -1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_SUITE_END();
