#include "bipspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bipspec/dense.hpp"
#include "bipspec/families.hpp"

namespace bipspec {

namespace {

constexpr int kWarmupIterations = 64;
constexpr int kInverseIterations = 500;
constexpr long long kIterationCap = 1000000;
constexpr int kDenseShiftLimit = 2048;

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double t : v) s += t * t;
  return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
  double s = norm2(v);
  if (s == 0.0) throw std::runtime_error("spectral: zero vector during iteration");
  for (double& t : v) t /= s;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double residual_inf(const Graph& g, const std::vector<double>& x, double rho,
                    const std::vector<double>& ax) {
  double r = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    r = std::max(r, std::abs(ax[static_cast<size_t>(v)] - rho * x[static_cast<size_t>(v)]));
  }
  return r;
}

SpectralResult finalize(const Graph& g, std::vector<double> x, double rho,
                        long long iterations, double residual) {
  SpectralResult out;
  out.rho = rho;
  out.iterations = iterations;
  out.residual = residual;
  out.w_hat = 0;
  out.w_check = 0;
  for (int v = 1; v < g.order(); ++v) {
    if (x[static_cast<size_t>(v)] > x[static_cast<size_t>(out.w_hat)]) out.w_hat = v;
    if (x[static_cast<size_t>(v)] < x[static_cast<size_t>(out.w_check)]) out.w_check = v;
  }
  if (x[static_cast<size_t>(out.w_check)] <= 0.0) {
    throw std::runtime_error("spectral: Perron vector not entrywise positive");
  }
  out.x = std::move(x);
  return out;
}

[[noreturn]] void fail_convergence(const Graph& g, long long iterations, double residual,
                                   double tol) {
  std::ostringstream msg;
  msg << "spectral_radius: no convergence (n=" << g.order() << ", iterations=" << iterations
      << ", residual=" << residual << ", tol=" << tol << ")";
  throw std::runtime_error(msg.str());
}

}  // namespace

void adj_matvec_serial(const Graph& g, const double* x, double* y) {
  int n = g.order();
  for (int v = 0; v < n; ++v) {
    double s = 0.0;
    for (int w : g.neighbors(v)) s += x[w];
    y[v] = s;
  }
}

void adj_matvec_parallel(const Graph& g, const double* x, double* y) {
  int n = g.order();
#pragma omp parallel for schedule(static)
  for (int v = 0; v < n; ++v) {
    double s = 0.0;
    for (int w : g.neighbors(v)) s += x[w];
    y[v] = s;
  }
}

SpectralResult spectral_radius(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_radius: tol must be positive");
  if (!g.is_connected()) {
    throw std::invalid_argument("spectral_radius: graph must be connected");
  }
  int n = g.order();
  size_t un = static_cast<size_t>(n);
  if (n == 1) return finalize(g, {1.0}, 0.0, 0, 0.0);

  std::vector<double> x(un, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(un);
  long long iterations = 0;
  double rho = 0.0;
  double res = 0.0;

  // Phase 1: power iteration on A + I from a positive start. Converges to the
  // Perron direction (rho + 1 strictly dominates |lambda + 1| for every other
  // eigenvalue) and settles regular graphs immediately.
  long long warmup = n <= kDenseShiftLimit ? kWarmupIterations : kIterationCap;
  for (long long it = 0; it < warmup; ++it) {
    adj_matvec_parallel(g, x.data(), ax.data());
    ++iterations;
    rho = dot(x, ax);
    res = residual_inf(g, x, rho, ax);
    if (res <= tol) return finalize(g, std::move(x), rho, iterations, res);
    for (size_t i = 0; i < un; ++i) x[i] += ax[i];
    normalize(x);
  }
  if (n > kDenseShiftLimit) fail_convergence(g, iterations, res, tol);

  // Phase 2: shifted inverse iteration with sigma = max_deg + eps. Since
  // rho <= max_deg always, rho is the strictly nearest eigenvalue to sigma,
  // so convergence to the Perron pair is guaranteed from any positive start.
  int delta = g.max_degree();
  double sigma = delta + 1e-9 * std::max(1.0, static_cast<double>(delta));
  DenseMatrix shifted = adjacency_matrix(g);
  for (int i = 0; i < n; ++i) shifted(i, i) -= sigma;
  LuFactors lu = lu_factor(std::move(shifted));
  for (int it = 0; it < kInverseIterations; ++it) {
    x = lu_solve(lu, std::move(x));
    double sum = 0.0;
    for (double t : x) sum += t;
    if (sum < 0.0) {
      for (double& t : x) t = -t;
    }
    normalize(x);
    adj_matvec_parallel(g, x.data(), ax.data());
    ++iterations;
    rho = dot(x, ax);
    res = residual_inf(g, x, rho, ax);
    if (res <= tol) return finalize(g, std::move(x), rho, iterations, res);
  }
  fail_convergence(g, iterations, res, tol);
}

double rayleigh_quotient(const Graph& g, const std::vector<double>& z) {
  if (static_cast<int>(z.size()) != g.order()) {
    throw std::invalid_argument("rayleigh_quotient: dimension mismatch");
  }
  double den = dot(z, z);
  if (den == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
  double num = 0.0;
  for (auto [u, v] : g.edge_list()) num += z[static_cast<size_t>(u)] * z[static_cast<size_t>(v)];
  return 2.0 * num / den;
}

QuadraticFormReport deficiency_identity(const Graph& g, const SpectralResult& result) {
  if (static_cast<int>(result.x.size()) != g.order()) {
    throw std::invalid_argument("deficiency_identity: dimension mismatch");
  }
  int delta = g.max_degree();
  QuadraticFormReport rep;
  for (auto [u, v] : g.edge_list()) {
    double d = result.x[static_cast<size_t>(u)] - result.x[static_cast<size_t>(v)];
    rep.edge_term += d * d;
  }
  for (int v = 0; v < g.order(); ++v) {
    double xv = result.x[static_cast<size_t>(v)];
    rep.deficiency_term += (delta - g.degree(v)) * xv * xv;
  }
  rep.total = rep.edge_term + rep.deficiency_term;
  return rep;
}

std::vector<double> lemma5_test_vector(int k) {
  if (k < 3) throw std::invalid_argument("lemma5_test_vector: requires k >= 3");
  BLabels labels = b_graph_labels(2 * k);
  std::vector<double> z(static_cast<size_t>(2 * k));
  for (int i = 1; i <= k; ++i) {
    double value = std::sin((k - i) * std::numbers::pi / (2.0 * k));
    z[static_cast<size_t>(labels.u[static_cast<size_t>(i - 1)])] = value;
    z[static_cast<size_t>(labels.v[static_cast<size_t>(i - 1)])] = value;
  }
  return z;
}

Graph rotate_edges(const Graph& g, int u, int v, const std::vector<int>& s) {
  int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
    throw std::invalid_argument("rotate_edges: bad endpoints");
  }
  std::set<int> moved(s.begin(), s.end());
  if (moved.size() != s.size()) {
    throw std::invalid_argument("rotate_edges: S has repeated vertices");
  }
  for (int w : moved) {
    if (w < 0 || w >= n || w == v || !g.has_edge(w, u) || g.has_edge(w, v)) {
      throw std::invalid_argument("rotate_edges: S must lie in N(u) \\ N(v), v excluded");
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edge_list()) {
    if ((a == u && moved.count(b)) || (b == u && moved.count(a))) continue;
    edges.emplace_back(a, b);
  }
  for (int w : moved) edges.emplace_back(w, v);
  return Graph(n, edges);
}

double algebraic_connectivity(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("algebraic_connectivity: tol must be positive");
  if (!g.is_connected()) {
    throw std::invalid_argument("algebraic_connectivity: graph must be connected");
  }
  if (g.order() < 2 || g.order() > kJacobiLimit) {
    throw std::invalid_argument("algebraic_connectivity: order must be in [2, 128]");
  }
  std::vector<double> eig = jacobi_eigenvalues(laplacian_matrix(g));
  return eig[1];
}

double shi_inequality_gap(double a, double b, double p, double q) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("shi_inequality_gap: a and b must be positive");
  }
  return a * (p - q) * (p - q) + b * q * q - a * b * p * p / (a + b);
}

}  // namespace bipspec
