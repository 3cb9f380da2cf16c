// Spectral radius and Perron vector, Rayleigh-quotient machinery, the
// deficiency quadratic-form identity, edge rotations, and the Fiedler value.
#ifndef BIPSPEC_SPECTRAL_HPP
#define BIPSPEC_SPECTRAL_HPP

#include <vector>

#include "bipspec/graph.hpp"

namespace bipspec {

struct SpectralResult {
  double rho = 0.0;             // spectral radius
  std::vector<double> x;        // unit Perron vector, entrywise positive
  int w_hat = 0;                // argmax of x (lowest index on ties)
  int w_check = 0;              // argmin of x (lowest index on ties)
  long long iterations = 0;     // matrix-vector products / solves performed
  double residual = 0.0;        // ||A x - rho x||_inf
};

struct QuadraticFormReport {
  double edge_term = 0.0;        // sum over edges of (x_u - x_v)^2
  double deficiency_term = 0.0;  // sum over vertices of (max_deg - deg) x_v^2
  double total = 0.0;            // their sum; equals max_deg - rho for the
                                 // unit Perron vector
};

/// y = A x over the adjacency lists. The serial kernel is the reference; the
/// parallel kernel partitions rows across OpenMP threads and produces
/// bitwise-identical output (per-row summation order is fixed).
void adj_matvec_serial(const Graph& g, const double* x, double* y);
void adj_matvec_parallel(const Graph& g, const double* x, double* y);

/// Spectral radius of a connected graph with ||Ax - rho x||_inf <= tol.
/// Bipartite-safe: warm-up power iteration on A + I (the -rho eigenvalue
/// cannot defeat it), then shifted inverse iteration with shift
/// max_deg + epsilon, whose nearest eigenvalue is always rho. Throws
/// std::runtime_error with diagnostics if the iteration cap is reached.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12);

/// (2 sum_{uv in E} z_u z_v) / (sum_v z_v^2); at most rho(g). z must be
/// nonzero and of matching dimension.
double rayleigh_quotient(const Graph& g, const std::vector<double>& z);

/// Splits max_deg - rho into the Laplacian edge term plus the degree
/// deficiency term evaluated on result.x.
QuadraticFormReport deficiency_identity(const Graph& g, const SpectralResult& result);

/// Test vector z on b_graph(2k), k >= 3: z(u_i) = z(v_i) = sin((k-i)pi/(2k))
/// under the b_graph labeling; satisfies z^t z = k - 1.
std::vector<double> lemma5_test_vector(int k);

/// G - {wu : w in S} + {wv : w in S}. Requires S (distinct vertices) to lie
/// in N(u) \ N(v) with v not in S.
Graph rotate_edges(const Graph& g, int u, int v, const std::vector<int>& s);

/// Second-smallest Laplacian eigenvalue of a connected graph, n in [2, 128]
/// (dense Jacobi oracle; accuracy near machine precision, at least tol).
double algebraic_connectivity(const Graph& g, double tol = 1e-12);

/// a(p-q)^2 + bq^2 - abp^2/(a+b) for a, b > 0; nonnegative, zero exactly at
/// q = ap/(a+b).
double shi_inequality_gap(double a, double b, double p, double q);

}  // namespace bipspec

#endif
