// Willms-form tridiagonal matrices: closed-form eigenvalues and a
// Sturm-bisection numeric eigensolver used as an independent cross-check.
#ifndef BIPSPEC_TRIDIAG_HPP
#define BIPSPEC_TRIDIAG_HPP

#include <vector>

namespace bipspec {

/// Tridiagonal matrix with diagonal (-alpha+b, b, ..., b, -beta+b),
/// subdiagonal a_1..a_{n-1} (sub), superdiagonal c_1..c_{n-1} (super),
/// subject to a_i * c_i = d^2 with d != 0.
struct TridiagSpec {
  int n = 0;
  double b = 0.0;
  double d = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> sub;
  std::vector<double> super;
};

/// Throws std::invalid_argument if sizes, d, or the a_i*c_i = d^2 invariant
/// (relative tolerance 1e-9) are violated.
void validate_spec(const TridiagSpec& spec);

/// Closed-form eigenvalues {b + 2d cos(2i pi/(2n+1)) : i=1..n}, ascending.
/// Requires alpha = d and beta = 0; throws otherwise.
std::vector<double> willms_eigenvalues(const TridiagSpec& spec);

/// The order-n matrix with alpha=1, beta=0, b=2, a_i=c_i=-1, d=+1 (principal
/// root of a_i c_i = 1), i.e. diagonal (1, 2, ..., 2), off-diagonals -1.
TridiagSpec m_matrix(int n);

/// Least eigenvalue of m_matrix(n): 4 sin^2(pi/(4n+2)).
double m_least_eigenvalue_closed(int n);

/// All eigenvalues of the symmetrized spec (off-diagonals sqrt(a_i c_i)) by
/// Sturm-sequence counting with bisection; each within tol of exact,
/// ascending. Requires a_i c_i > 0; tol > 0.
std::vector<double> tridiag_eigenvalues_numeric(const TridiagSpec& spec, double tol);

/// Number of eigenvalues of the symmetrized spec strictly less than x.
int tridiag_count_below(const TridiagSpec& spec, double x);

/// Sum_{i=1}^{k-1} sin^2(i pi / (2k)); equals (k-1)/2. Requires k >= 3.
double trig_identity_sum_sin(int k);

/// Sum_{i=0}^{k-1} cos^2((2i+1) pi / (4k)); equals k/2. Requires k >= 3.
double trig_identity_sum_cos(int k);

}  // namespace bipspec

#endif
