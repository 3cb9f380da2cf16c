// Small dense linear algebra: a Jacobi eigensolver used as a second oracle
// at small order, and LU factorization backing shifted inverse iteration.
#ifndef BIPSPEC_DENSE_HPP
#define BIPSPEC_DENSE_HPP

#include <vector>

#include "bipspec/graph.hpp"

namespace bipspec {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

DenseMatrix adjacency_matrix(const Graph& g);
DenseMatrix laplacian_matrix(const Graph& g);

constexpr int kJacobiLimit = 128;

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations run to off-diagonal Frobenius norm <= tol * ||A||_F. Small-order
/// oracle: throws for n > 128 or asymmetric input.
std::vector<double> jacobi_eigenvalues(DenseMatrix a, double tol = 1e-15);

/// PA = LU with partial pivoting.
struct LuFactors {
  DenseMatrix lu;
  std::vector<int> perm;
};

LuFactors lu_factor(DenseMatrix a);
std::vector<double> lu_solve(const LuFactors& f, std::vector<double> b);

}  // namespace bipspec

#endif
