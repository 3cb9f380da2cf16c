#include "bipspec/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bipspec {

DenseMatrix adjacency_matrix(const Graph& g) {
  int n = g.order();
  DenseMatrix a(n, n);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) a(v, w) = 1.0;
  }
  return a;
}

DenseMatrix laplacian_matrix(const Graph& g) {
  int n = g.order();
  DenseMatrix l(n, n);
  for (int v = 0; v < n; ++v) {
    l(v, v) = g.degree(v);
    for (int w : g.neighbors(v)) l(v, w) = -1.0;
  }
  return l;
}

std::vector<double> jacobi_eigenvalues(DenseMatrix a, double tol) {
  int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("jacobi: matrix must be square");
  if (n > kJacobiLimit) throw std::invalid_argument("jacobi: order exceeds 128");
  if (!(tol > 0.0)) throw std::invalid_argument("jacobi: tol must be positive");
  double frob = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * (1.0 + std::abs(a(i, j)))) {
        throw std::invalid_argument("jacobi: matrix must be symmetric");
      }
      frob += a(i, j) * a(i, j);
    }
  }
  frob = std::sqrt(frob);
  if (frob == 0.0 || n == 1) {
    std::vector<double> eig;
    for (int i = 0; i < n; ++i) eig.push_back(a(i, i));
    std::sort(eig.begin(), eig.end());
    return eig;
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    }
    if (std::sqrt(off) <= tol * frob) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p);
          double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k);
          double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig;
  for (int i = 0; i < n; ++i) eig.push_back(a(i, i));
  std::sort(eig.begin(), eig.end());
  return eig;
}

LuFactors lu_factor(DenseMatrix a) {
  int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("lu_factor: matrix must be square");
  LuFactors f{std::move(a), std::vector<int>(static_cast<size_t>(n))};
  DenseMatrix& m = f.lu;
  for (int i = 0; i < n; ++i) f.perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m(k, k));
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        piv = i;
      }
    }
    if (best == 0.0) throw std::runtime_error("lu_factor: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      double l = m(i, k) / m(k, k);
      m(i, k) = l;
      if (l == 0.0) continue;
      for (int j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }
  return f;
}

std::vector<double> lu_solve(const LuFactors& f, std::vector<double> b) {
  int n = f.lu.rows();
  if (static_cast<int>(b.size()) != n) {
    throw std::invalid_argument("lu_solve: dimension mismatch");
  }
  std::vector<double> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = b[static_cast<size_t>(f.perm[i])];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
    x[i] /= f.lu(i, i);
  }
  return x;
}

}  // namespace bipspec
