#include "bipspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bipspec {

namespace {

constexpr double kPi = std::numbers::pi;

// Symmetrized diagonal/off-diagonal; eigenvalues are preserved because a
// tridiagonal matrix with a_i c_i > 0 is diagonally similar to the symmetric
// one with off-diagonals sqrt(a_i c_i).
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;
};

SymTridiag symmetrize(const TridiagSpec& spec) {
  validate_spec(spec);
  SymTridiag t;
  t.diag.assign(spec.n, spec.b);
  t.diag.front() -= spec.alpha;
  t.diag.back() -= spec.beta;
  for (int i = 0; i + 1 < spec.n; ++i) {
    double prod = spec.sub[i] * spec.super[i];
    if (!(prod > 0.0)) {
      throw std::invalid_argument("tridiag: spec not symmetrizable (a_i c_i <= 0)");
    }
    t.off.push_back(std::sqrt(prod));
  }
  return t;
}

// Sturm count: number of eigenvalues of the symmetric tridiagonal matrix
// strictly below x, via the LDL^T pivot recurrence.
int count_below(const SymTridiag& t, double x) {
  int count = 0;
  double q = 1.0;
  for (size_t i = 0; i < t.diag.size(); ++i) {
    double e2 = i > 0 ? t.off[i - 1] * t.off[i - 1] : 0.0;
    q = t.diag[i] - x - e2 / q;
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

void validate_spec(const TridiagSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("tridiag: order must be positive");
  if (spec.d == 0.0) throw std::invalid_argument("tridiag: d must be nonzero");
  size_t want = static_cast<size_t>(spec.n - 1);
  if (spec.sub.size() != want || spec.super.size() != want) {
    throw std::invalid_argument("tridiag: sub/super must have n-1 entries");
  }
  double d2 = spec.d * spec.d;
  for (size_t i = 0; i < want; ++i) {
    if (std::abs(spec.sub[i] * spec.super[i] - d2) > 1e-9 * d2) {
      throw std::invalid_argument("tridiag: a_i * c_i must equal d^2");
    }
  }
}

std::vector<double> willms_eigenvalues(const TridiagSpec& spec) {
  validate_spec(spec);
  if (spec.alpha != spec.d || spec.beta != 0.0) {
    throw std::invalid_argument("willms_eigenvalues: requires alpha = d and beta = 0");
  }
  std::vector<double> eig;
  for (int i = 1; i <= spec.n; ++i) {
    eig.push_back(spec.b + 2.0 * spec.d * std::cos(2.0 * i * kPi / (2.0 * spec.n + 1.0)));
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

TridiagSpec m_matrix(int n) {
  if (n < 1) throw std::invalid_argument("m_matrix: order must be positive");
  TridiagSpec spec;
  spec.n = n;
  spec.b = 2.0;
  spec.d = 1.0;
  spec.alpha = 1.0;
  spec.beta = 0.0;
  spec.sub.assign(static_cast<size_t>(n - 1), -1.0);
  spec.super.assign(static_cast<size_t>(n - 1), -1.0);
  return spec;
}

double m_least_eigenvalue_closed(int n) {
  if (n < 1) throw std::invalid_argument("m_least_eigenvalue_closed: order must be positive");
  double s = std::sin(kPi / (4.0 * n + 2.0));
  return 4.0 * s * s;
}

std::vector<double> tridiag_eigenvalues_numeric(const TridiagSpec& spec, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tridiag: tol must be positive");
  SymTridiag t = symmetrize(spec);
  int n = spec.n;
  // Gershgorin bracket for every eigenvalue.
  double lo = t.diag[0];
  double hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
               (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  lo -= tol;
  hi += tol;
  std::vector<double> eig;
  for (int k = 1; k <= n; ++k) {
    double a = lo;
    double b = hi;
    // Invariant: count_below(a) < k <= count_below(b).
    while (b - a > tol) {
      double mid = a + 0.5 * (b - a);
      if (mid <= a || mid >= b) break;  // interval at rounding limit
      if (count_below(t, mid) >= k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    eig.push_back(a + 0.5 * (b - a));
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

int tridiag_count_below(const TridiagSpec& spec, double x) {
  return count_below(symmetrize(spec), x);
}

double trig_identity_sum_sin(int k) {
  if (k < 3) throw std::invalid_argument("trig_identity_sum_sin: requires k >= 3");
  double sum = 0.0;
  for (int i = 1; i <= k - 1; ++i) {
    double s = std::sin(i * kPi / (2.0 * k));
    sum += s * s;
  }
  return sum;
}

double trig_identity_sum_cos(int k) {
  if (k < 3) throw std::invalid_argument("trig_identity_sum_cos: requires k >= 3");
  double sum = 0.0;
  for (int i = 0; i <= k - 1; ++i) {
    double c = std::cos((2.0 * i + 1.0) * kPi / (4.0 * k));
    sum += c * c;
  }
  return sum;
}

}  // namespace bipspec
