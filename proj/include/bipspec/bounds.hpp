// Closed-form spectral-gap bounds and per-graph bound reports.
#ifndef BIPSPEC_BOUNDS_HPP
#define BIPSPEC_BOUNDS_HPP

#include <optional>
#include <string>

#include "bipspec/graph.hpp"

namespace bipspec {

/// 1/(2n(n*delta - 1)*delta^2); valid gap lower bound for connected irregular
/// graphs. Requires n >= 2, delta >= 1.
double stevanovic_bound(int n, int delta);

/// 1/(n*D) with D the diameter; valid for connected irregular graphs.
/// Requires n >= 1, diam >= 1.
double cioaba_bound(int n, int diam);

/// 2*delta/(n(4n + delta - 4)); valid for connected irregular bipartite
/// graphs. Requires n >= 2, delta >= 2.
double new_bipartite_bound(int n, int delta);

/// sqrt(m); upper bound on rho for bipartite graphs, attained exactly on
/// complete bipartite graphs (plus isolated vertices). Requires m >= 0.
double sqrt_size_bound(int m);

struct Lemma5Bounds {
  double lower = 0.0;  // 4 sin^2(pi/(2n+2))
  double upper = 0.0;  // (4n+48)/(n-2) * sin^2(pi/(2n))
};

/// Sandwich for 3 - rho(B_n); n even, n >= 6.
Lemma5Bounds lemma5_bounds(int n_even);

struct BoundReport {
  int n = 0;
  int delta = 0;
  int m = 0;
  int diam = 0;
  double rho = 0.0;
  double gap = 0.0;  // delta - rho
  double stevanovic = 0.0;
  double cioaba = 0.0;
  std::optional<double> new_bound;  // bipartite graphs with delta >= 2 only
  double sqrt_m = 0.0;
  std::optional<double> lemma5_lower;  // set when the graph is B_n, n even
  std::optional<double> lemma5_upper;
  bool stevanovic_ok = false;
  bool cioaba_ok = false;
  bool new_bound_ok = false;  // true when inapplicable
  bool sqrt_m_ok = false;
  bool lemma5_ok = false;  // true when inapplicable
  bool all_ok = false;
};

/// Evaluates every applicable bound against spectral_radius(g, tol).
/// Requires g connected and irregular (throws on regular input).
BoundReport bound_report(const Graph& g, double tol = 1e-12);

std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& r);
std::string bound_report_json(const BoundReport& r);
/// Parses the output of bound_report_json (schema round-trip).
BoundReport bound_report_from_json(const std::string& text);

}  // namespace bipspec

#endif
