#include "bipspec/families.hpp"

#include <stdexcept>
#include <utility>

namespace bipspec {

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("complete_bipartite: parts must be nonempty");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, edges);
}

Graph h_graph(int n, int delta) {
  if (delta < 1 || delta >= n) {
    throw std::invalid_argument("h_graph: need 1 <= delta < n");
  }
  if (2 * delta > n) return complete_bipartite(delta, n - delta);
  if (2 * delta < n - 1) {
    throw std::invalid_argument("h_graph: defined only for 2*delta >= n-1");
  }
  if (delta < 2) {
    throw std::invalid_argument("h_graph: result disconnected for delta < 2");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < delta; ++i) {
    for (int j = 0; j < delta; ++j) {
      if (i == delta - 1 && j == delta - 1) continue;  // removed edge
      edges.emplace_back(i, delta + j);
    }
  }
  if (2 * delta == n - 1) edges.emplace_back(delta - 1, 2 * delta);
  return Graph(n, edges);
}

namespace {

std::vector<std::pair<int, int>> b_graph_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) {
      if (i == 2 && j == 5) continue;  // K_{3,3} minus u_3 v_3
      edges.emplace_back(i, j);
    }
  }
  // Grow one vertex at a time. At even orders the unsaturated pair is
  // (a, b) = (u_k, v_k), both of degree 2; the balanced step hangs a pendant
  // w on the X-side vertex a, leaving b and w (both Y-side) unsaturated; the
  // unbalanced step joins a new X-side vertex to both of them.
  int a = 2;
  int b = 5;
  int pend = -1;
  for (int order = 6; order < n; ++order) {
    int w = order;
    if (order % 2 == 0) {
      edges.emplace_back(a, w);
      pend = w;
    } else {
      edges.emplace_back(b, w);
      edges.emplace_back(pend, w);
      a = w;
      b = pend;
    }
  }
  return edges;
}

}  // namespace

Graph b_graph(int n) {
  if (n < 6) throw std::invalid_argument("b_graph: n must be at least 6");
  return Graph(n, b_graph_edges(n));
}

BLabels b_graph_labels(int n) {
  if (n < 6) throw std::invalid_argument("b_graph_labels: n must be at least 6");
  BLabels out;
  for (int i = 1; i <= n / 2; ++i) out.u.push_back(i <= 3 ? i - 1 : 2 * i - 1);
  for (int i = 1; i <= (n + 1) / 2; ++i) out.v.push_back(i <= 3 ? i + 2 : 2 * i - 2);
  return out;
}

}  // namespace bipspec
