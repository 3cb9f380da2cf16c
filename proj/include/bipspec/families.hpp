// Constructors for the graph families under study.
#ifndef BIPSPEC_FAMILIES_HPP
#define BIPSPEC_FAMILIES_HPP

#include <vector>

#include "bipspec/graph.hpp"

namespace bipspec {

/// Path on n >= 1 vertices, edges {i, i+1}.
Graph path_graph(int n);

/// Complete bipartite graph K_{a,b}; part X = 0..a-1, part Y = a..a+b-1.
Graph complete_bipartite(int a, int b);

/// Extremal graph H_{n,delta} for 2*delta >= n-1:
///   2*delta > n    -> K_{delta, n-delta}
///   2*delta == n   -> K_{delta,delta} minus the edge {delta-1, 2*delta-1}
///   2*delta == n-1 -> the previous graph plus a pendant vertex attached to
///                     the X-side endpoint delta-1 of the removed edge
/// Throws std::invalid_argument outside these cases or when the result would
/// be disconnected (delta < 2 in the latter two cases) or delta >= n.
Graph h_graph(int n, int delta);

/// Candidate extremal graph B_n (n >= 6) with maximum degree 3: B_6 is
/// K_{3,3} minus an edge; each later vertex is attached to the currently
/// unsaturated vertices (pendant on the X-side one at even orders, joining
/// the two Y-side ones at odd orders).
Graph b_graph(int n);

/// Labels of the two sides of b_graph(n): u[i] / v[i] hold the vertex label
/// of u_{i+1} / v_{i+1}. u has floor(n/2) entries, v has ceil(n/2).
struct BLabels {
  std::vector<int> u;
  std::vector<int> v;
};

BLabels b_graph_labels(int n);

}  // namespace bipspec

#endif
