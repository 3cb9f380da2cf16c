// Undirected simple graph with O(1) edge queries, bipartition detection,
// BFS distances and cached diameter.
#ifndef BIPSPEC_GRAPH_HPP
#define BIPSPEC_GRAPH_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bipspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph on n labeled vertices. Throws std::invalid_argument
  /// on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, const std::vector<Edge>& edges);

  Graph(const Graph& other);
  Graph& operator=(const Graph& other);
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;

  int order() const { return n_; }
  int size() const { return m_; }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  std::vector<int> degree_sequence() const;   // sorted ascending
  int max_degree() const;
  bool is_regular() const;
  bool is_connected() const;

  /// Largest BFS eccentricity; computed on first call and cached.
  /// Throws std::invalid_argument on disconnected graphs.
  int diameter() const;

  /// Edges as (u,v) with u < v, sorted.
  std::vector<Edge> edge_list() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;       // sorted neighbor lists
  std::vector<uint64_t> bits_;                 // row-major bit matrix, n <= kBitLimit
  int stride_ = 0;                             // uint64 words per row
  mutable std::atomic<int> diameter_cache_{-1};

  static constexpr int kBitLimit = 8192;
};

/// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

/// Shortest-path edge count. Throws if u,v invalid or unreachable.
int distance(const Graph& g, Vertex u, Vertex v);

struct Bipartition {
  std::vector<Vertex> x, y;            // parts, sorted; vertex 0 is in x
  std::vector<Vertex> x_star, y_star;  // vertices of degree < max degree
};

/// Two-colors a connected graph. Returns the bipartition with vertex 0 in X,
/// or nullopt if the graph contains an odd cycle. Throws std::invalid_argument
/// on disconnected input (distinct from the non-bipartite case).
std::optional<Bipartition> bipartition(const Graph& g);

}  // namespace bipspec

#endif
