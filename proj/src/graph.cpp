#include "bipspec/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace bipspec {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.assign(n, {});
  if (n_ <= kBitLimit) {
    stride_ = (n_ + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * stride_, 0);
  }
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("graph: duplicate edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    if (!bits_.empty()) {
      bits_[static_cast<size_t>(u) * stride_ + v / 64] |= uint64_t{1} << (v % 64);
      bits_[static_cast<size_t>(v) * stride_ + u / 64] |= uint64_t{1} << (u % 64);
    }
    ++m_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(const Graph& other)
  : n_(other.n_), m_(other.m_), adj_(other.adj_), bits_(other.bits_), stride_(other.stride_) {
  diameter_cache_.store(other.diameter_cache_.load());
}

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    n_ = other.n_;
    m_ = other.m_;
    adj_ = other.adj_;
    bits_ = other.bits_;
    stride_ = other.stride_;
    diameter_cache_.store(other.diameter_cache_.load());
  }
  return *this;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (!bits_.empty())
    return (bits_[static_cast<size_t>(u) * stride_ + v / 64] >> (v % 64)) & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_regular() const {
  for (int v = 1; v < n_; ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  auto dist = bfs_distances(*this, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

int Graph::diameter() const {
  int cached = diameter_cache_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached;
  if (!is_connected()) throw std::invalid_argument("diameter: graph is disconnected");
  int diam = 0;
  for (int v = 0; v < n_; ++v) {
    auto dist = bfs_distances(*this, v);
    diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
  }
  diameter_cache_.store(diam, std::memory_order_relaxed);
  return diam;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && m_ == other.m_ && adj_ == other.adj_;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  if (src < 0 || src >= g.order()) throw std::invalid_argument("bfs: source out of range");
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::invalid_argument("distance: vertex out of range");
  auto dist = bfs_distances(g, u);
  if (dist[v] < 0) throw std::invalid_argument("distance: vertices are in different components");
  return dist[v];
}

std::optional<Bipartition> bipartition(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("bipartition: empty graph");
  auto dist = bfs_distances(g, 0);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end())
    throw std::invalid_argument("bipartition: graph is disconnected");
  // 2-coloring by BFS parity; any edge within a color class closes an odd cycle
  for (auto [u, v] : g.edge_list())
    if ((dist[u] & 1) == (dist[v] & 1)) return std::nullopt;
  Bipartition bp;
  int delta = g.max_degree();
  for (int v = 0; v < g.order(); ++v) {
    bool in_x = (dist[v] & 1) == 0;  // vertex 0 has even parity
    (in_x ? bp.x : bp.y).push_back(v);
    if (g.degree(v) < delta) (in_x ? bp.x_star : bp.y_star).push_back(v);
  }
  return bp;
}

}  // namespace bipspec
