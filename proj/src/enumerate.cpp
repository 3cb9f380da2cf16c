#include "bipspec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bipspec/canonical.hpp"
#include "bipspec/dense.hpp"
#include "bipspec/spectral.hpp"

namespace bipspec {

namespace {

constexpr double kTieMargin = 1e-9;
constexpr double kResolvedMargin = 1e-12;

void validate_spec(const SearchSpec& spec) {
  if (spec.n < 2 || spec.n > kGenerateMaxOrder) {
    throw std::invalid_argument("generate: order must be in [2, 12]");
  }
  if (spec.delta_max < 1 || spec.delta_max >= spec.n) {
    throw std::invalid_argument("generate: need 1 <= delta_max < n");
  }
  if (!spec.require_bipartite || !spec.require_connected) {
    throw std::invalid_argument(
        "generate: only connected bipartite generation is supported");
  }
  if (spec.regular_degree) {
    if (spec.require_irregular) {
      throw std::invalid_argument("generate: regular_degree contradicts require_irregular");
    }
    if (*spec.regular_degree < 1 || *spec.regular_degree > spec.delta_max) {
      throw std::invalid_argument("generate: regular_degree must be in [1, delta_max]");
    }
  }
  if (spec.objective == Objective::kMinAlgebraicConnectivity && !spec.regular_degree) {
    throw std::invalid_argument(
        "extremal_search: min_algebraic_connectivity requires regular_degree");
  }
}

// Canonical codes of all one-vertex extensions of parent: the new vertex is
// attached to a nonempty subset (of size <= cap) of unsaturated vertices of
// one part. Every connected bipartite class on k+1 vertices arises this way
// from some class on k vertices (remove a non-cut vertex).
std::vector<std::string> child_codes(const Graph& parent, int cap) {
  int k = parent.order();
  std::vector<std::string> out;
  std::vector<Edge> base = parent.edge_list();
  std::optional<Bipartition> parts = bipartition(parent);
  for (const std::vector<Vertex>* side : {&parts->x, &parts->y}) {
    std::vector<Vertex> targets;
    for (Vertex v : *side) {
      if (parent.degree(v) < cap) targets.push_back(v);
    }
    int t = static_cast<int>(targets.size());
    for (unsigned mask = 1; mask < (1u << t); ++mask) {
      if (std::popcount(mask) > cap) continue;
      std::vector<Edge> edges = base;
      for (int i = 0; i < t; ++i) {
        if (mask >> i & 1) edges.emplace_back(targets[static_cast<size_t>(i)], k);
      }
      out.push_back(canonical_form(Graph(k + 1, edges)));
    }
  }
  return out;
}

bool keep_leaf(const Graph& g, const SearchSpec& spec) {
  if (spec.regular_degree) {
    return g.is_regular() && g.max_degree() == *spec.regular_degree;
  }
  if (spec.require_irregular && g.is_regular()) return false;
  return true;
}

std::vector<Graph> finish_level(const std::set<std::string>& level, const SearchSpec& spec) {
  std::vector<Graph> out;
  for (const std::string& code : level) {
    Graph g = graph_from_code(code);
    if (keep_leaf(g, spec)) out.push_back(std::move(g));
  }
  return out;
}

std::set<std::string> seed_level() {
  return {canonical_form(Graph(1, {}))};
}

}  // namespace

std::vector<Graph> generate(const SearchSpec& spec) {
  validate_spec(spec);
  std::set<std::string> level = seed_level();
  for (int k = 1; k < spec.n; ++k) {
    std::vector<std::string> parents(level.begin(), level.end());
    std::vector<std::vector<std::string>> buckets(parents.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t p = 0; p < parents.size(); ++p) {
      buckets[p] = child_codes(graph_from_code(parents[p]), spec.delta_max);
    }
    std::set<std::string> next;
    for (const std::vector<std::string>& b : buckets) next.insert(b.begin(), b.end());
    level = std::move(next);
  }
  return finish_level(level, spec);
}

std::vector<Graph> generate_serial(const SearchSpec& spec) {
  validate_spec(spec);
  std::set<std::string> level = seed_level();
  for (int k = 1; k < spec.n; ++k) {
    std::set<std::string> next;
    for (const std::string& code : level) {
      for (std::string& child : child_codes(graph_from_code(code), spec.delta_max)) {
        next.insert(std::move(child));
      }
    }
    level = std::move(next);
  }
  return finish_level(level, spec);
}

ExtremalResult extremal_search(const SearchSpec& spec) {
  validate_spec(spec);
  std::vector<Graph> space;
  for (Graph& g : generate(spec)) {
    // The searched set fixes the maximum degree exactly (B(n, delta)), not
    // just the generation cap.
    if (spec.regular_degree || g.max_degree() == spec.delta_max) space.push_back(std::move(g));
  }
  if (space.empty()) {
    std::ostringstream msg;
    msg << "extremal_search: empty search space (n=" << spec.n << ", delta_max=" << spec.delta_max
        << ")";
    throw std::runtime_error(msg.str());
  }
  bool maximize = spec.objective == Objective::kMaxSpectralRadius;
  size_t count = space.size();
  std::vector<double> value(count);
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < count; ++i) {
    value[i] = maximize ? spectral_radius(space[i], 1e-12).rho
                        : algebraic_connectivity(space[i]);
  }
  auto better = [maximize](double a, double b) { return maximize ? a > b : a < b; };
  size_t best = 0;
  for (size_t i = 1; i < count; ++i) {
    if (better(value[i], value[best])) best = i;
  }
  std::vector<size_t> close;
  for (size_t i = 0; i < count; ++i) {
    if (std::abs(value[i] - value[best]) <= kTieMargin) close.push_back(i);
  }
  if (close.size() > 1) {
    // Dense re-adjudication at tightened tolerance.
    for (size_t i : close) {
      std::vector<double> eig =
          maximize ? jacobi_eigenvalues(adjacency_matrix(space[i]), 1e-15)
                   : jacobi_eigenvalues(laplacian_matrix(space[i]), 1e-15);
      value[i] = maximize ? eig.back() : eig[1];
    }
    best = close.front();
    for (size_t i : close) {
      if (better(value[i], value[best])) best = i;
    }
  }
  ExtremalResult result;
  result.winner = space[best];
  result.objective_value = value[best];
  result.graphs_considered = static_cast<long long>(count);
  result.runner_up_value = std::numeric_limits<double>::quiet_NaN();
  for (size_t i = 0; i < count; ++i) {
    if (i == best) continue;
    if (close.size() > 1 && std::abs(value[i] - value[best]) <= kResolvedMargin &&
        std::find(close.begin(), close.end(), i) != close.end()) {
      result.tie_set.push_back(space[i]);
      continue;
    }
    if (std::isnan(result.runner_up_value) || better(value[i], result.runner_up_value)) {
      result.runner_up_value = value[i];
    }
  }
  if (!spec.regular_degree) {
    result.certificates.push_back(verify_extremal_structure(result.winner, spec.delta_max));
    for (const Graph& g : result.tie_set) {
      result.certificates.push_back(verify_extremal_structure(g, spec.delta_max));
    }
  }
  return result;
}

StructureCertificate verify_extremal_structure(const Graph& g, int delta) {
  if (!g.is_connected()) {
    throw std::invalid_argument("verify_extremal_structure: graph must be connected");
  }
  if (g.is_regular()) {
    throw std::invalid_argument("verify_extremal_structure: graph must be irregular");
  }
  if (g.max_degree() != delta) {
    throw std::invalid_argument("verify_extremal_structure: maximum degree mismatch");
  }
  std::optional<Bipartition> parts = bipartition(g);
  if (!parts) {
    throw std::invalid_argument("verify_extremal_structure: graph must be bipartite");
  }
  StructureCertificate c;
  c.x_star = parts->x_star;
  c.y_star = parts->y_star;
  size_t stars = c.x_star.size() + c.y_star.size();
  c.star_count_ok = stars >= 2;
  c.induced_applicable = !c.x_star.empty() && !c.y_star.empty() && stars >= 3;
  c.induced_ok = true;
  if (c.induced_applicable) {
    for (int u : c.x_star) {
      for (int v : c.y_star) {
        if (!g.has_edge(u, v)) c.induced_ok = false;
      }
    }
  }
  SpectralResult sr = spectral_radius(g, 1e-12);
  c.w_hat = sr.w_hat;
  c.w_check = sr.w_check;
  c.dist = distance(g, sr.w_hat, sr.w_check);
  c.dist_bound = 2.0 * (g.order() - 1) / static_cast<double>(delta);
  c.distance_ok = c.dist <= c.dist_bound;
  c.all_ok = c.star_count_ok && c.induced_ok && c.distance_ok;
  return c;
}

std::string certificate_json(const StructureCertificate& c) {
  nlohmann::json j;
  j["star_count_ok"] = c.star_count_ok;
  j["induced_ok"] = c.induced_ok;
  j["induced_applicable"] = c.induced_applicable;
  j["distance_ok"] = c.distance_ok;
  j["x_star"] = c.x_star;
  j["y_star"] = c.y_star;
  j["w_hat"] = c.w_hat;
  j["w_check"] = c.w_check;
  j["dist"] = c.dist;
  j["dist_bound"] = c.dist_bound;
  j["all_ok"] = c.all_ok;
  return j.dump(2);
}

}  // namespace bipspec
