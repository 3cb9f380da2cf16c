// Isomorph-free exhaustive generation of connected bipartite graphs with a
// degree cap, extremal search over them, and structural certificates for the
// winners.
#ifndef BIPSPEC_ENUMERATE_HPP
#define BIPSPEC_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bipspec/graph.hpp"

namespace bipspec {

enum class Objective { kMaxSpectralRadius, kMinAlgebraicConnectivity };

struct SearchSpec {
  int n = 0;
  int delta_max = 0;               // degree bound (cap) during generation
  bool require_irregular = true;
  bool require_bipartite = true;   // only true is supported
  bool require_connected = true;   // only true is supported
  std::optional<int> regular_degree;  // exploration mode: keep k-regular only
  Objective objective = Objective::kMaxSpectralRadius;
};

constexpr int kGenerateMaxOrder = 12;  // desk-scale limit

/// Every isomorphism class satisfying spec, exactly once, as canonically
/// labeled graphs in canonical-code order (deterministic). Grows one vertex
/// per level, attaching the new vertex to a nonempty admissible subset of one
/// part of each parent, deduplicating levels by canonical form. Parallelized
/// over parents with OpenMP; output is identical to generate_serial.
std::vector<Graph> generate(const SearchSpec& spec);

/// Single-threaded reference implementation with identical output.
std::vector<Graph> generate_serial(const SearchSpec& spec);

/// Lemma 6 / Lemma 7 certificate for one graph.
struct StructureCertificate {
  bool star_count_ok = false;   // |X* union Y*| >= 2
  bool induced_ok = false;      // X*-Y* induced subgraph complete bipartite
  bool induced_applicable = false;  // |X*|>=1, |Y*|>=1, |X*|+|Y*|>=3
  bool distance_ok = false;     // dist(w_hat, w_check) <= 2(n-1)/delta
  std::vector<int> x_star;
  std::vector<int> y_star;
  int w_hat = 0;
  int w_check = 0;
  int dist = 0;
  double dist_bound = 0.0;
  bool all_ok = false;
};

struct ExtremalResult {
  Graph winner;                  // canonically labeled
  double objective_value = 0.0;
  double runner_up_value = 0.0;  // NaN when the space has a single class
  std::vector<Graph> tie_set;    // unresolved ties (excludes winner), surfaced
  long long graphs_considered = 0;
  std::vector<StructureCertificate> certificates;  // winner, then tie members
};

/// Best graph under spec.objective among the generated classes with maximum
/// degree exactly delta_max (or regular_degree when set). Candidates within
/// 1e-9 of the best are re-adjudicated by the dense eigensolver; ties still
/// within 1e-12 after that are reported in tie_set, never broken silently.
/// Throws std::runtime_error when the search space is empty.
ExtremalResult extremal_search(const SearchSpec& spec);

/// Evaluates the Lemma 6 clauses and the Lemma 7 distance bound. Requires g
/// connected, bipartite, irregular, with maximum degree exactly delta.
StructureCertificate verify_extremal_structure(const Graph& g, int delta);

std::string certificate_json(const StructureCertificate& c);

}  // namespace bipspec

#endif
