// Canonical forms for isomorphism rejection at small order (n <= 16).
#ifndef BIPSPEC_CANONICAL_HPP
#define BIPSPEC_CANONICAL_HPP

#include <cstdint>
#include <string>

#include "bipspec/graph.hpp"

namespace bipspec {

constexpr int kCanonicalMaxOrder = 16;

/// Canonical byte string from adjacency bit rows; rows[v] has bit w set iff
/// vw is an edge. Equal strings iff the graphs are isomorphic.
std::string canonical_code(int n, const uint16_t* rows);

/// Canonical byte string of g: [n] followed by the packed upper-triangle bit
/// matrix under a canonical labeling (least code over an isomorphism-
/// invariant refinement tree). Equal strings iff isomorphic; deterministic
/// across runs. Throws std::invalid_argument for n > 16.
std::string canonical_form(const Graph& g);

/// Rebuilds the canonically labeled graph from canonical_code output.
Graph graph_from_code(const std::string& code);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace bipspec

#endif
