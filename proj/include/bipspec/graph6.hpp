// graph6 text encoding (short form, n <= 62) and the "n m" edge-list format.
#ifndef BIPSPEC_GRAPH6_HPP
#define BIPSPEC_GRAPH6_HPP

#include <iosfwd>
#include <string>

#include "bipspec/graph.hpp"

namespace bipspec {

/// Encodes into the printable graph6 format, bit-exact. Short form only,
/// so the order must be at most 62.
std::string graph6_encode(const Graph& g);

/// Decodes a graph6 line (surrounding whitespace and an optional
/// ">>graph6<<" header are accepted). Throws std::invalid_argument on
/// malformed input or on the long form (n > 62).
Graph graph6_decode(const std::string& text);

/// Edge-list text format: a "n m" header line followed by one "u v" line
/// per edge, edges sorted.
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::istream& in);
Graph edge_list_decode(const std::string& text);

}  // namespace bipspec

#endif
