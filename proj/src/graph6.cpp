#include "bipspec/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace bipspec {

namespace {

// Bits run over the upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
// Packed into 6-bit groups, each stored as one printable byte value+63.
constexpr int kOffset = 63;

std::string strip(const std::string& text) {
  std::string s = text;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6: order above 62 needs the long form");
  std::string out;
  out.push_back(static_cast<char>(n + kOffset));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kOffset));
  return out;
}

Graph graph6_decode(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  if (s[0] == '~') throw std::invalid_argument("graph6: long form (n > 62) not supported");
  for (char c : s)
    if (c < kOffset || c > 126)
      throw std::invalid_argument("graph6: byte out of printable range");
  int n = s[0] - kOffset;
  size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (s.size() != 1 + need)
    throw std::invalid_argument("graph6: length does not match the declared order");
  std::vector<Edge> edges;
  size_t pos = 1;
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = s[pos++] - kOffset;
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) edges.emplace_back(i, j);
      --nbits;
    }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  return Graph(n, edges);
}

std::string edge_list_encode(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph edge_list_decode(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header value");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int k = 0; k < m; ++k) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: fewer edges than declared");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph edge_list_decode(const std::string& text) {
  std::istringstream in(text);
  return edge_list_decode(in);
}

}  // namespace bipspec
