#include "bipspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace bipspec {

namespace {

using Partition = std::vector<std::vector<uint8_t>>;

// Packs the upper triangle (column order, as in graph6) of the adjacency
// matrix relabeled by pos_to_vertex, MSB-first, prefixed with the order byte.
std::string pack_code(int n, const uint8_t* pos_to_vertex, const uint16_t* rows) {
  std::string out;
  out.push_back(static_cast<char>(n));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      int bit = rows[pos_to_vertex[i]] >> pos_to_vertex[j] & 1;
      acc = acc << 1 | bit;
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

class Searcher {
 public:
  Searcher(int n, const uint16_t* rows) : n_(n), rows_(rows) {}

  std::string run() {
    Partition start(1);
    for (int v = 0; v < n_; ++v) start[0].push_back(static_cast<uint8_t>(v));
    dfs(std::move(start));
    return best_;
  }

 private:
  // Splits cells by neighbor counts into other cells until equitable. Subcell
  // order (ascending count) depends only on isomorphism-invariant data, so the
  // search tree is equivariant under isomorphisms.
  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t s = 0; s < cells.size() && !changed; ++s) {
        uint16_t smask = 0;
        for (uint8_t v : cells[s]) smask = static_cast<uint16_t>(smask | (1u << v));
        for (size_t t = 0; t < cells.size() && !changed; ++t) {
          std::vector<uint8_t>& cell = cells[t];
          if (cell.size() < 2) continue;
          int first = std::popcount(static_cast<unsigned>(rows_[cell[0]] & smask));
          bool uniform = true;
          for (uint8_t v : cell) {
            if (std::popcount(static_cast<unsigned>(rows_[v] & smask)) != first) {
              uniform = false;
              break;
            }
          }
          if (uniform) continue;
          std::array<std::vector<uint8_t>, kCanonicalMaxOrder + 1> buckets;
          for (uint8_t v : cell) {
            buckets[std::popcount(static_cast<unsigned>(rows_[v] & smask))].push_back(v);
          }
          Partition next(cells.begin(), cells.begin() + static_cast<long>(t));
          for (const std::vector<uint8_t>& b : buckets) {
            if (!b.empty()) next.push_back(b);
          }
          next.insert(next.end(), cells.begin() + static_cast<long>(t) + 1, cells.end());
          cells = std::move(next);
          changed = true;
        }
      }
    }
  }

  void dfs(Partition cells) {
    refine(cells);
    size_t branch = cells.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        branch = i;
        break;
      }
    }
    if (branch == cells.size()) {
      std::array<uint8_t, kCanonicalMaxOrder> perm{};
      for (size_t i = 0; i < cells.size(); ++i) perm[i] = cells[i][0];
      std::string code = pack_code(n_, perm.data(), rows_);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    // Branch on one representative per twin class: if an earlier vertex in the
    // cell has the same open (N(u)=N(v)) or closed (N[u]=N[v]) neighborhood,
    // the transposition is an automorphism fixing the rest of the partition,
    // so the skipped branch yields the same leaf codes.
    const std::vector<uint8_t> cell = cells[branch];
    std::vector<uint16_t> seen_open;
    std::vector<uint16_t> seen_closed;
    for (uint8_t v : cell) {
      uint16_t open = rows_[v];
      uint16_t closed = static_cast<uint16_t>(open | (1u << v));
      bool twin =
          std::find(seen_open.begin(), seen_open.end(), open) != seen_open.end() ||
          std::find(seen_closed.begin(), seen_closed.end(), closed) != seen_closed.end();
      seen_open.push_back(open);
      seen_closed.push_back(closed);
      if (twin) continue;
      Partition child(cells.begin(), cells.begin() + static_cast<long>(branch));
      child.push_back({v});
      std::vector<uint8_t> rest;
      for (uint8_t w : cell) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<long>(branch) + 1, cells.end());
      dfs(std::move(child));
    }
  }

  int n_;
  const uint16_t* rows_;
  std::string best_;
};

}  // namespace

std::string canonical_code(int n, const uint16_t* rows) {
  if (n < 1 || n > kCanonicalMaxOrder) {
    throw std::invalid_argument("canonical_code: order must be in [1, 16]");
  }
  return Searcher(n, rows).run();
}

std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw std::invalid_argument("canonical_form: order exceeds 16");
  }
  std::array<uint16_t, kCanonicalMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.neighbors(v)) rows[v] = static_cast<uint16_t>(rows[v] | (1u << w));
  }
  return canonical_code(g.order(), rows.data());
}

Graph graph_from_code(const std::string& code) {
  if (code.empty()) throw std::invalid_argument("graph_from_code: empty code");
  int n = static_cast<unsigned char>(code[0]);
  if (n < 1 || n > kCanonicalMaxOrder) {
    throw std::invalid_argument("graph_from_code: bad order byte");
  }
  size_t want = 1 + (static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8;
  if (code.size() != want) throw std::invalid_argument("graph_from_code: bad length");
  std::vector<Edge> edges;
  size_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      int byte = static_cast<unsigned char>(code[1 + pos / 8]);
      if (byte >> (7 - pos % 8) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace bipspec
