#include "csflab/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "csflab/graph_io.hpp"

namespace csflab {

namespace {

// 120 adjacency bits of the relabeled graph, upper triangle column by column,
// most significant first.  Lexicographic minimum over labelings is canonical.
using Encoding = std::array<std::uint64_t, 2>;

Encoding encode(const Graph& g, const std::vector<int>& position) {
  int n = g.vertex_count();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[position[v]] = v;
  Encoding words{0, 0};
  int index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(at[u], at[v]))
        words[index / 64] |= std::uint64_t(1) << (63 - index % 64);
      ++index;
    }
  }
  return words;
}

// Split cells by sorted neighbor-color multisets until stable.  New colors are
// ranks of sorted signatures, so equal colorings refine identically.
void refine(const Graph& g, std::vector<int>& colors) {
  int n = g.vertex_count();
  std::vector<int> distinct = colors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  int classes = static_cast<int>(distinct.size());
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      for (int u = 0; u < n; ++u)
        if ((g.neighbors(v) >> u) & 1) sig[v].push_back(colors[u]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colors[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    int now = static_cast<int>(sorted.size());
    if (now == classes) return;
    classes = now;
  }
}

struct Search {
  const Graph& g;
  std::optional<Encoding> best;
  std::vector<int> best_position;

  void run(std::vector<int> colors) {
    refine(g, colors);
    int n = g.vertex_count();
    std::vector<int> count(n + 1, 0);
    for (int v = 0; v < n; ++v) ++count[colors[v]];
    int cell = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        cell = c;
        break;
      }
    if (cell == -1) {
      Encoding e = encode(g, colors);
      if (!best || e < *best) {
        best = e;
        best_position = colors;
      }
      return;
    }
    std::vector<int> branched;
    for (int v = 0; v < n; ++v) {
      if (colors[v] != cell) continue;
      bool twin = false;
      for (int u : branched) {
        std::uint16_t a = g.neighbors(u) & ~(std::uint16_t(1) << v);
        std::uint16_t b = g.neighbors(v) & ~(std::uint16_t(1) << u);
        if (a == b) {
          twin = true;  // transposing u,v is an automorphism
          break;
        }
      }
      if (twin) continue;
      branched.push_back(v);
      std::vector<int> child(n);
      for (int u = 0; u < n; ++u)
        child[u] = 2 * colors[u] + (colors[u] == cell && u != v ? 1 : 0);
      run(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Search s{g, std::nullopt, {}};
  s.run(std::vector<int>(g.vertex_count(), 0));
  Graph canon = g.relabeled(s.best_position);
  return CanonicalForm{CanonicalKey(to_graph6(canon)), s.best_position};
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

Graph canonical_graph(const Graph& g) {
  CanonicalForm f = canonical_form(g);
  return g.relabeled(f.relabeling);
}

}  // namespace csflab
