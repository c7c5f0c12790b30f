#include "csflab/graph.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <queue>

#include "csflab/errors.hpp"

namespace csflab {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw DomainError("vertex count must be between 0 and 16");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loops are not allowed");
  adj_[u] |= std::uint16_t(1) << v;
  adj_[v] |= std::uint16_t(1) << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint16_t(1) << v);
  adj_[v] &= ~(std::uint16_t(1) << u);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw DomainError("relabeling permutation has wrong size");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

std::vector<std::uint16_t> Graph::component_masks() const {
  std::vector<std::uint16_t> out;
  std::uint16_t seen = 0;
  for (int v = 0; v < n_; ++v) {
    if ((seen >> v) & 1) continue;
    std::uint16_t comp = std::uint16_t(1) << v;
    for (;;) {
      std::uint16_t grown = comp;
      for (int u = 0; u < n_; ++u)
        if ((comp >> u) & 1) grown |= adj_[u];
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    seen |= comp;
  }
  return out;
}

bool Graph::is_connected() const { return component_masks().size() <= 1; }

bool Graph::is_forest() const {
  // Acyclic iff every component spans one more vertex than it has edges.
  int total_edges = edge_count();
  int components = static_cast<int>(component_masks().size());
  return total_edges == n_ - components;
}

bool Graph::is_tree() const { return is_forest() && is_connected() && n_ >= 1; }

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  if (a.vertex_count() + b.vertex_count() > kMaxVertices)
    throw DomainError("disjoint union exceeds 16 vertices");
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  int off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

Partition part_of(const Graph& g) {
  if (g.vertex_count() < 1) throw DomainError("part_of requires n >= 1");
  std::vector<int> sizes;
  for (std::uint16_t mask : g.component_masks())
    sizes.push_back(std::popcount(mask));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return Partition(sizes);
}

std::optional<int> girth(const Graph& g) {
  // Minimum over BFS roots of the first closing edge's cycle bound; exact for
  // a root on a shortest cycle, never an underestimate elsewhere.
  int n = g.vertex_count();
  int best = INT_MAX;
  for (int r = 0; r < n; ++r) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (!((g.neighbors(u) >> w) & 1)) continue;
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == INT_MAX) return std::nullopt;
  return best;
}

namespace {

std::vector<int> bfs_dist_restricted(const Graph& g, int src,
                                     std::uint16_t allowed) {
  int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    std::uint16_t nb = g.neighbors(u) & allowed;
    for (int w = 0; w < n; ++w) {
      if (!((nb >> w) & 1) || dist[w] != -1) continue;
      dist[w] = dist[u] + 1;
      q.push(w);
    }
  }
  return dist;
}

}  // namespace

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
  auto len = girth(g);
  if (!len) return std::nullopt;
  int target = *len;
  int n = g.vertex_count();

  for (int start = 0; start < n; ++start) {
    // Cycle vertices other than the start must be larger, so the found
    // sequence is the lexicographic minimum over shortest cycles.
    std::uint16_t allowed = 0;
    for (int v = start; v < n; ++v) allowed |= std::uint16_t(1) << v;
    std::vector<int> back = bfs_dist_restricted(g, start, allowed);

    std::vector<int> path{start};
    std::uint16_t used = std::uint16_t(1) << start;
    std::vector<int> found;
    std::function<bool(int)> dfs = [&](int current) -> bool {
      int size = static_cast<int>(path.size());
      if (size == target)
        return g.has_edge(current, start) && (found = path, true);
      for (int w = start + 1; w < n; ++w) {
        if (!((g.neighbors(current) >> w) & 1)) continue;
        if ((used >> w) & 1) continue;
        if (back[w] == -1 || back[w] > target - size) continue;
        path.push_back(w);
        used |= std::uint16_t(1) << w;
        if (dfs(w)) return true;
        used &= ~(std::uint16_t(1) << w);
        path.pop_back();
      }
      return false;
    };
    if (dfs(start)) return found;
  }
  return std::nullopt;  // unreachable when girth exists
}

Graph induced_subgraph(const Graph& g, std::uint16_t vertex_mask) {
  std::vector<int> map(g.vertex_count(), -1);
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((vertex_mask >> v) & 1) map[v] = k++;
  Graph out(k);
  for (auto [u, v] : g.edges())
    if (map[u] != -1 && map[v] != -1) out.add_edge(map[u], map[v]);
  return out;
}

Graph generate_special(SpecialFamily kind, const Partition& lambda) {
  int n = lambda.weight();
  if (n < 1 || n > kMaxVertices)
    throw DomainError("special family weight must be between 1 and 16");
  Graph g(n);
  if (kind == SpecialFamily::CompleteMultipartite) {
    // Edges between distinct blocks.
    std::vector<int> block(n);
    int v = 0, b = 0;
    for (int p : lambda.parts()) {
      for (int i = 0; i < p; ++i) block[v++] = b;
      ++b;
    }
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (block[u] != block[w]) g.add_edge(u, w);
    return g;
  }
  int base = 0;
  for (int p : lambda.parts()) {
    if (kind == SpecialFamily::PathFamily) {
      for (int i = 1; i < p; ++i) g.add_edge(base + i - 1, base + i);
    } else {
      for (int i = 1; i < p; ++i) g.add_edge(base, base + i);
    }
    base += p;
  }
  return g;
}

}  // namespace csflab
