#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "csflab/partition.hpp"

namespace csflab {

inline constexpr int kMaxVertices = 16;

// Simple undirected graph on labeled vertices 0..n-1, n <= 16, no loops.
// Adjacency lives in per-vertex bitmasks, so copies are cheap values; the
// library's operations take graphs by const reference and never mutate them.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  std::uint16_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  // (u,v) pairs with u < v, ascending lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  // perm maps old label -> new label; perm must be a bijection on 0..n-1.
  Graph relabeled(const std::vector<int>& perm) const;

  // Vertex masks of connected components, ordered by smallest member.
  std::vector<std::uint16_t> component_masks() const;
  bool is_connected() const;
  bool is_forest() const;
  bool is_tree() const;

  static Graph disjoint_union(const Graph& a, const Graph& b);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

// Component sizes, weakly decreasing. Requires n >= 1.
Partition part_of(const Graph& g);

// Length of a shortest cycle; absent for forests.
std::optional<int> girth(const Graph& g);

// Lexicographically least shortest cycle as a vertex sequence (least starting
// vertex, then least continuation); absent for forests.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

// Subgraph induced by the masked vertices, relabeled 0..k-1 in ascending
// original order.
Graph induced_subgraph(const Graph& g, std::uint16_t vertex_mask);

enum class SpecialFamily { PathFamily, StarFamily, CompleteMultipartite };

// P_lambda: disjoint paths of the part sizes; ST_lambda: disjoint stars;
// K_lambda: complete multipartite with class sizes lambda. Vertices are laid
// out block by block in part order.
Graph generate_special(SpecialFamily kind, const Partition& lambda);

}  // namespace csflab
