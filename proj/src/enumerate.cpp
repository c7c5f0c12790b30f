#include "csflab/enumerate.hpp"

#include <map>
#include <utility>

#include "csflab/canonical.hpp"
#include "csflab/errors.hpp"
#include "csflab/partition.hpp"

namespace csflab {

namespace {

std::vector<Graph> keys_in_order(std::map<CanonicalKey, Graph>& seen) {
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(g);
  return out;
}

// Every class on n vertices is reachable by attaching a fresh vertex to some
// class on n-1, so extending all representatives by all masks is complete.
std::vector<Graph> all_graphs(int n) {
  if (n == 1) return {Graph(1)};
  std::vector<Graph> prev = all_graphs(n - 1);
  std::map<CanonicalKey, Graph> seen;
  for (const Graph& p : prev) {
    for (std::uint16_t mask = 0; mask < (std::uint16_t(1) << (n - 1));
         ++mask) {
      Graph g(n);
      for (auto [u, v] : p.edges()) g.add_edge(u, v);
      for (int u = 0; u < n - 1; ++u)
        if ((mask >> u) & 1) g.add_edge(u, n - 1);
      CanonicalForm f = canonical_form(g);
      seen.emplace(f.key, g.relabeled(f.relabeling));
    }
  }
  return keys_in_order(seen);
}

// Every tree with n >= 2 has a leaf, so attaching a fresh leaf at every vertex
// of every class on n-1 is complete.
std::vector<Graph> all_trees(int n) {
  if (n == 1) return {Graph(1)};
  std::vector<Graph> prev = all_trees(n - 1);
  std::map<CanonicalKey, Graph> seen;
  for (const Graph& p : prev) {
    for (int v = 0; v < n - 1; ++v) {
      Graph g(n);
      for (auto [u, w] : p.edges()) g.add_edge(u, w);
      g.add_edge(v, n - 1);
      CanonicalForm f = canonical_form(g);
      seen.emplace(f.key, g.relabeled(f.relabeling));
    }
  }
  return keys_in_order(seen);
}

std::vector<Graph> all_forests(int n) {
  std::vector<std::vector<Graph>> trees_by_size(n + 1);
  for (int s = 1; s <= n; ++s) trees_by_size[s] = all_trees(s);
  std::map<CanonicalKey, Graph> seen;
  for (const Partition& lam : enumerate_partitions(n)) {
    const std::vector<int>& parts = lam.parts();
    // One tree class per part, non-decreasing indices across equal sizes.
    auto build = [&](auto&& self, std::size_t pos, int min_index,
                     const Graph& acc) -> void {
      if (pos == parts.size()) {
        CanonicalForm f = canonical_form(acc);
        seen.emplace(f.key, acc.relabeled(f.relabeling));
        return;
      }
      int s = parts[pos];
      int lo = (pos > 0 && parts[pos - 1] == s) ? min_index : 0;
      for (int i = lo; i < static_cast<int>(trees_by_size[s].size()); ++i)
        self(self, pos + 1, i,
             Graph::disjoint_union(acc, trees_by_size[s][i]));
    };
    build(build, 0, 0, Graph(0));
  }
  return keys_in_order(seen);
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, GraphClass cls) {
  if (n < 1) throw DomainError("enumeration requires n >= 1");
  switch (cls) {
    case GraphClass::All:
      check_vertex_guard(n, 9, "enumerate_graphs(All)");
      return all_graphs(n);
    case GraphClass::Trees:
      check_vertex_guard(n, 12, "enumerate_graphs(Trees)");
      return all_trees(n);
    case GraphClass::Forests:
      check_vertex_guard(n, 12, "enumerate_graphs(Forests)");
      return all_forests(n);
  }
  throw DomainError("unknown graph class");
}

}  // namespace csflab
