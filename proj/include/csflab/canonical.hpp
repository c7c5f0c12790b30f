#pragma once

#include <compare>
#include <string>
#include <vector>

#include "csflab/graph.hpp"

namespace csflab {

// Total-order key identifying an isomorphism class: the graph6 string of the
// canonically relabeled graph. Two graphs are isomorphic iff their keys are
// equal; lexicographic order on keys is the deterministic order used by the
// enumeration and census layers.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string g6) : g6_(std::move(g6)) {}

  const std::string& graph6() const { return g6_; }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string g6_;
};

struct CanonicalForm {
  CanonicalKey key;
  // Vertex v of the input graph lands at position relabeling[v] in the
  // canonical representative.
  std::vector<int> relabeling;
};

// Canonical labeling by iterated neighborhood refinement with a brute-force
// search over the surviving cell orderings, taking the minimum adjacency
// encoding. Deterministic; invariant under relabeling of the input.
CanonicalForm canonical_form(const Graph& g);

CanonicalKey canonical_key(const Graph& g);

// The canonical representative itself (serializes to key.graph6()).
Graph canonical_graph(const Graph& g);

}  // namespace csflab
