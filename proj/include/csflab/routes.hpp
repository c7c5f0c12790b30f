#pragma once

#include <array>
#include <utility>
#include <vector>

#include "csflab/graph.hpp"

namespace csflab {

// One local rewrite. The witness (v1,v2,v3) requires edges v1v2 and v1v3 and
// non-edge v2v3 in the source; then
//   target            = source - v1v3 + v2v3
//   positive_remainder = source - v1v2
//   negative_remainder = source - v1v2 - v1v3 + v2v3
// and the four chromatic symmetric functions satisfy
//   csf(source) = csf(target) + csf(positive) - csf(negative).
// A step preserves vertex count, edge count, and component sizes; both
// remainders drop one edge, which on a forest splits one component.
struct Step {
  Graph source;
  Graph target;
  Graph positive_remainder;
  Graph negative_remainder;
  int v1 = 0;
  int v2 = 0;
  int v3 = 0;
};

Step make_step(const Graph& g, int v1, int v2, int v3);

// All valid witnesses of g, ascending lexicographic in (v1,v2,v3).
std::vector<std::array<int, 3>> step_witnesses(const Graph& g);

// Chain of steps: k graphs joined by k-1 steps (k >= 1).
struct Route {
  std::vector<Graph> graphs;
  std::vector<Step> steps;

  static Route single(const Graph& g);
  const Graph& first() const { return graphs.front(); }
  const Graph& last() const { return graphs.back(); }
  int step_count() const { return static_cast<int>(steps.size()); }
  // Consecutive graphs joined by their recorded steps; throws on violation.
  void validate() const;
  // Other must begin exactly at this route's last graph.
  void append(const Route& other);
};

// Reversal: every step is reversible with the witness roles of v1 and v2
// swapped.
Route reverse(const Route& r);
// Relabel every graph and witness; perm maps old label -> new label.
Route relabeled(const Route& r, const std::vector<int>& perm);

// The two remainder sequences of a route. Telescoping the per-step identity
// gives csf(first) = csf(last) + sum csf(P_i) - sum csf(N_i).
struct March {
  std::vector<Graph> positive;
  std::vector<Graph> negative;
};

March march(const Route& r);

// Forest -> disjoint paths of the same component sizes. Each non-path
// component is fixed by repeatedly sliding one off-path subtree along the
// current longest path onto its end, which strictly lengthens the longest
// path.
Route route_to_path_form(const Graph& forest);

// Forest -> disjoint stars: repeatedly re-attach a neighbor-of-neighbor to a
// maximum-degree vertex of the first non-star component.
Route route_to_star_form(const Graph& forest);

// Join two routes that end in isomorphic graphs: r1 followed by the reversal
// of r2, relabeled so the junction graphs are equal vertex for vertex. The
// result runs from r1.first() to a relabeling of r2.first().
Route glue_routes(Route r1, const Route& r2);

// Route from f1 to (a relabeling of) f2; requires equal component-size
// partitions. First graph is f1 exactly; the last is canonically equal to f2.
Route route_between_forests(const Graph& f1, const Graph& f2);

// Graph with girth g > 3 -> graph with girth 3, in g-3 steps that slide one
// chord around a lexicographically least shortest cycle. Identity on girth-3
// input; forests are a domain error.
Route route_to_girth3(const Graph& g);

// Splitting on a triangle edge pair: for triangle edges e1=(a,b), e2=(a,c),
// e3=(b,c),
//   csf(G) = csf(G-e1) + csf(G-e2) - csf(G-e1-e2).
struct TriangleSplit {
  Graph minus_first;    // G - e1
  Graph minus_second;   // G - e2
  Graph minus_both;     // G - e1 - e2
};

TriangleSplit triangle_split(const Graph& g, std::pair<int, int> e1,
                             std::pair<int, int> e2, std::pair<int, int> e3);

// Neighbor re-attachment route: move every neighbor of u (other than w and
// w's neighbors) over to w, one step per neighbor. Returns the route
// H_0 = g, ..., H_k and the pair P' = g - wu, N' = H_k - wu satisfying
//   csf(g) = csf(H_k) + csf(P') - csf(N').
// Inside the route the remainders telescope: N_i = P_{i+1} exactly.
struct DncRoute {
  Route route;
  Graph positive;  // g - wu
  Graph negative;  // last - wu
};

DncRoute dnc_route(const Graph& g, int w, int u);

}  // namespace csflab
