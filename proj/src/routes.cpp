#include "csflab/routes.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "csflab/canonical.hpp"
#include "csflab/errors.hpp"

namespace csflab {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw DomainError(msg);
}

void push_step(Route& r, int v1, int v2, int v3) {
  Step s = make_step(r.last(), v1, v2, v3);
  r.graphs.push_back(s.target);
  r.steps.push_back(std::move(s));
}

std::vector<int> component_vertices(std::uint16_t mask) {
  std::vector<int> out;
  for (int v = 0; v < kMaxVertices; ++v)
    if ((mask >> v) & 1) out.push_back(v);
  return out;
}

std::vector<int> bfs_dist(const Graph& g, int src, std::uint16_t comp) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    std::uint16_t nb = g.neighbors(x) & comp;
    for (int y = 0; y < g.vertex_count(); ++y)
      if (((nb >> y) & 1) && dist[y] == -1) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

// Lexicographically least longest path of one component, as a vertex sequence.
std::vector<int> longest_path(const Graph& g, std::uint16_t comp) {
  std::vector<int> verts = component_vertices(comp);
  std::vector<std::vector<int>> dist;
  dist.reserve(verts.size());
  for (int v : verts) dist.push_back(bfs_dist(g, v, comp));
  auto d = [&](int ai, int b) { return dist[ai][b]; };

  int best = 0;
  for (std::size_t ai = 0; ai < verts.size(); ++ai)
    for (int b : verts) best = std::max(best, d(ai, b));

  std::vector<int> least;
  for (std::size_t ai = 0; ai < verts.size(); ++ai) {
    for (int b : verts) {
      if (d(ai, b) != best) continue;
      // Greedy geodesic: all geodesics step the distance-to-b down by one, so
      // taking the least eligible neighbor is the lexicographic minimum.
      std::vector<int> db = bfs_dist(g, b, comp);
      std::vector<int> path{verts[ai]};
      int cur = verts[ai];
      while (cur != b) {
        for (int y = 0; y < g.vertex_count(); ++y) {
          if (((g.neighbors(cur) >> y) & 1) && ((comp >> y) & 1) &&
              db[y] == db[cur] - 1) {
            path.push_back(y);
            cur = y;
            break;
          }
        }
      }
      if (least.empty() || path < least) least = path;
    }
  }
  return least;
}

bool component_is_path(const Graph& g, std::uint16_t comp) {
  int size = std::popcount(comp);
  if (size <= 2) return true;
  int ends = 0;
  for (int v : component_vertices(comp)) {
    int deg = std::popcount(g.neighbors(v));
    if (deg > 2) return false;
    if (deg == 1) ++ends;
  }
  return ends == 2;
}

bool component_is_star(const Graph& g, std::uint16_t comp) {
  int size = std::popcount(comp);
  if (size <= 2) return true;
  for (int v : component_vertices(comp))
    if (std::popcount(g.neighbors(v)) == size - 1) return true;
  return false;
}

}  // namespace

Step make_step(const Graph& g, int v1, int v2, int v3) {
  int n = g.vertex_count();
  require(v1 >= 0 && v1 < n && v2 >= 0 && v2 < n && v3 >= 0 && v3 < n,
          "step witness vertex out of range");
  require(v1 != v2 && v1 != v3 && v2 != v3,
          "step witness vertices must be distinct");
  require(g.has_edge(v1, v2), "step witness needs edge v1v2");
  require(g.has_edge(v1, v3), "step witness needs edge v1v3");
  require(!g.has_edge(v2, v3), "step witness needs non-edge v2v3");
  Step s;
  s.source = g;
  s.target = g.without_edge(v1, v3).with_edge(v2, v3);
  s.positive_remainder = g.without_edge(v1, v2);
  s.negative_remainder = s.positive_remainder.without_edge(v1, v3).with_edge(v2, v3);
  s.v1 = v1;
  s.v2 = v2;
  s.v3 = v3;
  return s;
}

std::vector<std::array<int, 3>> step_witnesses(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::array<int, 3>> out;
  for (int v1 = 0; v1 < n; ++v1)
    for (int v2 = 0; v2 < n; ++v2) {
      if (v2 == v1 || !g.has_edge(v1, v2)) continue;
      for (int v3 = 0; v3 < n; ++v3) {
        if (v3 == v1 || v3 == v2) continue;
        if (g.has_edge(v1, v3) && !g.has_edge(v2, v3))
          out.push_back({v1, v2, v3});
      }
    }
  return out;
}

Route Route::single(const Graph& g) {
  Route r;
  r.graphs.push_back(g);
  return r;
}

void Route::validate() const {
  require(!graphs.empty(), "route must contain at least one graph");
  require(graphs.size() == steps.size() + 1,
          "route must have one more graph than steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    require(s.source == graphs[i], "step source differs from route graph");
    Step rebuilt = make_step(graphs[i], s.v1, s.v2, s.v3);
    require(rebuilt.target == graphs[i + 1],
            "step target differs from the next route graph");
    require(rebuilt.target == s.target &&
                rebuilt.positive_remainder == s.positive_remainder &&
                rebuilt.negative_remainder == s.negative_remainder,
            "step remainders are inconsistent with the witness");
  }
}

void Route::append(const Route& other) {
  require(!graphs.empty() && !other.graphs.empty(),
          "cannot append empty routes");
  require(graphs.back() == other.graphs.front(),
          "appended route must start at this route's last graph");
  graphs.insert(graphs.end(), other.graphs.begin() + 1, other.graphs.end());
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

Route reverse(const Route& r) {
  Route out;
  out.graphs.assign(r.graphs.rbegin(), r.graphs.rend());
  for (int i = r.step_count() - 1; i >= 0; --i) {
    const Step& s = r.steps[i];
    out.steps.push_back(make_step(r.graphs[i + 1], s.v2, s.v1, s.v3));
  }
  return out;
}

Route relabeled(const Route& r, const std::vector<int>& perm) {
  Route out;
  for (const Graph& g : r.graphs) out.graphs.push_back(g.relabeled(perm));
  for (const Step& s : r.steps)
    out.steps.push_back(make_step(s.source.relabeled(perm), perm[s.v1],
                                  perm[s.v2], perm[s.v3]));
  return out;
}

March march(const Route& r) {
  March m;
  for (const Step& s : r.steps) {
    m.positive.push_back(s.positive_remainder);
    m.negative.push_back(s.negative_remainder);
  }
  return m;
}

Route route_to_path_form(const Graph& forest) {
  require(forest.is_forest(), "route_to_path_form requires a forest");
  Route r = Route::single(forest);
  for (;;) {
    const Graph g = r.last();
    std::uint16_t pending = 0;
    std::vector<int> line;
    for (std::uint16_t comp : g.component_masks()) {
      if (component_is_path(g, comp)) continue;
      line = longest_path(g, comp);
      pending = comp;
      break;
    }
    if (!pending) break;
    // Least path vertex with an off-path neighbor; slide that neighbor's
    // subtree along the path onto its far end. The longest path then grows,
    // so the per-component loop terminates.
    std::uint16_t on_path = 0;
    for (int v : line) on_path |= std::uint16_t(1) << v;
    int v1 = -1, sub = -1;
    for (int v : component_vertices(pending)) {
      if (!((on_path >> v) & 1)) continue;
      std::uint16_t off = g.neighbors(v) & pending & ~on_path;
      if (off) {
        v1 = v;
        sub = std::countr_zero(off);
        break;
      }
    }
    require(v1 != -1, "non-path component lost its off-path branch");
    int pos = static_cast<int>(std::find(line.begin(), line.end(), v1) -
                               line.begin());
    for (std::size_t j = pos; j + 1 < line.size(); ++j)
      push_step(r, line[j], line[j + 1], sub);
  }
  return r;
}

Route route_to_star_form(const Graph& forest) {
  require(forest.is_forest(), "route_to_star_form requires a forest");
  Route r = Route::single(forest);
  for (;;) {
    const Graph g = r.last();
    std::uint16_t pending = 0;
    for (std::uint16_t comp : g.component_masks()) {
      if (component_is_star(g, comp)) continue;
      pending = comp;
      break;
    }
    if (!pending) break;
    int w = -1, wdeg = -1;
    for (int v : component_vertices(pending)) {
      int deg = std::popcount(g.neighbors(v));
      if (deg > wdeg) {
        w = v;
        wdeg = deg;
      }
    }
    std::vector<int> dist = bfs_dist(g, w, pending);
    int u = -1;
    for (int v : component_vertices(pending))
      if (dist[v] == 2) {
        u = v;
        break;
      }
    require(u != -1, "non-star component has no distance-2 vertex");
    int mid = std::countr_zero(
        std::uint16_t(g.neighbors(w) & g.neighbors(u) & pending));
    push_step(r, mid, w, u);
  }
  return r;
}

Route glue_routes(Route r1, const Route& r2) {
  CanonicalForm c1 = canonical_form(r1.last());
  CanonicalForm c2 = canonical_form(r2.last());
  require(c1.key == c2.key, "route endpoints are not isomorphic");
  int n = r1.last().vertex_count();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[c1.relabeling[v]] = v;
  std::vector<int> sigma(n);
  for (int v = 0; v < n; ++v) sigma[v] = at[c2.relabeling[v]];
  r1.append(relabeled(reverse(r2), sigma));
  return r1;
}

Route route_between_forests(const Graph& f1, const Graph& f2) {
  require(f1.is_forest() && f2.is_forest(),
          "route_between_forests requires forests");
  require(f1.vertex_count() == f2.vertex_count() &&
              part_of(f1) == part_of(f2),
          "route_between_forests requires equal component-size partitions");
  return glue_routes(route_to_star_form(f1), route_to_star_form(f2));
}

Route route_to_girth3(const Graph& g) {
  std::optional<int> gg = girth(g);
  require(gg.has_value(), "route_to_girth3 requires a graph with a cycle");
  Route r = Route::single(g);
  if (*gg == 3) return r;
  std::vector<int> cyc = *shortest_cycle(g);
  // Slide the cycle chord at cyc[0] one vertex forward per step; each step
  // shortens the least cycle by one until a triangle closes.
  int len = static_cast<int>(cyc.size());
  for (int t = 0; t + 4 <= len; ++t)
    push_step(r, cyc[t + 1], cyc[t + 2], cyc[0]);
  return r;
}

TriangleSplit triangle_split(const Graph& g, std::pair<int, int> e1,
                             std::pair<int, int> e2, std::pair<int, int> e3) {
  auto norm = [](std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
  };
  e1 = norm(e1);
  e2 = norm(e2);
  e3 = norm(e3);
  require(g.has_edge(e1.first, e1.second) && g.has_edge(e2.first, e2.second) &&
              g.has_edge(e3.first, e3.second),
          "triangle split needs all three edges present");
  int a = -1, b = -1, c = -1;
  if (e1.first == e2.first) {
    a = e1.first;
    b = e1.second;
    c = e2.second;
  } else if (e1.first == e2.second) {
    a = e1.first;
    b = e1.second;
    c = e2.first;
  } else if (e1.second == e2.first) {
    a = e1.second;
    b = e1.first;
    c = e2.second;
  } else if (e1.second == e2.second) {
    a = e1.second;
    b = e1.first;
    c = e2.first;
  }
  require(a != -1 && b != c, "first two edges must share one endpoint");
  require(e3 == norm({b, c}), "third edge must close the triangle");
  TriangleSplit out{g.without_edge(e1.first, e1.second),
                    g.without_edge(e2.first, e2.second),
                    g.without_edge(e1.first, e1.second)
                        .without_edge(e2.first, e2.second)};
  return out;
}

DncRoute dnc_route(const Graph& g, int w, int u) {
  int n = g.vertex_count();
  require(w >= 0 && w < n && u >= 0 && u < n && w != u,
          "re-attachment endpoints must be distinct vertices");
  require(g.has_edge(w, u), "re-attachment needs edge wu");
  Route r = Route::single(g);
  for (int x = 0; x < n; ++x) {
    if (x == w || x == u) continue;
    if (g.has_edge(u, x) && !g.has_edge(w, x)) push_step(r, u, w, x);
  }
  DncRoute out{r, g.without_edge(w, u), r.last().without_edge(w, u)};
  return out;
}

}  // namespace csflab
