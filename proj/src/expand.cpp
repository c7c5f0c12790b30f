#include "csflab/expand.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <utility>
#include <vector>

#include "csflab/csf.hpp"
#include "csflab/errors.hpp"
#include "csflab/graph_io.hpp"

namespace csflab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace

ChromaticBasis::ChromaticBasis(std::string name, int degree,
                               std::map<Partition, Graph> elements)
    : name_(std::move(name)), degree_(degree), elements_(std::move(elements)) {
  require(degree_ >= 1, "basis degree must be at least 1");
  std::vector<Partition> all = enumerate_partitions(degree_);
  require(elements_.size() == all.size(),
          "basis must have exactly one element per partition");
  forest_ = true;
  for (const Partition& lambda : all) {
    auto it = elements_.find(lambda);
    require(it != elements_.end(),
            "basis is missing the element at " + lambda.to_string());
    const Graph& g = it->second;
    require(g.vertex_count() == degree_,
            "basis element at " + lambda.to_string() +
                " has the wrong vertex count");
    require(part_of(g) == lambda,
            "basis element at " + lambda.to_string() +
                " has mismatched component sizes");
    if (!g.is_forest()) forest_ = false;
  }
}

ChromaticBasis ChromaticBasis::star(int degree) {
  std::map<Partition, Graph> elements;
  for (const Partition& lambda : enumerate_partitions(degree))
    elements.emplace(lambda,
                     generate_special(SpecialFamily::StarFamily, lambda));
  return ChromaticBasis("star", degree, std::move(elements));
}

ChromaticBasis ChromaticBasis::path(int degree) {
  std::map<Partition, Graph> elements;
  for (const Partition& lambda : enumerate_partitions(degree))
    elements.emplace(lambda,
                     generate_special(SpecialFamily::PathFamily, lambda));
  return ChromaticBasis("path", degree, std::move(elements));
}

ChromaticBasis ChromaticBasis::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open basis file: " + path);
  std::map<Partition, Graph> elements;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto hash = trimmed.find('#');
    if (hash != std::string::npos) trimmed.resize(hash);
    if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto semi = trimmed.find(';');
    if (semi == std::string::npos)
      throw ParseError("basis file line " + std::to_string(lineno) +
                       ": expected \"lambda ; graph6\"");
    Partition lambda = Partition::parse(trimmed.substr(0, semi));
    std::string g6 = trimmed.substr(semi + 1);
    auto first = g6.find_first_not_of(" \t");
    auto last = g6.find_last_not_of(" \t\r");
    if (first == std::string::npos)
      throw ParseError("basis file line " + std::to_string(lineno) +
                       ": missing graph6 text");
    Graph g = parse_graph6(g6.substr(first, last - first + 1));
    if (!elements.emplace(lambda, g).second)
      throw ParseError("basis file line " + std::to_string(lineno) +
                       ": duplicate partition " + lambda.to_string());
  }
  if (elements.empty()) throw ParseError("basis file is empty: " + path);
  int degree = elements.begin()->first.weight();
  return ChromaticBasis("file:" + path, degree, std::move(elements));
}

const Graph& ChromaticBasis::element(const Partition& lambda) const {
  auto it = elements_.find(lambda);
  require(it != elements_.end(),
          "basis has no element at " + lambda.to_string());
  return it->second;
}

Rational BasisExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? Rational(0) : it->second;
}

namespace {

using Coeffs = std::map<Partition, Rational>;

Coeffs& accumulate(Coeffs& into, const Coeffs& from, const Rational& factor) {
  for (const auto& [lambda, c] : from) {
    Rational next = into[lambda] + c * factor;
    if (next == 0)
      into.erase(lambda);
    else
      into[lambda] = next;
  }
  return into;
}

struct Expander {
  const ChromaticBasis& basis;
  RoutingStrategy strategy;
  std::map<CanonicalKey, Coeffs> memo;

  const Coeffs& get(const Graph& g) {
    CanonicalKey key = canonical_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Coeffs out = compute(g);
    if (memo.size() >= 2'000'000)
      throw ResourceError("expansion memo exceeds 2000000 classes");
    return memo.emplace(std::move(key), std::move(out)).first->second;
  }

  Coeffs route_remainders(const Route& route) {
    Coeffs out;
    accumulate(out, get(route.last()), 1);
    for (const Step& s : route.steps) {
      accumulate(out, get(s.positive_remainder), 1);
      accumulate(out, get(s.negative_remainder), -1);
    }
    return out;
  }

  Coeffs compute(const Graph& g) {
    Partition lambda = part_of(g);
    if (g.is_forest()) {
      const Graph& target = basis.element(lambda);
      if (canonical_key(g) == canonical_key(target))
        return Coeffs{{lambda, Rational(1)}};
      if (strategy == RoutingStrategy::DncRouting) {
        for (std::uint16_t comp : g.component_masks()) {
          int size = std::popcount(comp);
          if (size <= 2) continue;
          bool star = false;
          for (int v = 0; v < g.vertex_count(); ++v)
            if (((comp >> v) & 1) &&
                std::popcount(g.neighbors(v)) == size - 1)
              star = true;
          if (star) continue;
          // Grow this component's hub by re-attaching the neighbors of one
          // of its branching neighbors; the hub degree strictly increases.
          int w = -1, wdeg = -1;
          for (int v = 0; v < g.vertex_count(); ++v)
            if ((comp >> v) & 1) {
              int deg = std::popcount(g.neighbors(v));
              if (deg > wdeg) {
                w = v;
                wdeg = deg;
              }
            }
          int u = -1;
          for (int v = 0; v < g.vertex_count(); ++v)
            if (((g.neighbors(w) >> v) & 1) && g.degree(v) >= 2) {
              u = v;
              break;
            }
          require(u != -1, "non-star component has no branching neighbor");
          DncRoute d = dnc_route(g, w, u);
          Coeffs out;
          accumulate(out, get(d.route.last()), 1);
          accumulate(out, get(d.positive), 1);
          accumulate(out, get(d.negative), -1);
          return out;
        }
        // Disjoint stars that are not the element: glue two star-form routes.
        return route_remainders(route_between_forests(g, target));
      }
      Route route =
          strategy == RoutingStrategy::PathRouting
              ? glue_routes(route_to_path_form(g), route_to_path_form(target))
              : glue_routes(route_to_star_form(g),
                            route_to_star_form(target));
      return route_remainders(route);
    }
    int gg = *girth(g);
    if (gg > 3) return route_remainders(route_to_girth3(g));
    // Least triangle, split on its two edges at the least vertex.
    int a = -1, b = -1, c = -1;
    for (int i = 0; i < g.vertex_count() && a == -1; ++i)
      for (int j = i + 1; j < g.vertex_count() && a == -1; ++j) {
        if (!g.has_edge(i, j)) continue;
        for (int k = j + 1; k < g.vertex_count(); ++k)
          if (g.has_edge(i, k) && g.has_edge(j, k)) {
            a = i;
            b = j;
            c = k;
            break;
          }
      }
    require(a != -1, "girth-3 graph lost its triangle");
    TriangleSplit split = triangle_split(g, {a, b}, {a, c}, {b, c});
    Coeffs out;
    accumulate(out, get(split.minus_first), 1);
    accumulate(out, get(split.minus_second), 1);
    accumulate(out, get(split.minus_both), -1);
    return out;
  }
};

}  // namespace

BasisExpansion expand_in_forest_basis(const Graph& g,
                                      const ChromaticBasis& basis,
                                      RoutingStrategy strategy) {
  require(basis.is_forest_basis(),
          "rewriting expansion requires a forest basis");
  require(g.vertex_count() == basis.degree(),
          "graph vertex count differs from basis degree");
  Expander ex{basis, strategy, {}};
  BasisExpansion out;
  out.basis_name = basis.name();
  out.degree = basis.degree();
  out.coeffs = ex.get(g);
  return out;
}

BasisExpansion expand_via_linear_solve(const Graph& g,
                                       const ChromaticBasis& basis) {
  require(g.vertex_count() == basis.degree(),
          "graph vertex count differs from basis degree");
  int n = basis.degree();
  std::vector<Partition> parts = enumerate_partitions(n);
  int p = static_cast<int>(parts.size());

  // Column j holds the monomial coordinates of the element at parts[j].
  std::vector<std::vector<Rational>> a(p, std::vector<Rational>(p + 1, 0));
  for (int j = 0; j < p; ++j) {
    MPoly x = csf(basis.element(parts[j]));
    for (int i = 0; i < p; ++i) a[i][j] = x.coeff(parts[i]);
  }
  MPoly target = csf(g);
  for (int i = 0; i < p; ++i) a[i][p] = target.coeff(parts[i]);

  std::vector<int> pivot_col(p, -1);
  int rank = 0;
  for (int col = 0; col < p && rank < p; ++col) {
    int row = -1;
    for (int i = rank; i < p; ++i)
      if (a[i][col] != 0) {
        row = i;
        break;
      }
    if (row == -1) continue;
    std::swap(a[rank], a[row]);
    Rational inv = a[rank][col];
    for (int j = col; j <= p; ++j) a[rank][j] /= inv;
    for (int i = 0; i < p; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = col; j <= p; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank < p)
    throw DomainError("the family is not a chromatic basis (singular system)");

  BasisExpansion out;
  out.basis_name = basis.name();
  out.degree = n;
  for (int i = 0; i < p; ++i) {
    if (a[i][p] == 0) continue;
    out.coeffs.emplace(parts[pivot_col[i]], a[i][p]);
  }
  return out;
}

BasisExpansion truncate_expansion(const BasisExpansion& x, const Partition& mu,
                                  int k) {
  BasisExpansion out;
  out.basis_name = x.basis_name;
  out.degree = x.degree;
  for (const auto& [lambda, c] : x.coeffs)
    if (lambda.length() <= mu.length() + k) out.coeffs.emplace(lambda, c);
  return out;
}

bool expansion_reconstructs(const BasisExpansion& x,
                            const ChromaticBasis& basis, const Graph& g) {
  MPoly total;
  for (const auto& [lambda, c] : x.coeffs)
    total = add(total, scale(csf(basis.element(lambda)), c));
  return total == csf(g);
}

}  // namespace csflab
