#include "csflab/upoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "csflab/errors.hpp"

namespace csflab {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw DomainError(msg);
}

// Component sizes of (V, A) where A is an edge-subset mask over edges.
Partition subset_partition(int n, const std::vector<std::pair<int, int>>& edges,
                           std::uint32_t mask, int* component_count) {
  std::vector<int> parent(n), size(n, 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = n;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    int a = find(edges[i].first), b = find(edges[i].second);
    if (a == b) continue;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --components;
  }
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) sizes.push_back(size[v]);
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  if (component_count) *component_count = components;
  return Partition(sizes);
}

BasisExpansion expansion_of(const Graph& g, const ChromaticBasis& basis) {
  return basis.is_forest_basis() ? expand_in_forest_basis(g, basis)
                                 : expand_via_linear_solve(g, basis);
}

}  // namespace

BigInt UPoly::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? BigInt(0) : it->second;
}

UPoly u_polynomial_forest(const Graph& forest) {
  require(forest.is_forest(), "u_polynomial_forest requires a forest");
  int m = forest.edge_count();
  if (m > 24) throw ResourceError("u_polynomial_forest: more than 24 edges");
  auto edges = forest.edges();
  UPoly u;
  u.degree = forest.vertex_count();
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask)
    ++u.coeffs[subset_partition(u.degree, edges, mask, nullptr)];
  return u;
}

UPoly restricted_u(const Graph& forest, int k) {
  require(forest.is_forest(), "restricted_u requires a forest");
  require(k >= 0, "restricted_u requires k >= 0");
  int m = forest.edge_count();
  if (m > 24) throw ResourceError("restricted_u: more than 24 edges");
  auto edges = forest.edges();
  UPoly u;
  u.degree = forest.vertex_count();
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask)
    if (std::popcount(mask) <= k)
      ++u.coeffs[subset_partition(u.degree, edges, mask, nullptr)];
  return u;
}

UPolyXY u_polynomial_general(const Graph& g) {
  int m = g.edge_count();
  if (m > 20) throw ResourceError("u_polynomial_general: more than 20 edges");
  int n = g.vertex_count();
  auto edges = g.edges();
  UPolyXY u;
  u.degree = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
    int components = 0;
    Partition lambda = subset_partition(n, edges, mask, &components);
    int nullity = std::popcount(mask) - (n - components);
    ++u.coeffs[{lambda, nullity}];
  }
  return u;
}

std::optional<int> corner_number(const Graph& forest,
                                 const ChromaticBasis& basis) {
  require(forest.is_forest(), "corner_number requires a forest");
  Partition mu = part_of(forest);
  require(basis.element(mu).is_forest(),
          "corner_number requires a forest element at the graph's partition");
  BasisExpansion x = expansion_of(forest, basis);
  std::optional<int> corner;
  for (const auto& [lambda, c] : x.coeffs) {
    if (c == 0 || lambda == mu) continue;
    int level = lambda.length() - mu.length();
    if (level <= 0) continue;
    if (!corner || level < *corner) corner = level;
  }
  return corner;
}

bool UEquivReport::ranges_clean() const {
  for (const UEquivRow& row : rows)
    if ((row.in_corner_range || row.in_level_range) && !row.equal)
      return false;
  return true;
}

UEquivReport verify_theorem_u_equiv(const Graph& f1,
                                    const ChromaticBasis& basis) {
  require(f1.is_forest(), "verify_theorem_u_equiv requires a forest");
  Partition mu = part_of(f1);
  const Graph& element = basis.element(mu);
  require(element.is_forest(),
          "verify_theorem_u_equiv requires a forest element at mu");

  UEquivReport report;
  report.mu = mu;
  report.corner = corner_number(f1, basis);
  BasisExpansion x = expansion_of(f1, basis);
  UPoly u1 = u_polynomial_forest(f1);
  UPoly u2 = u_polynomial_forest(element);
  report.mu_coeff_is_one = x.coeff(mu) == 1;
  report.mu_u_diff_is_zero = u1.coeff(mu) == u2.coeff(mu);

  for (const Partition& lambda : enumerate_partitions(basis.degree())) {
    if (lambda == mu) continue;
    UEquivRow row;
    row.lambda = lambda;
    row.x_coeff = x.coeff(lambda);
    row.u_diff = u1.coeff(lambda) - u2.coeff(lambda);
    row.equal = row.x_coeff == Rational(row.u_diff);
    if (report.corner) {
      row.in_corner_range = lambda.length() <= *report.corner;
      row.in_level_range = lambda.length() <= mu.length() + *report.corner;
    } else {
      // Infinite corner: both ranges cover every level.
      row.in_corner_range = true;
      row.in_level_range = true;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace csflab
