#include "csflab/reconstruct.hpp"

#include <algorithm>
#include <bit>

#include "csflab/enumerate.hpp"
#include "csflab/errors.hpp"
#include "csflab/graph_io.hpp"

namespace csflab {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace

long long SubgraphCensus::count(const CanonicalKey& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

SubgraphCensus induced_subgraph_census(const Graph& g, int k) {
  int n = g.vertex_count();
  require(k >= 0 && k <= n, "induced census requires 0 <= k <= n");
  SubgraphCensus census;
  census.k = k;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    ++census.counts[canonical_key(
        induced_subgraph(g, static_cast<std::uint16_t>(mask)))];
  }
  return census;
}

Rational reconstruct_coefficient(const Graph& g, const Partition& lambda1,
                                 int k) {
  int n = g.vertex_count();
  require(lambda1.weight() == n, "partition weight must match vertex count");
  int m = reduced_form(lambda1).weight();
  require(m <= k && k <= n, "reconstruction requires m <= k <= n");
  Partition lambda2 = *s_reduced_form(lambda1, k);

  BigInt total = 0;
  for (const auto& [key, copies] : induced_subgraph_census(g, k).counts) {
    Graph h = parse_graph6(key.graph6());
    total += BigInt(stable_partition_census(h).count(lambda2)) * copies;
  }
  return Rational(total) / Rational(binomial(n - m, k - m));
}

LambdaMatrix lambda_matrix(const std::vector<Graph>& family) {
  require(!family.empty(), "lambda matrix needs at least one graph");
  int n = family.front().vertex_count();
  for (const Graph& g : family)
    require(g.vertex_count() == n,
            "lambda matrix needs equal vertex counts across the family");
  require(n >= 1, "lambda matrix needs n >= 1");
  check_vertex_guard(n, 9, "lambda_matrix");

  LambdaMatrix m;
  m.n = n;
  m.rows = family;
  m.columns = enumerate_partitions(n);
  for (const Graph& g : family) {
    StablePartitionCensus census = stable_partition_census(g);
    std::vector<BigInt> row;
    row.reserve(m.columns.size());
    for (const Partition& lambda : m.columns)
      row.emplace_back(census.count(lambda));
    m.entries.push_back(std::move(row));
  }
  return m;
}

int exact_rank(const LambdaMatrix& m) { return exact_rank(m.entries); }

int exact_rank(std::vector<std::vector<BigInt>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m.front().size());
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p == -1) continue;
    std::swap(m[rank], m[p]);
    // Fraction-free update: entries stay the minors of the original matrix,
    // so the division by the previous pivot is exact.
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

bool MatrixRelationReport::all_equal() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const MatrixRelationRow& r) { return r.equal; });
}

MatrixRelationReport verify_matrix_relation(const Graph& g, int k) {
  int n = g.vertex_count();
  require(2 <= k && k < n, "matrix relation requires 2 <= k < n");

  std::vector<Graph> classes = enumerate_graphs(k, GraphClass::All);
  LambdaMatrix m = lambda_matrix(classes);
  SubgraphCensus sub = induced_subgraph_census(g, k);
  std::vector<BigInt> occurrences;
  occurrences.reserve(classes.size());
  for (const Graph& h : classes)
    occurrences.emplace_back(sub.count(canonical_key(h)));

  StablePartitionCensus census = stable_partition_census(g);
  MatrixRelationReport report;
  report.k = k;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    const Partition& lambda_k = m.columns[j];
    BigInt lhs = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
      lhs += occurrences[i] * m.entries[i][j];

    // The unique k-reducible partition of n with this k-reduced form.
    Partition core = reduced_form(lambda_k);
    std::vector<int> parts = core.parts();
    parts.insert(parts.end(), n - core.weight(), 1);
    Partition lambda_n(parts);
    int mm = core.weight();
    BigInt rhs = binomial(n - mm, k - mm) * census.count(lambda_n);

    MatrixRelationRow row{lambda_k, lambda_n, lhs, rhs, lhs == rhs};
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace csflab
