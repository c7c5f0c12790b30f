#include "doctest.h"

#include <map>
#include <vector>

#include "csflab/canonical.hpp"
#include "csflab/csf.hpp"
#include "csflab/enumerate.hpp"
#include "csflab/errors.hpp"
#include "csflab/graph.hpp"
#include "csflab/partition.hpp"
#include "csflab/reconstruct.hpp"
#include "oracles.hpp"

using namespace csflab;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

}  // namespace

TEST_CASE("induced subgraph censuses") {
  SubgraphCensus c = induced_subgraph_census(path(3), 2);
  CHECK(c.counts.size() == 2);
  CHECK(c.count(canonical_key(Graph(2, {{0, 1}}))) == 2);
  CHECK(c.count(canonical_key(Graph(2))) == 1);

  SubgraphCensus c53 = induced_subgraph_census(cycle(5), 3);
  CHECK(c53.count(canonical_key(path(3))) == 5);
  CHECK(c53.count(canonical_key(Graph(3, {{0, 1}}))) == 5);
  CHECK(c53.count(canonical_key(Graph(3))) == 0);
  CHECK(c53.counts.size() == 2);

  for (int k = 0; k <= 5; ++k) {
    SubgraphCensus ck = induced_subgraph_census(cycle(5), k);
    BigInt total = 0;
    for (const auto& [key, count] : ck.counts) total += count;
    CHECK(total == binomial(5, k));
  }

  SubgraphCensus self = induced_subgraph_census(path(4), 4);
  CHECK(self.counts.size() == 1);
  CHECK(self.count(canonical_key(path(4))) == 1);
  CHECK_THROWS_AS(induced_subgraph_census(path(3), 4), DomainError);
}

TEST_CASE("reconstruction from k-vertex data: worked values") {
  CHECK(reconstruct_coefficient(path(3), P({2, 1}), 2) == 1);
  CHECK(reconstruct_coefficient(path(4), P({2, 1, 1}), 2) == 3);
  // (2,2,1) has reduced weight 4, so four-vertex data suffices on P5.
  CHECK(stable_partition_census(path(5)).count(P({2, 2, 1})) == 6);
  CHECK(reconstruct_coefficient(path(5), P({2, 2, 1}), 4) == 6);

  // The all-singletons count is 1 for every graph at every k.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    Graph g = oracles::random_graph(rng, n);
    for (int k = 1; k <= n; ++k)
      CHECK(reconstruct_coefficient(g, ones(n), k) == 1);
  }

  CHECK_THROWS_AS(reconstruct_coefficient(path(4), P({2, 1}), 2), DomainError);
  CHECK_THROWS_AS(reconstruct_coefficient(path(4), P({3, 1}), 2), DomainError);
  CHECK_THROWS_AS(reconstruct_coefficient(path(4), P({2, 2}), 5), DomainError);
}

TEST_CASE("reconstruction equals direct counting everywhere it applies") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, GraphClass::All)) {
      StablePartitionCensus census = stable_partition_census(g);
      for (const Partition& lambda : enumerate_partitions(n)) {
        int m = reduced_form(lambda).weight();
        for (int k = m; k <= n; ++k) {
          if (k < 1) continue;
          CHECK(reconstruct_coefficient(g, lambda, k) ==
                Rational(census.count(lambda)));
        }
      }
    }
}

TEST_CASE("lambda matrices of complete multipartite families are "
          "unitriangular") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<Partition> parts = enumerate_partitions(n);
    std::vector<Graph> family;
    for (const Partition& lambda : parts)
      family.push_back(
          generate_special(SpecialFamily::CompleteMultipartite, lambda));
    LambdaMatrix m = lambda_matrix(family);
    CHECK(m.n == n);
    CHECK(m.columns == parts);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (i == j) CHECK(m.entries[i][j] == 1);
        if (!is_refinement(parts[j], parts[i]))
          CHECK(m.entries[i][j] == 0);
        else
          CHECK(m.entries[i][j] >= 1);
      }
    CHECK(exact_rank(m) == static_cast<int>(parts.size()));
  }
}

TEST_CASE("specific lambda matrix entries") {
  Graph k22 =
      generate_special(SpecialFamily::CompleteMultipartite, P({2, 2}));
  LambdaMatrix m = lambda_matrix({k22});
  // Columns follow the canonical partition order of weight 4.
  CHECK(m.columns == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}),
                                            P({2, 1, 1}), ones(4)});
  CHECK(m.entries[0] == std::vector<BigInt>{0, 0, 1, 2, 1});

  for (int n = 2; n <= 7; ++n) {
    LambdaMatrix en = lambda_matrix({Graph(n)});
    for (std::size_t j = 0; j < en.columns.size(); ++j)
      CHECK(en.entries[0][j] ==
            oracles::edgeless_stable_count(n, en.columns[j]));
  }

  CHECK_THROWS_AS(lambda_matrix({}), DomainError);
  CHECK_THROWS_AS(lambda_matrix({Graph(3), Graph(4)}), DomainError);
  CHECK_THROWS_AS(lambda_matrix({Graph(10)}), ResourceError);
}

TEST_CASE("exact rank by fraction-free elimination") {
  CHECK(exact_rank({{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}}) == 2);
  CHECK(exact_rank({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 1);
  CHECK(exact_rank({{BigInt(0), BigInt(0)}, {BigInt(0), BigInt(0)}}) == 0);
  CHECK(exact_rank({{BigInt(1), BigInt(2), BigInt(3)},
                    {BigInt(4), BigInt(5), BigInt(6)},
                    {BigInt(7), BigInt(8), BigInt(9)}}) == 2);
  CHECK(exact_rank({{BigInt(0), BigInt(5)}, {BigInt(0), BigInt(10)},
                    {BigInt(3), BigInt(1)}}) == 2);
}

TEST_CASE("family ranks at five vertices") {
  LambdaMatrix forests =
      lambda_matrix(enumerate_graphs(5, GraphClass::Forests));
  CHECK(exact_rank(forests) == 7);  // p(5)

  LambdaMatrix trees = lambda_matrix(enumerate_graphs(5, GraphClass::Trees));
  CHECK(exact_rank(trees) == 3);  // p(5) - 5 + 1
}

TEST_CASE("subgraph counts weight the k-vertex matrix into censuses") {
  for (const Graph& g :
       {path(4), cycle(4), path(5), cycle(5),
        Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}})}) {
    int n = g.vertex_count();
    for (int k = 2; k < n; ++k) {
      MatrixRelationReport report = verify_matrix_relation(g, k);
      CHECK(report.k == k);
      CHECK(report.all_equal());
      CHECK(report.rows.size() == enumerate_partitions(k).size());
      for (const MatrixRelationRow& row : report.rows) {
        CHECK(row.equal);
        CHECK(row.lambda_k.weight() == k);
        CHECK(row.lambda_n.weight() == n);
        CHECK(equivalent(row.lambda_k, row.lambda_n));
      }
    }
  }
  CHECK_THROWS_AS(verify_matrix_relation(path(4), 1), DomainError);
  CHECK_THROWS_AS(verify_matrix_relation(path(4), 4), DomainError);
}
