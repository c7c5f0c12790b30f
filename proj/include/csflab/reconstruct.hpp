#pragma once

#include <map>
#include <vector>

#include "csflab/canonical.hpp"
#include "csflab/csf.hpp"
#include "csflab/graph.hpp"
#include "csflab/numbers.hpp"
#include "csflab/partition.hpp"

namespace csflab {

// Induced k-vertex subgraphs of g grouped by isomorphism class. Counts sum to
// C(n, k); classes that do not occur are omitted.
struct SubgraphCensus {
  int k = 0;
  std::map<CanonicalKey, long long> counts;

  long long count(const CanonicalKey& key) const;
};

SubgraphCensus induced_subgraph_census(const Graph& g, int k);

// Recover the stable-partition count c^G_{lambda1} from k-vertex data:
//   c^G_{lambda1} = binom(n-m, k-m)^{-1} *
//                   sum_H c^H_{lambda2} * (#induced copies of H in G)
// over all k-vertex classes H, where m is the reduced weight of lambda1 and
// lambda2 its k-reduced form. Requires m <= k <= n.
Rational reconstruct_coefficient(const Graph& g, const Partition& lambda1,
                                 int k);

// Rows: stable-partition census vectors of the family, columns: partitions of
// n in canonical order. All graphs must share the vertex count; n <= 9.
struct LambdaMatrix {
  int n = 0;
  std::vector<Graph> rows;
  std::vector<Partition> columns;
  std::vector<std::vector<BigInt>> entries;
};

LambdaMatrix lambda_matrix(const std::vector<Graph>& family);

// Rank over the rationals, by fraction-free elimination.
int exact_rank(const LambdaMatrix& m);
int exact_rank(std::vector<std::vector<BigInt>> m);

// Checks, column by column over partitions of k, that the subgraph-count row
// vector times the lambda-matrix of all k-vertex classes equals the weighted
// census entries binom(n-m_i, k-m_i) * c^G_{lambda_i} of the k-reducible
// partitions of n. Requires 2 <= k < n.
struct MatrixRelationRow {
  Partition lambda_k;   // column partition (of k)
  Partition lambda_n;   // matching k-reducible partition of n
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

struct MatrixRelationReport {
  int k = 0;
  std::vector<MatrixRelationRow> rows;

  bool all_equal() const;
};

MatrixRelationReport verify_matrix_relation(const Graph& g, int k);

}  // namespace csflab
