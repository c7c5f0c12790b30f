#pragma once

#include <map>

#include "csflab/graph.hpp"
#include "csflab/mpoly.hpp"

namespace csflab {

// Counts of stable (independent-block) set partitions of the vertex set,
// grouped by block-size type. Types with count zero are omitted.
struct StablePartitionCensus {
  int n = 0;
  std::map<Partition, long long> counts;

  long long count(const Partition& lambda) const {
    auto it = counts.find(lambda);
    return it == counts.end() ? 0 : it->second;
  }
};

// Direct enumeration of set partitions with independent blocks. n <= 12.
StablePartitionCensus stable_partition_census(const Graph& g);

// Chromatic symmetric function in the monomial basis:
// [m_lambda] = prod(r_i!) * (number of stable lambda-partitions).
MPoly csf(const Graph& g);

// Independent cross-check: enumerate all n^n colorings, keep the proper ones,
// and read [m_lambda] as the count of colorings whose color-usage vector is
// exactly (lambda_1,...,lambda_l,0,...,0). n <= 6.
MPoly csf_coloring_oracle(const Graph& g);

}  // namespace csflab
