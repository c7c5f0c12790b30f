#include "csflab/csf.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <vector>

#include "csflab/errors.hpp"

namespace csflab {

StablePartitionCensus stable_partition_census(const Graph& g) {
  int n = g.vertex_count();
  check_vertex_guard(n, 12, "stable_partition_census");
  StablePartitionCensus census;
  census.n = n;

  std::vector<std::uint16_t> blocks;  // vertex masks of open blocks
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      std::vector<int> sizes;
      sizes.reserve(blocks.size());
      for (std::uint16_t b : blocks) sizes.push_back(std::popcount(b));
      std::sort(sizes.begin(), sizes.end(), std::greater<int>());
      ++census.counts[Partition(sizes)];
      return;
    }
    std::uint16_t bit = std::uint16_t(1) << v;
    // Index loop: the recursion grows and shrinks the vector, so references
    // into it do not survive the call.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (g.neighbors(v) & blocks[i]) continue;  // block must stay independent
      blocks[i] |= bit;
      place(v + 1);
      blocks[i] &= ~bit;
    }
    blocks.push_back(bit);
    place(v + 1);
    blocks.pop_back();
  };
  place(0);
  return census;
}

MPoly csf(const Graph& g) {
  StablePartitionCensus census = stable_partition_census(g);
  MPoly f(census.n);
  for (const auto& [lambda, count] : census.counts)
    f.add_coeff(lambda, Rational(multiplicity_factorial(lambda) * count));
  return f;
}

MPoly csf_coloring_oracle(const Graph& g) {
  int n = g.vertex_count();
  check_vertex_guard(n, 6, "csf_coloring_oracle");
  MPoly f(n);
  if (n == 0) {
    f.add_coeff(Partition(), 1);
    return f;
  }
  std::vector<int> color(n, 0);
  auto edges = g.edges();
  for (;;) {
    bool proper = true;
    for (auto [u, v] : edges)
      if (color[u] == color[v]) {
        proper = false;
        break;
      }
    if (proper) {
      std::vector<int> usage(n, 0);
      for (int v = 0; v < n; ++v) ++usage[color[v]];
      bool monotone = true;
      for (int c = 1; c < n; ++c)
        if (usage[c] > usage[c - 1]) {
          monotone = false;
          break;
        }
      // A weakly decreasing usage vector is the exponent of exactly one
      // leading monomial x_1^{l_1}...; such colorings count [m_lambda].
      if (monotone) {
        while (!usage.empty() && usage.back() == 0) usage.pop_back();
        f.add_coeff(Partition(usage), 1);
      }
    }
    int i = 0;
    while (i < n && color[i] == n - 1) color[i++] = 0;
    if (i == n) break;
    ++color[i];
  }
  return f;
}

}  // namespace csflab
