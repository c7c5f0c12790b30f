#pragma once

// Independent oracles for cross-checking library results. Everything here is
// deliberately naive: permutation search for isomorphism, deletion plus
// contraction for chromatic polynomials, direct counting formulas. None of it
// shares code with the library beyond the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "csflab/graph.hpp"
#include "csflab/numbers.hpp"
#include "csflab/partition.hpp"

namespace csflab::oracles {

// p(n) by the standard two-dimensional recurrence.
inline long long partition_count(int n) {
  std::vector<std::vector<long long>> table(
      n + 1, std::vector<long long>(n + 1, 0));
  for (int max = 0; max <= n; ++max) table[0][max] = 1;
  for (int rem = 1; rem <= n; ++rem)
    for (int max = 1; max <= n; ++max) {
      table[rem][max] = table[rem][max - 1];
      if (rem >= max) table[rem][max] += table[rem - max][max];
    }
  return table[n][n];
}

// Exhaustive permutation search, after cheap invariant filters.
inline bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace detail {

using Adj = std::vector<std::uint16_t>;

// Coefficients of the chromatic polynomial in powers of k, index = power.
inline std::vector<BigInt> chromatic_rec(const Adj& adj,
                                         std::map<Adj, std::vector<BigInt>>& memo) {
  auto it = memo.find(adj);
  if (it != memo.end()) return it->second;

  int n = static_cast<int>(adj.size());
  int eu = -1, ev = -1;
  for (int u = 0; u < n && eu < 0; ++u)
    for (int v = u + 1; v < n && eu < 0; ++v)
      if (adj[u] & (std::uint16_t(1) << v)) {
        eu = u;
        ev = v;
      }
  if (eu < 0) {
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    return memo[adj] = c;
  }

  Adj deleted = adj;
  deleted[eu] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << ev));
  deleted[ev] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << eu));

  // Contract ev into eu, then drop vertex ev and shift the higher labels down.
  Adj merged = deleted;
  merged[eu] |= merged[ev];
  merged[eu] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << eu));
  for (int w = 0; w < n; ++w)
    if (merged[ev] & (std::uint16_t(1) << w))
      merged[w] |= std::uint16_t(1) << eu;
  Adj contracted(n - 1, 0);
  auto shift = [&](int w) { return w < ev ? w : w - 1; };
  for (int u = 0; u < n; ++u) {
    if (u == ev) continue;
    for (int v = 0; v < n; ++v)
      if (v != ev && (merged[u] & (std::uint16_t(1) << v)))
        contracted[shift(u)] |= std::uint16_t(1) << shift(v);
  }

  std::vector<BigInt> cd = chromatic_rec(deleted, memo);
  std::vector<BigInt> cc = chromatic_rec(contracted, memo);
  std::vector<BigInt> out(n + 1, 0);
  for (int i = 0; i <= n; ++i) out[i] = cd[i];
  for (int i = 0; i < n; ++i) out[i] -= cc[i];
  return memo[adj] = out;
}

}  // namespace detail

inline std::vector<BigInt> chromatic_polynomial(const Graph& g) {
  detail::Adj adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  std::map<detail::Adj, std::vector<BigInt>> memo;
  return detail::chromatic_rec(adj, memo);
}

inline BigInt eval_poly(const std::vector<BigInt>& coeffs, int k) {
  BigInt value = 0, power = 1;
  for (const BigInt& c : coeffs) {
    value += c * power;
    power *= k;
  }
  return value;
}

// Set partitions of an n-set with block sizes lambda: n! / (prod lambda_i!
// * prod r_j!). For an edgeless graph every set partition is stable.
inline BigInt edgeless_stable_count(int n, const Partition& lambda) {
  BigInt count = factorial(n);
  for (int p : lambda.parts()) count /= factorial(p);
  count /= multiplicity_factorial(lambda);
  return count;
}

// Uniform random graph: each pair is an edge with probability num/den.
inline Graph random_graph(std::mt19937_64& rng, int n, int num = 1,
                          int den = 2) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % den) < num) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng() % (i + 1)]);
  return perm;
}

}  // namespace csflab::oracles
