#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "csflab/expand.hpp"
#include "csflab/graph.hpp"
#include "csflab/numbers.hpp"
#include "csflab/partition.hpp"

namespace csflab {

// Edge-subset generating function of a forest: for each A subset of E, one
// term x_{lambda(A)} where lambda(A) lists the component sizes of (V, A),
// isolated vertices included.
struct UPoly {
  int degree = 0;
  std::map<Partition, BigInt> coeffs;

  BigInt coeff(const Partition& lambda) const;

  friend bool operator==(const UPoly&, const UPoly&) = default;
};

// Two-variable form for arbitrary graphs: terms are keyed by
// (lambda(A), cycle nullity of (V, A)); the nullity is the power of (y-1).
// On forests every nullity is zero and the forest form is recovered.
struct UPolyXY {
  int degree = 0;
  std::map<std::pair<Partition, int>, BigInt> coeffs;

  friend bool operator==(const UPolyXY&, const UPolyXY&) = default;
};

UPoly u_polynomial_forest(const Graph& forest);      // |E| <= 24
// Only subsets with |A| <= k.
UPoly restricted_u(const Graph& forest, int k);
UPolyXY u_polynomial_general(const Graph& g);        // |E| <= 20

// Smallest k such that truncating the basis expansion of csf(forest) at
// length(mu)+k picks up a nonzero coefficient beyond the leading one;
// nullopt (infinite) when the expansion is exactly the unit vector.
// Requires the basis element at part_of(forest) to be a forest.
std::optional<int> corner_number(const Graph& forest,
                                 const ChromaticBasis& basis);

struct UEquivRow {
  Partition lambda;
  Rational x_coeff;        // [lambda] of the basis expansion of csf(f1)
  BigInt u_diff;           // [lambda] U(f1) - [lambda] U(element)
  bool equal = false;
  bool in_corner_range = false;  // length(lambda) <= corner
  bool in_level_range = false;   // length(lambda) <= length(mu) + corner
};

// Coefficient-by-coefficient comparison of the basis expansion of csf(f1)
// against the U-polynomial difference with the basis element at the same
// partition. Both candidate validity ranges are labeled per row; the leading
// row must come out as coefficient 1 with U-difference 0.
struct UEquivReport {
  Partition mu;
  std::optional<int> corner;   // nullopt = infinite
  bool mu_coeff_is_one = false;
  bool mu_u_diff_is_zero = false;
  std::vector<UEquivRow> rows;

  bool ranges_clean() const;   // no mismatch inside either labeled range
};

UEquivReport verify_theorem_u_equiv(const Graph& f1,
                                    const ChromaticBasis& basis);

}  // namespace csflab
