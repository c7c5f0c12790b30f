#pragma once

#include <map>
#include <string>

#include "csflab/canonical.hpp"
#include "csflab/graph.hpp"
#include "csflab/mpoly.hpp"
#include "csflab/routes.hpp"

namespace csflab {

// A chromatic basis of degree n: one n-vertex graph per partition of n, the
// graph's component sizes equal to its partition. The built-in star and path
// bases consist of disjoint stars / disjoint paths.
class ChromaticBasis {
 public:
  ChromaticBasis(std::string name, int degree,
                 std::map<Partition, Graph> elements);

  static ChromaticBasis star(int degree);
  static ChromaticBasis path(int degree);
  // One "lambda ; graph6" line per element; name becomes "file:<path>".
  static ChromaticBasis from_file(const std::string& path);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  const Graph& element(const Partition& lambda) const;
  const std::map<Partition, Graph>& elements() const { return elements_; }
  bool is_forest_basis() const { return forest_; }

 private:
  std::string name_;
  int degree_ = 0;
  std::map<Partition, Graph> elements_;
  bool forest_ = false;
};

enum class RoutingStrategy { PathRouting, StarRouting, DncRouting };

struct BasisExpansion {
  std::string basis_name;
  int degree = 0;
  std::map<Partition, Rational> coeffs;

  Rational coeff(const Partition& lambda) const;
};

// Recursive rewriting expansion of csf(g) over a forest basis:
//   (i) edgeless graphs and (ii) basis elements are unit vectors;
//   (iii) forests route to their basis element and expand the remainders;
//   (iv) girth-3 graphs split on a triangle;
//   (v) larger girth first routes to girth 3.
// Memoized on canonical keys. The result satisfies
//   csf(g) = sum coeffs[lambda] * csf(basis.element(lambda)).
BasisExpansion expand_in_forest_basis(
    const Graph& g, const ChromaticBasis& basis,
    RoutingStrategy strategy = RoutingStrategy::PathRouting);

// Exact rational solve against the basis elements' monomial coordinates;
// works for any chromatic basis and reports non-bases (singular systems).
BasisExpansion expand_via_linear_solve(const Graph& g,
                                       const ChromaticBasis& basis);

// Keep coefficients with length(lambda) <= length(mu) + k, where mu is the
// component-size partition of the expanded graph.
BasisExpansion truncate_expansion(const BasisExpansion& x, const Partition& mu,
                                  int k);

// Checks sum coeffs[lambda] * csf(element) == csf(g) exactly.
bool expansion_reconstructs(const BasisExpansion& x, const ChromaticBasis& basis,
                            const Graph& g);

}  // namespace csflab
