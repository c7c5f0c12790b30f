#pragma once

#include <map>

#include "csflab/numbers.hpp"
#include "csflab/partition.hpp"

namespace csflab {

// Homogeneous symmetric function in the monomial basis: degree plus a sparse
// coefficient map keyed by partitions of the degree. Zero coefficients are
// never stored. Map order is the canonical partition order, so iteration (and
// JSON rendering) is deterministic.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int degree) : degree_(degree) {}

  static MPoly monomial(const Partition& lambda, const Rational& c = 1);

  int degree() const { return degree_; }
  const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const Partition& lambda) const;
  void set_coeff(const Partition& lambda, const Rational& c);
  void add_coeff(const Partition& lambda, const Rational& c);
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  int degree_ = 0;
  std::map<Partition, Rational> coeffs_;
};

MPoly add(const MPoly& f, const MPoly& g);         // equal degrees
MPoly subtract(const MPoly& f, const MPoly& g);    // equal degrees
MPoly scale(const MPoly& f, const Rational& c);

// Product via expansion into deg(f)+deg(g) indeterminates, collecting exponent
// multisets. Guarded at combined degree 12.
MPoly product(const MPoly& f, const MPoly& g);

// Evaluate at x_1 = ... = x_k = 1, x_j = 0 beyond: each m_lambda contributes
// the number of its monomials on k variables, k!/((k-l)! * prod r_i!).
Rational specialize_ones(const MPoly& f, int k);

}  // namespace csflab
