#include "csflab/mpoly.hpp"

#include <algorithm>
#include <vector>

#include "csflab/errors.hpp"

namespace csflab {

MPoly MPoly::monomial(const Partition& lambda, const Rational& c) {
  MPoly f(lambda.weight());
  f.add_coeff(lambda, c);
  return f;
}

Rational MPoly::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void MPoly::set_coeff(const Partition& lambda, const Rational& c) {
  if (lambda.weight() != degree_)
    throw DomainError("coefficient partition weight differs from degree");
  if (c == 0)
    coeffs_.erase(lambda);
  else
    coeffs_[lambda] = c;
}

void MPoly::add_coeff(const Partition& lambda, const Rational& c) {
  set_coeff(lambda, coeff(lambda) + c);
}

MPoly add(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) return f;
  if (f.is_zero()) return g;
  if (f.degree() != g.degree())
    throw DomainError("cannot add polynomials of different degrees");
  MPoly out = f;
  for (const auto& [lambda, c] : g.coeffs()) out.add_coeff(lambda, c);
  return out;
}

MPoly subtract(const MPoly& f, const MPoly& g) {
  return add(f, scale(g, -1));
}

MPoly scale(const MPoly& f, const Rational& c) {
  MPoly out(f.degree());
  if (c == 0) return out;
  for (const auto& [lambda, v] : f.coeffs()) out.set_coeff(lambda, v * c);
  return out;
}

namespace {

// Distinct rearrangements of the padded part vector, ascending start.
std::vector<std::vector<int>> spread(const Partition& p, int width) {
  std::vector<int> v(width, 0);
  std::copy(p.parts().begin(), p.parts().end(), v.begin());
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

MPoly product(const MPoly& f, const MPoly& g) {
  int degree = f.degree() + g.degree();
  check_vertex_guard(degree, 12, "product degree");
  MPoly out(degree);
  if (f.is_zero() || g.is_zero()) return out;
  for (const auto& [lf, cf] : f.coeffs()) {
    for (const auto& [lg, cg] : g.coeffs()) {
      // Over width variables the coefficient of the monomial x^nu in
      // m_lf * m_lg counts placement pairs summing to nu, and reading it off
      // requires nu itself weakly decreasing.
      int width = lf.length() + lg.length();
      if (width == 0) {
        out.add_coeff(Partition(), cf * cg);
        continue;
      }
      std::vector<std::vector<int>> left = spread(lf, width);
      std::vector<std::vector<int>> right = spread(lg, width);
      for (const auto& a : left) {
        for (const auto& b : right) {
          std::vector<int> sum(width);
          bool ok = true;
          for (int i = 0; i < width; ++i) {
            sum[i] = a[i] + b[i];
            if (i > 0 && sum[i] > sum[i - 1]) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          while (!sum.empty() && sum.back() == 0) sum.pop_back();
          out.add_coeff(Partition(sum), cf * cg);
        }
      }
    }
  }
  return out;
}

Rational specialize_ones(const MPoly& f, int k) {
  if (k < 0) throw DomainError("specialization needs k >= 0");
  Rational total = 0;
  for (const auto& [lambda, c] : f.coeffs()) {
    int l = lambda.length();
    if (l > k) continue;
    Rational monomials =
        Rational(falling_factorial(k, l)) / Rational(multiplicity_factorial(lambda));
    total += c * monomials;
  }
  return total;
}

}  // namespace csflab
