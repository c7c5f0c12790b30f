#include "csflab/numbers.hpp"

#include "csflab/errors.hpp"

namespace csflab {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt falling_factorial(int n, int k) {
  if (k < 0) throw DomainError("falling factorial of negative length");
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

std::string to_decimal_string(const BigInt& v) { return v.str(); }

std::string to_decimal_string(const Rational& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace csflab
