#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace csflab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt falling_factorial(int n, int k);  // n (n-1) ... (n-k+1)

std::string to_decimal_string(const BigInt& v);
// "p/q" when the denominator is not 1, plain decimal otherwise.
std::string to_decimal_string(const Rational& v);

}  // namespace csflab
