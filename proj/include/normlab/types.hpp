#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace normlab {

// Expression templates are off: values are always materialized, which keeps
// ternaries, std::max and auto deduction well-behaved.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntegerVector = std::vector<Integer>;

// "num/den" with the denominator always present.
std::string to_string(Rational const& q);
Rational parse_rational(std::string const& text);

// Accepts "3", "-7/2", "0.125", "1.5e-3" (decimals are converted exactly).
Rational parse_decimal(std::string const& text);

bool is_prime(Integer const& n);
Integer next_prime(Integer const& n);

// p-adic valuation of a nonzero integer or rational.
int valuation(Integer const& n, Integer const& p);
int valuation(Rational const& q, Integer const& p);

Integer pow(Integer const& base, unsigned exponent);
Rational pow(Rational const& base, int exponent);

// Inverse of `a` modulo `m`; requires gcd(a, m) = 1.
Integer inverse_mod(Integer const& a, Integer const& m);
// Representative in [0, m).
Integer mod(Integer const& a, Integer const& m);
// Representative in (-m/2, m/2].
Integer symmetric_mod(Integer const& a, Integer const& m);

// Legendre symbol (a/p) for odd prime p: 1, -1 or 0.
int legendre(Integer const& a, Integer const& p);

}  // namespace normlab
