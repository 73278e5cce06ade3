#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace monrep {

// All arithmetic in this library is exact: arbitrary-precision integers for
// character values and multiplicities, rationals for basis coefficients and
// inner products.  No floating point enters any decision.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt factorial(unsigned n);

// binom(n, k) for big n; 0 when n < k or k invalid for negative n.
BigInt binomial(const BigInt& n, unsigned k);

BigInt pow_int(const BigInt& base, unsigned exp);

}  // namespace monrep
