#pragma once

#include <cstdint>

#include <boost/multiprecision/gmp.hpp>

namespace r2r {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt factorial(unsigned n);
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace r2r
