#ifndef PFAFFINE_RATIONAL_HPP
#define PFAFFINE_RATIONAL_HPP

#include <gmpxx.h>

namespace pfaffine {

/// Exact rational number. All arithmetic in this library is exact; there is
/// no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

Rat factorial(long n);

/// Binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
Rat binomial(long n, long k);

} // namespace pfaffine

#endif
