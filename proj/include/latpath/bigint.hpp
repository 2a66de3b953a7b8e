#pragma once

#include <gmpxx.h>

namespace latpath {

using BigInt = mpz_class;
using Rational = mpq_class;

// Ordinary binomial coefficient; zero unless 0 <= k <= n.
BigInt binomial(long n, long k);

// Falling-factorial binomial a(a-1)...(a-k+1)/k! for rational a.
Rational binom_general(const Rational& a, unsigned long k);

}  // namespace latpath
