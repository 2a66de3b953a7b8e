#include "latpath/bigint.hpp"

namespace latpath {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational binom_general(const Rational& a, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= a - Rational(static_cast<long>(i));
    r /= Rational(static_cast<long>(i + 1));
  }
  r.canonicalize();
  return r;
}

}  // namespace latpath
