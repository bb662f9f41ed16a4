#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "thue/errors.hpp"

namespace thue {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (!n.fits_ulong_p()) fail(ErrCode::InvalidArgument, "primality test limited to 64-bit range");
  return is_prime_u64(n.get_ui());
}

inline Int next_prime_at_least(Int n) {
  if (n < 2) n = 2;
  while (!is_prime(n)) ++n;
  return n;
}

// Number of distinct prime factors (trial division; desk-scale m).
inline int omega(Int m) {
  m = abs(m);
  if (m <= 1) return 0;
  int count = 0;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      ++count;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) ++count;
  return count;
}

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e >= 0) {
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
  }
  if (base == 0) fail(ErrCode::InvalidArgument, "0 to a negative power");
  Rat r = 1;
  for (long i = 0; i < -e; ++i) r /= base;
  return r;
}

}  // namespace thue
