#pragma once

#include <gmpxx.h>

#include <string>

namespace diagsurf {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt ipow(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

// (-1)^e as +1/-1.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Exact quotient; returns false (leaving `out` untouched) when den does not divide num.
inline bool exact_div(const BigInt& num, const BigInt& den, BigInt& out) {
  if (den == 0 || mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) return false;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return true;
}

}  // namespace diagsurf
