#pragma once

#include <string>
#include <utility>

#include "diagsurf/bigint.hpp"

namespace diagsurf {

// Parameters of x_1^d + ... + x_s^d = b over F_{q^k}, q = p^{2r}, d | p^r + 1.
struct DiagonalParams {
  unsigned p = 0;
  unsigned r = 0;
  unsigned k = 1;
  unsigned d = 0;

  // Throws BadParams unless p is prime, r,k >= 1, d >= 2 and d | p^r + 1.
  void validate() const;

  BigInt q() const { return ipow(p, 2ul * r); }
  BigInt field_size() const { return ipow(p, 2ul * r * k); }  // q^k
  BigInt sqrt_field_size() const { return ipow(p, 1ul * r * k); }  // q^{k/2}
  BigInt n() const { return (field_size() - 1) / d; }
  int eta() const { return (k % 2 == 1) ? 1 : -1; }  // (-1)^{k+1}
};

struct CountTriple {
  BigInt N0;  // b = 0
  BigInt N1;  // b in U_n
  BigInt N2;  // b nonzero, not in U_n
};

struct BoundReport {
  BigInt value;
  BigInt center;     // pi_{s-1} for Weil-Deligne, 0 for TSS
  BigInt deviation;  // |value - center|
  BigInt bound;
  BigInt slack;      // bound - deviation
  bool met = false;
  bool equality = false;
};

struct IdentityReport {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

// ((d-1)^s + (-1)^s (d-1)) / d.
BigInt b_function(unsigned long d, unsigned long s);

// Closed-form counts for s >= 2 variables.
CountTriple wolfmann_counts(const DiagonalParams& params, unsigned s);

// As wolfmann_counts, but also accepts s = 1 where the counts are elementary: (1, d, 0).
CountTriple class_counts(const DiagonalParams& params, unsigned s);

// (Q^{s+1} - 1)/(Q - 1); zero for s = -1 (the empty projective space).
BigInt pi_size(const BigInt& Q, long s);

// Points of x_0^d + ... + x_s^d = 0 in P^s(F_{q^k}).
BigInt projective_count(const DiagonalParams& params, unsigned s);

IdentityReport verify_lemma_22(const DiagonalParams& params, unsigned s);
IdentityReport verify_lemma_23(const DiagonalParams& params, unsigned s);
IdentityReport verify_lemma_24(const DiagonalParams& params, unsigned s, unsigned i);

// Recovers (N1, N2) for s variables from the zero counts for s and s+1 variables.
std::pair<BigInt, BigInt> derive_n1_n2(const DiagonalParams& params, unsigned s,
                                      const BigInt& n0_s, const BigInt& n0_next);

// |N' - pi_{s-1}| <= B(d, s+1) (q^k)^{(s-1)/2}.
BoundReport weil_deligne_check(const DiagonalParams& params, unsigned s);

// N' <= d (q^k)^{s-1} + pi_{s-2}.
BoundReport tss_check(const DiagonalParams& params, unsigned s);

}  // namespace diagsurf
