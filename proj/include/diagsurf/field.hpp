#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "diagsurf/error.hpp"

namespace diagsurf {

// An element of F_{p^m}, encoded as sum c_i p^i where the element is
// sum c_i x^i modulo the field's defining polynomial.
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

struct FieldSpec {
  unsigned p = 0;
  unsigned m = 0;
  // c_0 .. c_m, monic (c_m == 1).
  std::vector<unsigned> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(unsigned long n);

// Immutable finite field context with log/antilog tables relative to the
// primitive element alpha = x.
class Field {
 public:
  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned p() const noexcept { return spec_.p; }
  unsigned m() const noexcept { return spec_.m; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t order() const noexcept { return size_ - 1; }  // |F*|

  static constexpr Element zero() noexcept { return Element{0}; }
  static constexpr Element one() noexcept { return Element{1}; }
  Element alpha() const noexcept { return antilog_[1 % order()]; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const;
  Element pow(Element a, long long e) const;

  // Discrete log base alpha, in [0, Q-1). Undefined for zero.
  std::uint32_t log(Element a) const;
  Element antilog(long long e) const noexcept;

  std::vector<unsigned> coefficients(Element a) const;
  Element from_coefficients(std::span<const unsigned> coeffs) const;

  bool operator==(const Field& other) const {
    return spec_ == other.spec_ && log_ == other.log_ && antilog_ == other.antilog_;
  }

 private:
  friend Field build_field(unsigned p, unsigned m, const Limits& limits);
  Field() = default;

  FieldSpec spec_;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> radix_;   // p^i
  std::vector<std::uint32_t> log_;     // indexed by code, log_[0] unused
  std::vector<Element> antilog_;       // length 2(Q-1) to skip reductions
};

// Builds F_{p^m} over the lexicographically smallest (reading c_0 upward)
// monic polynomial of degree m for which x is primitive.
Field build_field(unsigned p, unsigned m, const Limits& limits = {});

struct UnitGroup {
  std::uint32_t d = 0;
  std::uint32_t n = 0;              // (Q-1)/d
  std::vector<bool> member;         // indexed by element code

  bool contains(Element a) const { return member[a.code]; }
  std::vector<Element> elements() const;
};

// U_n = { alpha^{jd} }, the nonzero d-th powers.
UnitGroup unit_group(const Field& field, std::uint32_t d);

// All solutions of x^d = a in ascending code order.
std::vector<Element> dth_roots(const Field& field, Element a, std::uint32_t d);

// True iff -a lies in U_n for every a in U_n.
bool neg_in_unit_group(const Field& field, std::uint32_t d);

}  // namespace diagsurf
