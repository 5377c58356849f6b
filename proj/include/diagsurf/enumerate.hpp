#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diagsurf/bigint.hpp"
#include "diagsurf/field.hpp"

namespace diagsurf {

// Brute-force oracles for the diagonal equation. Nothing here uses the
// closed forms in counts.hpp.

struct ValueProfile {
  std::uint32_t Q = 0;
  std::uint32_t d = 0;
  unsigned s = 0;
  std::vector<BigInt> counts;  // counts[a] = #{x : sum x_i^d = a}, indexed by code
  BigInt zero_count;
  std::optional<BigInt> unit_count;     // common value on U_n; empty if not constant
  std::optional<BigInt> nonunit_count;  // common value off U_n u {0}; empty if not constant
  bool class_constant = false;
};

ValueProfile value_profile(const Field& field, std::uint32_t d, unsigned s, const Limits& limits = {});

// Literal s-fold loop over F^s.
BigInt naive_count(const Field& field, std::uint32_t d, unsigned s, Element b, const Limits& limits = {});

enum class Provenance { Scan, Direct, Recursive, Complement };

// Points of P^s stored point-major: point j occupies coords[j*(dim+1) .. (j+1)*(dim+1)).
struct PointMatrix {
  unsigned dim = 0;
  std::vector<Element> coords;
  Provenance provenance = Provenance::Scan;

  std::size_t width() const { return dim + 1; }
  std::size_t size() const { return coords.size() / width(); }
  std::span<const Element> point(std::size_t j) const {
    return std::span<const Element>(coords).subspan(j * width(), width());
  }
  void push_back(std::span<const Element> pt) { coords.insert(coords.end(), pt.begin(), pt.end()); }
};

// Canonical scan order: position of the leading 1 first, then remaining
// coordinates lexicographically by code.
bool scan_less(std::span<const Element> a, std::span<const Element> b);

// Sorted copy in scan order.
PointMatrix sorted_by_scan(const PointMatrix& pm);

bool is_normalized(std::span<const Element> pt);

// Calls fn(point) for every normalized representative of P^s in scan order.
template <typename Fn>
void for_each_projective_point(const Field& field, unsigned s, Fn&& fn) {
  std::vector<Element> pt(s + 1);
  const std::uint32_t Q = field.size();
  for (unsigned lead = 0; lead <= s; ++lead) {
    std::fill(pt.begin(), pt.end(), Field::zero());
    pt[lead] = Field::one();
    while (true) {
      fn(std::span<const Element>(pt));
      // odometer over coordinates lead+1..s, last coordinate fastest
      unsigned i = s;
      while (i > lead) {
        if (++pt[i].code < Q) break;
        pt[i].code = 0;
        --i;
      }
      if (i == lead) break;
    }
  }
}

std::uint64_t projective_space_size(std::uint32_t Q, unsigned s);

// Every normalized point of P^s in scan order.
PointMatrix all_points(const Field& field, unsigned s, const Limits& limits = {});

// Points of P^s with sum x_i^d = 0, in scan order.
PointMatrix projective_scan(const Field& field, std::uint32_t d, unsigned s, const Limits& limits = {});

}  // namespace diagsurf
