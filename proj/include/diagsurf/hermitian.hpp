#pragma once

#include <optional>
#include <vector>

#include "diagsurf/bigint.hpp"
#include "diagsurf/enumerate.hpp"
#include "diagsurf/field.hpp"

namespace diagsurf {

// Hermitian point sets H_s of x_0^{p^r+1} + ... + x_s^{p^r+1} = 0 over
// F_q, q = p^{2r}. The field passed in must have even extension degree.

struct HermitianField {
  unsigned r = 0;
  std::uint32_t degree = 0;  // p^r + 1
};

// Reads r from F_{p^{2r}}; throws BadParams for odd extension degree.
HermitianField hermitian_parameters(const Field& field);

PointMatrix build_direct(const Field& field, unsigned s, const Limits& limits = {});

struct RecursionCertificate {
  unsigned s = 0;
  std::uint64_t h = 0;  // |H_s|
  std::uint64_t a = 0;  // |A_s|
  std::uint64_t p = 0;  // |P^s|
  Element zeta_root;    // generator of the order p^r+1 subgroup
  std::vector<Element> residual;        // per A_s column: sum a_i^{p^r+1}
  std::vector<Element> representative;  // per A_s column: b_1 with b_1^{p^r+1} = -residual
  std::vector<std::size_t> block_widths;  // p^r+1 blocks of width a_s, then h_s
};

struct RecursiveBuild {
  std::vector<PointMatrix> sets;                   // H_1 .. H_{s_max}
  std::vector<RecursionCertificate> certificates;  // steps s = 1 .. s_max-1
};

// Complement of H_s in P^s, in scan order.
PointMatrix complement(const Field& field, const PointMatrix& hermitian, const Limits& limits = {});

RecursiveBuild build_recursive(const Field& field, unsigned s_max, const Limits& limits = {});

struct RecursionStep {
  unsigned s = 0;
  std::uint64_t direct_size = 0;
  std::uint64_t recursive_size = 0;
  BigInt closed_form;         // projective_count at k = 1, d = p^r + 1
  BigRational bose_literal;   // (p^{r(s-1)} - (-1)^{s+1})(p^{rs} - (-1)^s)/(q-1)
  BigInt bose_corrected;      // first exponent read as r(s+1)
  bool sets_equal = false;
  bool recursion_holds = false;  // h_s = (p^r+1)(pi_{s-1} - h_{s-1}) + h_{s-1}; true at s = 1
  bool closed_form_matches = false;
  bool certificate_valid = false;  // true at s = 1
  bool bose_literal_matches = false;
  bool bose_corrected_matches = false;

  bool pass() const {
    return sets_equal && recursion_holds && closed_form_matches && certificate_valid &&
           bose_corrected_matches;
  }
};

struct RecursionReport {
  unsigned p = 0, r = 0;
  std::vector<RecursionStep> steps;  // s = 1 .. s_max
  bool pass() const;
};

RecursionReport verify_recursion(const Field& field, unsigned s_max, const Limits& limits = {});

// Checks every invariant of one certificate against the sets it links.
bool check_certificate(const Field& field, const RecursionCertificate& cert, const PointMatrix& lower,
                       const PointMatrix& upper);

}  // namespace diagsurf
