#pragma once

#include <string>
#include <vector>

#include "diagsurf/bigint.hpp"
#include "diagsurf/series.hpp"

namespace diagsurf {

// One factor (1 - c t)^e.
struct ZetaFactor {
  BigInt c;
  long e = 0;

  friend bool operator==(const ZetaFactor&, const ZetaFactor&) = default;
};

// Product of (1 - c t)^e factors with distinct c and nonzero e, ordered by
// |c| and then by c.
class FactoredRational {
 public:
  FactoredRational() = default;
  explicit FactoredRational(std::vector<ZetaFactor> factors);

  const std::vector<ZetaFactor>& factors() const noexcept { return factors_; }

  FactoredRational operator*(const FactoredRational& other) const;
  FactoredRational operator/(const FactoredRational& other) const;
  bool operator==(const FactoredRational& other) const = default;

  SeriesQ expand(unsigned order) const;

  // {"factors": [{"c": "<decimal>", "e": <int>}, ...]}
  std::string to_json() const;

 private:
  std::vector<ZetaFactor> factors_;
};

// Zeta function of x_0^d + ... + x_s^d = 0 in P^s over F_{p^{2r}}.
FactoredRational diagonal_zeta(unsigned p, unsigned r, unsigned d, unsigned s);

// N_k = -sum e c^k for k = 1..K, read off the factored form.
std::vector<BigInt> series_counts(const FactoredRational& zeta, unsigned K);

// The same sequence obtained independently as k [t^k] log(expand(zeta)).
std::vector<BigRational> series_counts_via_log(const FactoredRational& zeta, unsigned K);

// Closed form of Z_s / Z_{s-1} as printed in the ratio display, with the
// (s-2)/2 exponent read as q^{(s-2)/2}.
FactoredRational ratio_closed_form(unsigned p, unsigned r, unsigned d, unsigned s);

struct RatioReport {
  unsigned p = 0, r = 0, d = 0, s = 0, K = 0;
  SeriesQ quotient{0};     // expand(Z_s) / expand(Z_{s-1})
  SeriesQ class_one{0};    // exp(sum_k N_{1,k,s} t^k / k)
  SeriesQ closed_form{0};  // expand(ratio_closed_form)
  bool equal = false;
};

RatioReport ratio_f_check(unsigned p, unsigned r, unsigned d, unsigned s, unsigned K);

// Points of x_0^{p^{rk}+1} + ... + x_s^{p^{rk}+1} = 0 in P^s(F_{q^k}).
BigInt tower_counts(unsigned p, unsigned r, unsigned s, unsigned k);

// The tower zeta closed form evaluated literally, with the product bound
// ks-1 taken at k = 1.
FactoredRational tower_literal_zeta(unsigned p, unsigned r, unsigned s);

struct TowerRow {
  unsigned k = 0;
  BigInt oracle;            // tower_counts
  BigInt literal_zeta;      // -sum e c^k of tower_literal_zeta
  BigInt printed_sum;       // (q^{ks}-1)/(q-1) + q^{k(s-1)/2} B(p^{rk}+1, s+1)
  BigInt printed_split;     // the even/odd split expression
  bool literal_zeta_match = false;
  bool printed_sum_match = false;
  bool printed_split_match = false;
};

struct TowerReport {
  unsigned p = 0, r = 0, s = 0;
  FactoredRational literal_zeta;
  std::vector<TowerRow> rows;
};

TowerReport tower_zeta_report(unsigned p, unsigned r, unsigned s, unsigned K);

}  // namespace diagsurf
