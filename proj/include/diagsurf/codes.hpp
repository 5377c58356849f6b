#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "diagsurf/bigint.hpp"
#include "diagsurf/enumerate.hpp"
#include "diagsurf/field.hpp"

namespace diagsurf {

struct Monomial {
  std::vector<unsigned> exponents;  // length s+1, summing to h

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// All degree-h monomials in s+1 variables, x_0^h first (graded lex).
std::vector<Monomial> monomial_basis(unsigned s, unsigned h);

struct GeneratorMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> entries;  // row-major

  Element at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  Element& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

GeneratorMatrix evaluation_matrix(const Field& field, const PointMatrix& points, unsigned h);

// Row-reduced basis of the row space (rank rows).
GeneratorMatrix row_basis(const Field& field, const GeneratorMatrix& g);

struct WeightDistribution {
  std::size_t n = 0;
  std::size_t kdim = 0;
  std::map<std::size_t, std::uint64_t> counts;  // weight -> number of codewords

  std::set<std::size_t> nonzero_weights() const;
  std::size_t min_nonzero_weight() const;  // n + 1 for the zero code
  std::uint64_t total() const;
};

WeightDistribution weight_distribution(const Field& field, const GeneratorMatrix& g, const Limits& limits = {});

struct TwoWeightReport {
  unsigned p = 0, r = 0, s = 0;
  WeightDistribution spectrum;
  std::set<std::size_t> observed;
  std::set<BigInt> corrected;  // p^{r(2s-1)}, p^{r(2s-1)} + (-1)^{s-1} p^{r(s-1)}
  std::set<BigInt> literal;    // p^r (2s-1) + (-1)^{s-1} p^{s-1}, p^{r(2s-1)}
  bool two_weights = false;
  bool corrected_matches = false;
  bool literal_matches = false;
};

TwoWeightReport two_weight_check(unsigned p, unsigned r, unsigned s, const Limits& limits = {});

struct TssCodeReport {
  unsigned p = 0, r = 0, s = 0, h = 0;
  std::size_t n = 0;
  std::size_t kdim = 0;
  std::size_t min_weight = 0;
  BigInt bound;  // n - (h q^{s-1} + pi_{s-2})
  bool met = false;
  bool equality = false;
};

TssCodeReport min_weight_vs_tss(unsigned p, unsigned r, unsigned s, unsigned h, const Limits& limits = {});

}  // namespace diagsurf
