#pragma once

#include <vector>

#include "diagsurf/bigint.hpp"

namespace diagsurf {

// Truncated power series with exact rational coefficients t^0 .. t^K.
class SeriesQ {
 public:
  explicit SeriesQ(unsigned order);
  SeriesQ(unsigned order, std::vector<BigRational> coeffs);

  static SeriesQ one(unsigned order);
  // (1 - c t)^e for any integer e, by the generalized binomial series.
  static SeriesQ binomial(unsigned order, const BigInt& c, long e);

  unsigned order() const noexcept { return order_; }
  const BigRational& operator[](unsigned i) const { return coeffs_[i]; }
  BigRational& operator[](unsigned i) { return coeffs_[i]; }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

  SeriesQ operator+(const SeriesQ& other) const;
  SeriesQ operator-(const SeriesQ& other) const;
  SeriesQ operator*(const SeriesQ& other) const;
  SeriesQ inverse() const;  // needs a nonzero constant term
  SeriesQ log() const;      // needs constant term 1
  SeriesQ exp() const;      // needs constant term 0

  bool operator==(const SeriesQ& other) const { return coeffs_ == other.coeffs_; }

 private:
  unsigned order_;
  std::vector<BigRational> coeffs_;
};

}  // namespace diagsurf
