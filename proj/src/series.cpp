#include "diagsurf/series.hpp"

#include <algorithm>
#include <utility>

#include "diagsurf/error.hpp"

namespace diagsurf {

SeriesQ::SeriesQ(unsigned order) : order_(order), coeffs_(order + 1, BigRational(0)) {}

SeriesQ::SeriesQ(unsigned order, std::vector<BigRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, BigRational(0));
  for (auto& c : coeffs_) c.canonicalize();
}

SeriesQ SeriesQ::one(unsigned order) {
  SeriesQ out(order);
  out.coeffs_[0] = 1;
  return out;
}

SeriesQ SeriesQ::binomial(unsigned order, const BigInt& c, long e) {
  // coefficient j: C(e, j) (-c)^j with C(e, j) = e (e-1) ... (e-j+1) / j!
  SeriesQ out(order);
  BigRational term = 1;
  const BigInt neg_c = -c;
  for (unsigned j = 0; j <= order; ++j) {
    out.coeffs_[j] = term;
    term *= BigRational(BigInt(e - static_cast<long>(j)) * neg_c, BigInt(j + 1));
    term.canonicalize();
  }
  return out;
}

namespace {

void require_same_order(const SeriesQ& a, const SeriesQ& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::BadParams, "series truncation orders differ");
}

}  // namespace

SeriesQ SeriesQ::operator+(const SeriesQ& other) const {
  require_same_order(*this, other);
  SeriesQ out(order_);
  for (unsigned i = 0; i <= order_; ++i) out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return out;
}

SeriesQ SeriesQ::operator-(const SeriesQ& other) const {
  require_same_order(*this, other);
  SeriesQ out(order_);
  for (unsigned i = 0; i <= order_; ++i) out.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
  return out;
}

SeriesQ SeriesQ::operator*(const SeriesQ& other) const {
  require_same_order(*this, other);
  SeriesQ out(order_);
  for (unsigned i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; i + j <= order_; ++j) out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

SeriesQ SeriesQ::inverse() const {
  if (coeffs_[0] == 0) throw Error(ErrorKind::BadParams, "series inverse needs a nonzero constant term");
  SeriesQ out(order_);
  out.coeffs_[0] = 1 / coeffs_[0];
  for (unsigned n = 1; n <= order_; ++n) {
    BigRational acc = 0;
    for (unsigned i = 1; i <= n; ++i) acc += coeffs_[i] * out.coeffs_[n - i];
    out.coeffs_[n] = -acc / coeffs_[0];
  }
  return out;
}

SeriesQ SeriesQ::log() const {
  if (coeffs_[0] != 1) throw Error(ErrorKind::BadParams, "series log needs constant term 1");
  // g = log f satisfies f g' = f', so n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
  SeriesQ out(order_);
  for (unsigned n = 1; n <= order_; ++n) {
    BigRational acc = BigRational(n) * coeffs_[n];
    for (unsigned k = 1; k < n; ++k) acc -= BigRational(k) * out.coeffs_[k] * coeffs_[n - k];
    out.coeffs_[n] = acc / BigRational(n);
  }
  return out;
}

SeriesQ SeriesQ::exp() const {
  if (coeffs_[0] != 0) throw Error(ErrorKind::BadParams, "series exp needs constant term 0");
  // g = exp f satisfies g' = f' g, so n g_n = sum_{k=1}^n k f_k g_{n-k}.
  SeriesQ out(order_);
  out.coeffs_[0] = 1;
  for (unsigned n = 1; n <= order_; ++n) {
    BigRational acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += BigRational(k) * coeffs_[k] * out.coeffs_[n - k];
    out.coeffs_[n] = acc / BigRational(n);
  }
  return out;
}

}  // namespace diagsurf
