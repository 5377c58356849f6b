#include "diagsurf/zeta.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "diagsurf/counts.hpp"
#include "diagsurf/error.hpp"
#include "diagsurf/field.hpp"

namespace diagsurf {

namespace {

bool factor_less(const BigInt& a, const BigInt& b) {
  const int by_abs = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  if (by_abs != 0) return by_abs < 0;
  return a < b;
}

struct CLess {
  bool operator()(const BigInt& a, const BigInt& b) const { return factor_less(a, b); }
};

}  // namespace

FactoredRational::FactoredRational(std::vector<ZetaFactor> factors) {
  std::map<BigInt, long, CLess> merged;
  for (auto& f : factors) merged[f.c] += f.e;
  for (auto& [c, e] : merged) {
    if (e != 0) factors_.push_back(ZetaFactor{c, e});
  }
}

FactoredRational FactoredRational::operator*(const FactoredRational& other) const {
  std::vector<ZetaFactor> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return FactoredRational(std::move(all));
}

FactoredRational FactoredRational::operator/(const FactoredRational& other) const {
  std::vector<ZetaFactor> all = factors_;
  for (const auto& f : other.factors_) all.push_back(ZetaFactor{f.c, -f.e});
  return FactoredRational(std::move(all));
}

SeriesQ FactoredRational::expand(unsigned order) const {
  SeriesQ out = SeriesQ::one(order);
  for (const auto& f : factors_) out = out * SeriesQ::binomial(order, f.c, f.e);
  return out;
}

std::string FactoredRational::to_json() const {
  nlohmann::ordered_json j;
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : factors_) {
    j["factors"].push_back({{"c", to_decimal(f.c)}, {"e", f.e}});
  }
  return j.dump();
}

FactoredRational diagonal_zeta(unsigned p, unsigned r, unsigned d, unsigned s) {
  DiagonalParams params{p, r, 1, d};
  params.validate();
  if (s < 1) throw Error(ErrorKind::BadParams, "zeta needs s >= 1");
  const BigInt q = params.q();
  const long B = b_function(d, s + 1).get_si();
  const BigInt half = ipow(p, static_cast<unsigned long>(r) * (s - 1));  // q^{(s-1)/2}
  std::vector<ZetaFactor> factors;
  if (s % 2 == 0) {
    factors.push_back({-half, B});
  } else {
    factors.push_back({half, -B});
  }
  for (unsigned i = 0; i < s; ++i) factors.push_back({ipow(q, i), -1});
  return FactoredRational(std::move(factors));
}

std::vector<BigInt> series_counts(const FactoredRational& zeta, unsigned K) {
  if (K < 1) throw Error(ErrorKind::BadParams, "need at least one term");
  std::vector<BigInt> out(K, 0);
  for (const auto& f : zeta.factors()) {
    BigInt power = 1;
    for (unsigned k = 1; k <= K; ++k) {
      power *= f.c;
      out[k - 1] -= f.e * power;
    }
  }
  return out;
}

std::vector<BigRational> series_counts_via_log(const FactoredRational& zeta, unsigned K) {
  if (K < 1) throw Error(ErrorKind::BadParams, "need at least one term");
  const SeriesQ lg = zeta.expand(K).log();
  std::vector<BigRational> out;
  for (unsigned k = 1; k <= K; ++k) {
    BigRational v = lg[k] * BigRational(k);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

FactoredRational ratio_closed_form(unsigned p, unsigned r, unsigned d, unsigned s) {
  if (s < 2) throw Error(ErrorKind::BadParams, "ratio needs s >= 2");
  DiagonalParams{p, r, 1, d}.validate();
  const BigInt q = ipow(p, 2ul * r);
  const long b_next = b_function(d, s + 1).get_si();
  const long b_here = b_function(d, s).get_si();
  const BigInt q_half_s1 = ipow(p, static_cast<unsigned long>(r) * (s - 1));  // q^{(s-1)/2}
  const BigInt q_half_s2 = ipow(p, static_cast<unsigned long>(r) * (s - 2));  // q^{(s-2)/2}
  std::vector<ZetaFactor> factors{{ipow(q, s - 1), -1}};
  if (s % 2 == 0) {
    factors.push_back({-q_half_s1, b_next});
    factors.push_back({q_half_s2, b_here});
  } else {
    factors.push_back({q_half_s1, -b_next});
    factors.push_back({-q_half_s2, -b_here});
  }
  return FactoredRational(std::move(factors));
}

RatioReport ratio_f_check(unsigned p, unsigned r, unsigned d, unsigned s, unsigned K) {
  if (s < 2) throw Error(ErrorKind::BadParams, "ratio check needs s >= 2");
  RatioReport rep;
  rep.p = p;
  rep.r = r;
  rep.d = d;
  rep.s = s;
  rep.K = K;
  rep.quotient = diagonal_zeta(p, r, d, s).expand(K) * diagonal_zeta(p, r, d, s - 1).expand(K).inverse();

  SeriesQ logf(K);
  for (unsigned k = 1; k <= K; ++k) {
    const BigInt n1 = wolfmann_counts(DiagonalParams{p, r, k, d}, s).N1;
    logf[k] = BigRational(n1, BigInt(k));
    logf[k].canonicalize();
  }
  rep.class_one = logf.exp();
  rep.closed_form = ratio_closed_form(p, r, d, s).expand(K);
  rep.equal = rep.quotient == rep.class_one && rep.quotient == rep.closed_form;
  return rep;
}

BigInt tower_counts(unsigned p, unsigned r, unsigned s, unsigned k) {
  if (!is_prime(p) || r < 1 || s < 1 || k < 1) {
    throw Error(ErrorKind::BadParams, "tower needs prime p and r, s, k >= 1");
  }
  const BigInt h = ipow(p, static_cast<unsigned long>(r) * k);  // p^{rk} = q^{k/2}
  const BigInt Qk = h * h;
  const unsigned long degree = mpz_get_ui(BigInt(h + 1).get_mpz_t());
  if (BigInt(h + 1) != degree) throw Error(ErrorKind::BadParams, "tower degree overflows");
  return pi_size(Qk, static_cast<long>(s) - 1) + ipow(h, s - 1) * b_function(degree, s + 1);
}

FactoredRational tower_literal_zeta(unsigned p, unsigned r, unsigned s) {
  if (!is_prime(p) || r < 1 || s < 1) throw Error(ErrorKind::BadParams, "tower needs prime p and r, s >= 1");
  const BigInt q = ipow(p, 2ul * r);
  const unsigned a = s / 2;
  std::vector<ZetaFactor> factors;
  for (unsigned i = 1; i + 1 <= s; ++i) factors.push_back({ipow(q, i), -1});  // 1/P(t)
  const long p1_exp = (s % 2 == 0) ? -static_cast<long>(p - 1) : static_cast<long>(p - 1);
  for (unsigned j = 0; j < a; ++j) {
    factors.push_back({ipow(p, static_cast<unsigned long>(r) * (s + 2 * j)), p1_exp});
  }
  if (s % 2 == 1) factors.push_back({ipow(p, static_cast<unsigned long>(r) * (s + 2 * a)), -1});
  return FactoredRational(std::move(factors));
}

namespace {

BigInt printed_split(unsigned p, unsigned r, unsigned s, unsigned k) {
  const unsigned long rk = static_cast<unsigned long>(r) * k;
  const BigInt Qk = ipow(p, 2 * rk);
  const unsigned a = s / 2;
  BigInt inner = 0;
  if (s % 2 == 0) {
    for (unsigned j = 0; j < a; ++j) inner += ipow(p, 2 * j * rk + 1) - ipow(p, 2 * rk * j);
  } else {
    for (unsigned j = 0; j <= a; ++j) inner += ipow(p, 2 * j * rk);
    for (unsigned j = 0; j < a; ++j) inner -= ipow(p, 2 * rk * j + 1);
  }
  return pi_size(Qk, static_cast<long>(s) - 1) + ipow(p, rk * s) * inner;
}

}  // namespace

TowerReport tower_zeta_report(unsigned p, unsigned r, unsigned s, unsigned K) {
  TowerReport rep;
  rep.p = p;
  rep.r = r;
  rep.s = s;
  rep.literal_zeta = tower_literal_zeta(p, r, s);
  const std::vector<BigInt> implied = series_counts(rep.literal_zeta, K);
  const BigInt q = ipow(p, 2ul * r);
  for (unsigned k = 1; k <= K; ++k) {
    TowerRow row;
    row.k = k;
    row.oracle = tower_counts(p, r, s, k);
    row.literal_zeta = implied[k - 1];
    const BigInt h = ipow(p, static_cast<unsigned long>(r) * k);
    row.printed_sum = (ipow(q, static_cast<unsigned long>(k) * s) - 1) / (q - 1) +
                      ipow(h, s - 1) * b_function(mpz_get_ui(BigInt(h + 1).get_mpz_t()), s + 1);
    row.printed_split = printed_split(p, r, s, k);
    row.literal_zeta_match = row.literal_zeta == row.oracle;
    row.printed_sum_match = row.printed_sum == row.oracle;
    row.printed_split_match = row.printed_split == row.oracle;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace diagsurf
