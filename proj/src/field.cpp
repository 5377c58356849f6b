#include "diagsurf/field.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace diagsurf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::ZeroToNonpositive: return "ZeroToNonpositive";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Walks the powers of x modulo the candidate polynomial. Fills the tables and
// returns true iff x has multiplicative order exactly Q-1.
bool try_primitive(const std::vector<unsigned>& modulus, unsigned p, std::uint32_t Q,
                   const std::vector<std::uint32_t>& radix, std::vector<std::uint32_t>& log,
                   std::vector<Element>& antilog) {
  const unsigned m = static_cast<unsigned>(modulus.size()) - 1;
  std::fill(log.begin(), log.end(), kUnset);
  std::vector<unsigned> state(m, 0);
  state[0] = 1;
  for (std::uint32_t j = 0; j + 1 < Q; ++j) {
    std::uint32_t code = 0;
    for (unsigned i = 0; i < m; ++i) code += state[i] * radix[i];
    if (code == 0 || log[code] != kUnset) return false;
    log[code] = j;
    antilog[j] = Element{code};
    // state <- x * state mod modulus
    const unsigned top = state[m - 1];
    for (unsigned i = m - 1; i > 0; --i) {
      state[i] = (state[i - 1] + p - (top * modulus[i]) % p) % p;
    }
    state[0] = (p - (top * modulus[0]) % p) % p;
  }
  return true;
}

}  // namespace

Field build_field(unsigned p, unsigned m, const Limits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::BadParams, "extension degree must be >= 1");
  unsigned long long Q = 1;
  for (unsigned i = 0; i < m; ++i) {
    Q *= p;
    if (Q > limits.max_field) {
      throw Error(ErrorKind::SizeExceeded, "field " + std::to_string(p) + "^" +
                                               std::to_string(m) + " exceeds bound " +
                                               std::to_string(limits.max_field));
    }
  }

  Field f;
  f.spec_.p = p;
  f.spec_.m = m;
  f.size_ = static_cast<std::uint32_t>(Q);
  f.radix_.resize(m);
  for (unsigned i = 0, r = 1; i < m; ++i, r *= p) f.radix_[i] = r;
  f.log_.assign(Q, kUnset);
  std::vector<Element> antilog(Q - 1);

  // Candidates c_0..c_{m-1} in lexicographic order with c_0 most significant.
  std::vector<unsigned> modulus(m + 1, 0);
  modulus[m] = 1;
  bool found = false;
  for (std::uint64_t t = 0; t < Q && !found; ++t) {
    std::uint64_t rest = t;
    for (unsigned i = m; i-- > 0;) {
      modulus[i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    if (modulus[0] == 0) continue;
    found = try_primitive(modulus, p, f.size_, f.radix_, f.log_, antilog);
  }
  if (!found) throw Error(ErrorKind::Internal, "no primitive modulus found");

  f.spec_.modulus = modulus;
  f.log_[0] = kUnset;
  f.antilog_.resize(2 * (Q - 1));
  for (std::uint32_t j = 0; j + 1 < Q; ++j) {
    f.antilog_[j] = antilog[j];
    f.antilog_[j + Q - 1] = antilog[j];
  }
  return f;
}

Element Field::add(Element a, Element b) const noexcept {
  if (spec_.p == 2) return Element{a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, out = 0;
  for (unsigned i = 0; i < spec_.m; ++i) {
    out += ((x % spec_.p + y % spec_.p) % spec_.p) * radix_[i];
    x /= spec_.p;
    y /= spec_.p;
  }
  return Element{out};
}

Element Field::neg(Element a) const noexcept {
  if (spec_.p == 2) return a;
  std::uint32_t x = a.code, out = 0;
  for (unsigned i = 0; i < spec_.m; ++i) {
    out += ((spec_.p - x % spec_.p) % spec_.p) * radix_[i];
    x /= spec_.p;
  }
  return Element{out};
}

Element Field::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const noexcept {
  if (a.code == 0 || b.code == 0) return zero();
  return antilog_[log_[a.code] + log_[b.code]];
}

Element Field::inv(Element a) const {
  if (a.code == 0) throw Error(ErrorKind::ZeroToNonpositive, "inverse of zero");
  return antilog_[(order() - log_[a.code]) % order()];
}

Element Field::pow(Element a, long long e) const {
  if (a.code == 0) {
    if (e <= 0) throw Error(ErrorKind::ZeroToNonpositive, "0^" + std::to_string(e));
    return zero();
  }
  const __int128 n = order();
  __int128 x = static_cast<__int128>(log_[a.code]) * e % n;
  if (x < 0) x += n;
  return antilog_[static_cast<std::uint32_t>(x)];
}

std::uint32_t Field::log(Element a) const {
  if (a.code == 0 || a.code >= size_) throw Error(ErrorKind::BadParams, "log of zero or invalid element");
  return log_[a.code];
}

Element Field::antilog(long long e) const noexcept {
  const long long n = order();
  long long x = e % n;
  if (x < 0) x += n;
  return antilog_[static_cast<std::uint32_t>(x)];
}

std::vector<unsigned> Field::coefficients(Element a) const {
  std::vector<unsigned> out(spec_.m);
  std::uint32_t x = a.code;
  for (unsigned i = 0; i < spec_.m; ++i) {
    out[i] = x % spec_.p;
    x /= spec_.p;
  }
  return out;
}

Element Field::from_coefficients(std::span<const unsigned> coeffs) const {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < spec_.m && i < coeffs.size(); ++i) out += (coeffs[i] % spec_.p) * radix_[i];
  return Element{out};
}

std::vector<Element> UnitGroup::elements() const {
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint32_t c = 0; c < member.size(); ++c) {
    if (member[c]) out.push_back(Element{c});
  }
  return out;
}

namespace {

void require_divisor(const Field& field, std::uint32_t d) {
  if (d == 0 || field.order() % d != 0) {
    throw Error(ErrorKind::NotADivisor,
                std::to_string(d) + " does not divide " + std::to_string(field.order()));
  }
}

}  // namespace

UnitGroup unit_group(const Field& field, std::uint32_t d) {
  require_divisor(field, d);
  UnitGroup g;
  g.d = d;
  g.n = field.order() / d;
  g.member.assign(field.size(), false);
  for (std::uint32_t j = 0; j < g.n; ++j) {
    g.member[field.antilog(static_cast<long long>(j) * d).code] = true;
  }
  return g;
}

std::vector<Element> dth_roots(const Field& field, Element a, std::uint32_t d) {
  require_divisor(field, d);
  if (a.code == 0) return {Field::zero()};
  const std::uint32_t la = field.log(a);
  if (la % d != 0) return {};
  const std::uint32_t n = field.order() / d;
  std::vector<Element> out;
  out.reserve(d);
  for (std::uint32_t l = 0; l < d; ++l) {
    out.push_back(field.antilog(static_cast<long long>(la / d) + static_cast<long long>(l) * n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool neg_in_unit_group(const Field& field, std::uint32_t d) {
  const UnitGroup g = unit_group(field, d);
  for (std::uint32_t c = 0; c < field.size(); ++c) {
    if (g.member[c] && !g.contains(field.neg(Element{c}))) return false;
  }
  return true;
}

}  // namespace diagsurf
