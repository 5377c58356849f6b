#include "diagsurf/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace diagsurf {

namespace {

using Wide = unsigned __int128;

BigInt to_big(Wide v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  BigInt out = BigInt(static_cast<unsigned long>(hi));
  out <<= 64;
  out += BigInt(static_cast<unsigned long>(lo));
  return out;
}

std::vector<std::uint32_t> power_table(const Field& field, std::uint32_t d) {
  std::vector<std::uint32_t> out(field.size());
  for (std::uint32_t c = 0; c < field.size(); ++c) out[c] = field.pow(Element{c}, d).code;
  return out;
}

void require_divisor(const Field& field, std::uint32_t d) {
  if (d == 0 || field.order() % d != 0) {
    throw Error(ErrorKind::NotADivisor,
                std::to_string(d) + " does not divide " + std::to_string(field.order()));
  }
}

}  // namespace

ValueProfile value_profile(const Field& field, std::uint32_t d, unsigned s, const Limits& limits) {
  require_divisor(field, d);
  if (s < 1) throw Error(ErrorKind::BadParams, "value_profile needs s >= 1");
  const std::uint32_t Q = field.size();
  if (Q > limits.max_profile_field) {
    throw Error(ErrorKind::SizeExceeded, "profile field size " + std::to_string(Q) +
                                             " exceeds bound " + std::to_string(limits.max_profile_field));
  }
  // Q^s must fit the 128-bit accumulators.
  if (static_cast<unsigned long>(std::bit_width(Q)) * s > 126) {
    throw Error(ErrorKind::SizeExceeded, "Q^s exceeds 126 bits");
  }

  // Single-variable profile.
  std::vector<Wide> single(Q, 0);
  for (std::uint32_t x : power_table(field, d)) ++single[x];
  std::vector<std::pair<std::uint32_t, Wide>> support;
  for (std::uint32_t b = 0; b < Q; ++b) {
    if (single[b] != 0) support.emplace_back(b, single[b]);
  }

  std::vector<Wide> acc = single;
  std::vector<Wide> next(Q);
  for (unsigned fold = 1; fold < s; ++fold) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t x = 0; x < Q; ++x) {
      if (acc[x] == 0) continue;
      for (const auto& [b, c] : support) {
        next[field.add(Element{x}, Element{b}).code] += acc[x] * c;
      }
    }
    acc.swap(next);
  }

  ValueProfile prof;
  prof.Q = Q;
  prof.d = d;
  prof.s = s;
  prof.counts.reserve(Q);
  for (Wide v : acc) prof.counts.push_back(to_big(v));
  prof.zero_count = prof.counts[0];

  const UnitGroup units = unit_group(field, d);
  bool unit_const = true, nonunit_const = true;
  for (std::uint32_t a = 1; a < Q; ++a) {
    auto& slot = units.member[a] ? prof.unit_count : prof.nonunit_count;
    bool& flag = units.member[a] ? unit_const : nonunit_const;
    if (!slot) {
      slot = prof.counts[a];
    } else if (*slot != prof.counts[a]) {
      flag = false;
    }
  }
  if (!unit_const) prof.unit_count.reset();
  if (!nonunit_const) prof.nonunit_count.reset();
  prof.class_constant = unit_const && nonunit_const;
  return prof;
}

BigInt naive_count(const Field& field, std::uint32_t d, unsigned s, Element b, const Limits& limits) {
  if (s < 1) throw Error(ErrorKind::BadParams, "naive_count needs s >= 1");
  const std::uint32_t Q = field.size();
  unsigned long long tuples = 1;
  for (unsigned i = 0; i < s; ++i) {
    tuples *= Q;
    if (tuples > limits.max_naive) {
      throw Error(ErrorKind::SizeExceeded, std::to_string(Q) + "^" + std::to_string(s) +
                                               " tuples exceed bound " + std::to_string(limits.max_naive));
    }
  }
  const std::vector<std::uint32_t> pw = power_table(field, d);

  // partial[i] = sum of the first i terms.
  std::vector<std::uint32_t> x(s, 0);
  std::vector<Element> partial(s + 1, Field::zero());
  for (unsigned i = 0; i < s; ++i) partial[i + 1] = field.add(partial[i], Element{pw[x[i]]});
  unsigned long long hits = 0;
  while (true) {
    if (partial[s] == b) ++hits;
    int i = static_cast<int>(s) - 1;
    while (i >= 0 && ++x[i] == Q) {
      x[i] = 0;
      --i;
    }
    if (i < 0) break;
    for (unsigned j = static_cast<unsigned>(i); j < s; ++j) {
      partial[j + 1] = field.add(partial[j], Element{pw[x[j]]});
    }
  }
  return BigInt(static_cast<unsigned long>(hits));
}

bool is_normalized(std::span<const Element> pt) {
  for (Element e : pt) {
    if (e.code != 0) return e.code == 1;
  }
  return false;
}

bool scan_less(std::span<const Element> a, std::span<const Element> b) {
  auto lead = [](std::span<const Element> pt) {
    std::size_t i = 0;
    while (i < pt.size() && pt[i].code == 0) ++i;
    return i;
  };
  const std::size_t la = lead(a), lb = lead(b);
  if (la != lb) return la < lb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PointMatrix sorted_by_scan(const PointMatrix& pm) {
  std::vector<std::size_t> idx(pm.size());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return scan_less(pm.point(a), pm.point(b)); });
  PointMatrix out;
  out.dim = pm.dim;
  out.provenance = pm.provenance;
  out.coords.reserve(pm.coords.size());
  for (std::size_t j : idx) out.push_back(pm.point(j));
  return out;
}

std::uint64_t projective_space_size(std::uint32_t Q, unsigned s) {
  // 1 + Q + ... + Q^s, saturating
  std::uint64_t total = 0, term = 1;
  for (unsigned i = 0; i <= s; ++i) {
    if (total > UINT64_MAX - term) return UINT64_MAX;
    total += term;
    if (i < s) {
      if (term > UINT64_MAX / Q) return UINT64_MAX;
      term *= Q;
    }
  }
  return total;
}

namespace {

void require_scan_size(const Field& field, unsigned s, const Limits& limits) {
  const std::uint64_t total = projective_space_size(field.size(), s);
  if (total > limits.max_scan) {
    throw Error(ErrorKind::SizeExceeded, "P^" + std::to_string(s) + " over F_" +
                                             std::to_string(field.size()) + " exceeds scan bound " +
                                             std::to_string(limits.max_scan));
  }
}

}  // namespace

PointMatrix all_points(const Field& field, unsigned s, const Limits& limits) {
  require_scan_size(field, s, limits);
  PointMatrix out;
  out.dim = s;
  out.provenance = Provenance::Scan;
  out.coords.reserve(projective_space_size(field.size(), s) * (s + 1));
  for_each_projective_point(field, s, [&](std::span<const Element> pt) { out.push_back(pt); });
  return out;
}

PointMatrix projective_scan(const Field& field, std::uint32_t d, unsigned s, const Limits& limits) {
  require_scan_size(field, s, limits);
  const std::vector<std::uint32_t> pw = power_table(field, d);
  PointMatrix out;
  out.dim = s;
  out.provenance = Provenance::Scan;
  for_each_projective_point(field, s, [&](std::span<const Element> pt) {
    Element sum = Field::zero();
    for (Element e : pt) sum = field.add(sum, Element{pw[e.code]});
    if (sum.code == 0) out.push_back(pt);
  });
  return out;
}

}  // namespace diagsurf
