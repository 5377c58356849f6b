#include "diagsurf/hermitian.hpp"

#include <algorithm>
#include <string>

#include "diagsurf/counts.hpp"

namespace diagsurf {

HermitianField hermitian_parameters(const Field& field) {
  if (field.m() % 2 != 0) {
    throw Error(ErrorKind::BadParams, "Hermitian sets need F_{p^{2r}}, got extension degree " +
                                          std::to_string(field.m()));
  }
  HermitianField hf;
  hf.r = field.m() / 2;
  std::uint32_t pr = 1;
  for (unsigned i = 0; i < hf.r; ++i) pr *= field.p();
  hf.degree = pr + 1;
  return hf;
}

PointMatrix build_direct(const Field& field, unsigned s, const Limits& limits) {
  if (s < 1) throw Error(ErrorKind::BadParams, "Hermitian dimension must be >= 1");
  PointMatrix out = projective_scan(field, hermitian_parameters(field).degree, s, limits);
  out.provenance = Provenance::Direct;
  return out;
}

PointMatrix complement(const Field& field, const PointMatrix& hermitian, const Limits& limits) {
  const PointMatrix sorted = sorted_by_scan(hermitian);
  const PointMatrix all = all_points(field, hermitian.dim, limits);
  PointMatrix out;
  out.dim = hermitian.dim;
  out.provenance = Provenance::Complement;
  std::size_t j = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto pt = all.point(i);
    if (j < sorted.size() && std::ranges::equal(pt, sorted.point(j))) {
      ++j;
    } else {
      out.push_back(pt);
    }
  }
  if (j != sorted.size()) throw Error(ErrorKind::Internal, "Hermitian set is not a subset of P^s");
  return out;
}

namespace {

Element power_sum(const Field& field, std::span<const Element> pt, std::uint32_t degree) {
  Element sum = Field::zero();
  for (Element e : pt) sum = field.add(sum, field.pow(e, degree));
  return sum;
}

// Nonzero elements of the subfield F_{p^r} are exactly those with x^{p^r - 1} = 1.
bool in_subfield_units(const Field& field, Element x, std::uint32_t degree) {
  return x.code != 0 && field.pow(x, degree - 2) == Field::one();
}

Element canonical_zeta_root(const Field& field, std::uint32_t degree) {
  return field.antilog(field.order() / degree);
}

}  // namespace

RecursiveBuild build_recursive(const Field& field, unsigned s_max, const Limits& limits) {
  if (s_max < 1) throw Error(ErrorKind::BadParams, "s_max must be >= 1");
  const std::uint32_t degree = hermitian_parameters(field).degree;
  const Element zeta = canonical_zeta_root(field, degree);

  RecursiveBuild out;
  out.sets.push_back(build_direct(field, 1, limits));
  for (unsigned s = 1; s < s_max; ++s) {
    const PointMatrix& lower = out.sets.back();
    const PointMatrix comp = complement(field, lower, limits);

    RecursionCertificate cert;
    cert.s = s;
    cert.h = lower.size();
    cert.a = comp.size();
    cert.p = projective_space_size(field.size(), s);
    cert.zeta_root = zeta;
    for (std::size_t j = 0; j < comp.size(); ++j) {
      const Element beta = power_sum(field, comp.point(j), degree);
      if (!in_subfield_units(field, beta, degree)) {
        throw Error(ErrorKind::Internal, "residual outside F_{p^r}^*");
      }
      const auto roots = dth_roots(field, field.neg(beta), degree);
      if (roots.size() != degree) throw Error(ErrorKind::Internal, "missing extension roots");
      cert.residual.push_back(beta);
      cert.representative.push_back(roots.front());
    }

    PointMatrix upper;
    upper.dim = s + 1;
    upper.provenance = Provenance::Recursive;
    upper.coords.reserve((degree * comp.size() + lower.size()) * (s + 2));
    std::vector<Element> pt(s + 2);
    Element twist = Field::one();
    for (std::uint32_t i = 0; i < degree; ++i) {
      for (std::size_t j = 0; j < comp.size(); ++j) {
        std::ranges::copy(comp.point(j), pt.begin());
        pt[s + 1] = field.mul(twist, cert.representative[j]);
        upper.push_back(pt);
      }
      cert.block_widths.push_back(comp.size());
      twist = field.mul(twist, zeta);
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
      std::ranges::copy(lower.point(j), pt.begin());
      pt[s + 1] = Field::zero();
      upper.push_back(pt);
    }
    cert.block_widths.push_back(lower.size());

    out.certificates.push_back(std::move(cert));
    out.sets.push_back(std::move(upper));
  }
  return out;
}

bool check_certificate(const Field& field, const RecursionCertificate& cert, const PointMatrix& lower,
                       const PointMatrix& upper) {
  const std::uint32_t degree = hermitian_parameters(field).degree;
  if (lower.dim != cert.s || upper.dim != cert.s + 1) return false;
  if (cert.h != lower.size() || cert.p != projective_space_size(field.size(), cert.s)) return false;
  if (cert.a != cert.p - cert.h) return false;
  if (upper.size() != degree * cert.a + cert.h) return false;

  // zeta_root has order exactly p^r + 1
  Element z = Field::one();
  for (std::uint32_t i = 1; i <= degree; ++i) {
    z = field.mul(z, cert.zeta_root);
    if ((z == Field::one()) != (i == degree)) return false;
  }

  const PointMatrix comp = complement(field, lower);
  if (comp.size() != cert.a || cert.residual.size() != cert.a || cert.representative.size() != cert.a) {
    return false;
  }
  if (cert.block_widths.size() != degree + 1) return false;
  for (std::uint32_t i = 0; i < degree; ++i) {
    if (cert.block_widths[i] != cert.a) return false;
  }
  if (cert.block_widths.back() != cert.h) return false;

  for (std::size_t j = 0; j < cert.a; ++j) {
    const Element beta = cert.residual[j];
    if (beta != power_sum(field, comp.point(j), degree) || !in_subfield_units(field, beta, degree)) {
      return false;
    }
    if (field.pow(cert.representative[j], degree) != field.neg(beta)) return false;
  }

  Element twist = Field::one();
  std::size_t col = 0;
  for (std::uint32_t i = 0; i < degree; ++i) {
    for (std::size_t j = 0; j < cert.a; ++j, ++col) {
      const auto pt = upper.point(col);
      if (!std::ranges::equal(pt.first(cert.s + 1), comp.point(j))) return false;
      if (pt[cert.s + 1] != field.mul(twist, cert.representative[j])) return false;
      if (power_sum(field, pt, degree) != Field::zero()) return false;
    }
    twist = field.mul(twist, cert.zeta_root);
  }
  for (std::size_t j = 0; j < cert.h; ++j, ++col) {
    const auto pt = upper.point(col);
    if (!std::ranges::equal(pt.first(cert.s + 1), lower.point(j)) || pt[cert.s + 1] != Field::zero()) {
      return false;
    }
  }
  return true;
}

bool RecursionReport::pass() const {
  return !steps.empty() && std::ranges::all_of(steps, [](const RecursionStep& st) { return st.pass(); });
}

RecursionReport verify_recursion(const Field& field, unsigned s_max, const Limits& limits) {
  const HermitianField hf = hermitian_parameters(field);
  const RecursiveBuild rec = build_recursive(field, s_max, limits);
  const DiagonalParams params{field.p(), hf.r, 1, hf.degree};
  const BigInt q = params.q();
  const BigInt pr = ipow(field.p(), hf.r);

  RecursionReport rep;
  rep.p = field.p();
  rep.r = hf.r;
  std::uint64_t prev_h = 0;
  for (unsigned s = 1; s <= s_max; ++s) {
    const PointMatrix direct = build_direct(field, s, limits);
    const PointMatrix& built = rec.sets[s - 1];
    RecursionStep st;
    st.s = s;
    st.direct_size = direct.size();
    st.recursive_size = built.size();
    st.sets_equal = sorted_by_scan(direct).coords == sorted_by_scan(built).coords;
    if (s == 1) {
      st.recursion_holds = true;
      st.certificate_valid = true;
    } else {
      const std::uint64_t pi_prev = projective_space_size(field.size(), s - 1);
      st.recursion_holds = st.direct_size == hf.degree * (pi_prev - prev_h) + prev_h;
      st.certificate_valid = check_certificate(field, rec.certificates[s - 2], rec.sets[s - 2], built);
    }
    st.closed_form = projective_count(params, s);
    st.closed_form_matches = st.closed_form == st.direct_size;

    const BigInt second = ipow(pr, s) - sign_pow(s);
    st.bose_literal = BigRational((ipow(pr, s - 1) - sign_pow(s + 1)) * second, q - 1);
    st.bose_literal.canonicalize();
    st.bose_literal_matches = st.bose_literal == BigRational(st.closed_form);
    st.bose_corrected = (ipow(pr, s + 1) - sign_pow(s + 1)) * second / (q - 1);
    st.bose_corrected_matches = st.bose_corrected == st.direct_size;

    prev_h = st.direct_size;
    rep.steps.push_back(std::move(st));
  }
  return rep;
}

}  // namespace diagsurf
