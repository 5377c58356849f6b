#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diagsurf/field.hpp"

using namespace diagsurf;

namespace {

// Schoolbook polynomial product mod the field modulus, independent of the log tables.
Element slow_mul(const Field& f, Element a, Element b) {
  const unsigned p = f.p(), m = f.m();
  const auto ca = f.coefficients(a), cb = f.coefficients(b);
  std::vector<unsigned> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  const auto& mod = f.spec().modulus;
  for (unsigned deg = 2 * m - 1; deg >= m; --deg) {
    const unsigned top = prod[deg];
    prod[deg] = 0;
    for (unsigned i = 0; i < m; ++i) prod[deg - m + i] = (prod[deg - m + i] + p * p - top * mod[i]) % p;
  }
  prod.resize(m);
  return f.from_coefficients(prod);
}

}  // namespace

TEST_CASE("build_field picks the canonical modulus") {
  const Field f4 = build_field(2, 2);
  CHECK(f4.size() == 4);
  CHECK(f4.spec().modulus == std::vector<unsigned>{1, 1, 1});

  // F_3: x - g with g primitive; smallest constant term is c_0 = 1, i.e. g = 2.
  const Field f3 = build_field(3, 1);
  CHECK(f3.spec().modulus == std::vector<unsigned>{1, 1});
  CHECK(f3.alpha() == Element{2});

  CHECK(build_field(3, 2).spec().modulus.size() == 3);
}

TEST_CASE("build_field errors") {
  CHECK_THROWS_AS(build_field(4, 1), Error);
  try {
    build_field(4, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  Limits small;
  small.max_field = 100;
  try {
    build_field(2, 7, small);
    FAIL("expected SizeExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeExceeded);
  }
}

TEST_CASE("build_field is deterministic") {
  for (auto [p, m] : {std::pair{2u, 4u}, {3u, 4u}, {5u, 2u}, {2u, 8u}}) {
    CHECK(build_field(p, m) == build_field(p, m));
  }
}

TEST_CASE("log tables agree with polynomial arithmetic") {
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 1u}}) {
    const Field f = build_field(p, m);
    std::set<std::uint32_t> seen;
    for (std::uint32_t c = 1; c < f.size(); ++c) {
      const Element x{c};
      CHECK(f.antilog(f.log(x)) == x);
      seen.insert(f.log(x));
    }
    CHECK(seen.size() == f.order());  // alpha generates F*
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        REQUIRE(f.mul(Element{a}, Element{b}) == slow_mul(f, Element{a}, Element{b}));
        CHECK(f.sub(f.add(Element{a}, Element{b}), Element{b}) == Element{a});
      }
    }
  }
}

TEST_CASE("pow") {
  const Field f4 = build_field(2, 2);
  CHECK(f4.pow(f4.alpha(), 3) == Field::one());
  CHECK(f4.pow(Field::zero(), 3) == Field::zero());
  CHECK(f4.pow(f4.alpha(), 0) == Field::one());
  CHECK(f4.mul(f4.pow(f4.alpha(), -1), f4.alpha()) == Field::one());
  CHECK_THROWS_AS(f4.pow(Field::zero(), 0), Error);

  const Field f9 = build_field(3, 2);
  CHECK(f9.pow(f9.alpha(), 8) == Field::one());
  for (std::uint32_t c = 1; c < 9; ++c) CHECK(f9.pow(Element{c}, 8) == Field::one());
}

TEST_CASE("unit_group matches brute-force d-th powers") {
  for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 4u}, {3u, 4u}, {5u, 2u}}) {
    const Field f = build_field(p, m);
    for (std::uint32_t d = 1; d <= f.order(); ++d) {
      if (f.order() % d != 0) continue;
      const UnitGroup g = unit_group(f, d);
      std::set<std::uint32_t> powers;
      for (std::uint32_t c = 1; c < f.size(); ++c) powers.insert(f.pow(Element{c}, d).code);
      CHECK(g.n == f.order() / d);
      CHECK(powers.size() == g.n);
      for (std::uint32_t c = 0; c < f.size(); ++c) CHECK(g.member[c] == (powers.count(c) == 1));
      CHECK(g.contains(Field::one()));
    }
  }
}

TEST_CASE("unit_group examples") {
  const Field f4 = build_field(2, 2);
  const auto u1 = unit_group(f4, 3);
  CHECK(u1.n == 1);
  CHECK(u1.elements() == std::vector<Element>{Field::one()});

  const Field f9 = build_field(3, 2);
  const auto u2 = unit_group(f9, 4);
  CHECK(u2.n == 2);
  CHECK(u2.elements() == std::vector<Element>{Field::one(), f9.neg(Field::one())});

  const Field f16 = build_field(2, 4);
  const auto u3 = unit_group(f16, 5);
  CHECK(u3.n == 3);
  for (Element e : u3.elements()) CHECK(f16.pow(e, 3) == Field::one());

  CHECK_THROWS_AS(unit_group(f9, 3), Error);
}

TEST_CASE("dth_roots") {
  const Field f4 = build_field(2, 2);
  CHECK(dth_roots(f4, Field::one(), 3) == std::vector<Element>{Element{1}, Element{2}, Element{3}});
  CHECK(dth_roots(f4, Field::zero(), 3) == std::vector<Element>{Field::zero()});

  const Field f9 = build_field(3, 2);
  CHECK(dth_roots(f9, f9.alpha(), 4).empty());
  CHECK_THROWS_AS(dth_roots(f9, f9.alpha(), 3), Error);

  // |roots| in {0, 1, d} and the root counts partition the field.
  for (auto [p, m] : {std::pair{3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 4u}}) {
    const Field f = build_field(p, m);
    for (std::uint32_t d = 1; d <= f.order(); ++d) {
      if (f.order() % d != 0) continue;
      std::size_t total = 0;
      for (std::uint32_t c = 0; c < f.size(); ++c) {
        const auto roots = dth_roots(f, Element{c}, d);
        CHECK((roots.empty() || roots.size() == 1 || roots.size() == d));
        for (Element x : roots) CHECK(f.pow(x, d) == Element{c});
        CHECK(std::is_sorted(roots.begin(), roots.end()));
        total += roots.size();
      }
      CHECK(total == f.size());
    }
  }
}

TEST_CASE("-1 lies in U_n when d | p^r + 1") {
  CHECK(neg_in_unit_group(build_field(2, 2), 3));
  CHECK(neg_in_unit_group(build_field(3, 2), 4));
  CHECK(neg_in_unit_group(build_field(3, 4), 4));
  CHECK(neg_in_unit_group(build_field(5, 2), 6));
  CHECK(neg_in_unit_group(build_field(5, 4), 3));
  // Outside that setting it can fail: the squares of F_7 are {1, 2, 4}.
  CHECK_FALSE(neg_in_unit_group(build_field(7, 1), 2));
}
