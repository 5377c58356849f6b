#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diagsurf/enumerate.hpp"

using namespace diagsurf;

TEST_CASE("value_profile examples") {
  const Field f4 = build_field(2, 2);
  const auto p2 = value_profile(f4, 3, 2);
  CHECK(p2.counts[0] == 10);
  CHECK(p2.counts[1] == 6);
  CHECK(p2.counts[2] == 0);
  CHECK(p2.counts[3] == 0);
  CHECK(p2.class_constant);

  const auto p1 = value_profile(f4, 3, 1);
  CHECK(p1.counts == std::vector<BigInt>{1, 3, 0, 0});

  const Field f9 = build_field(3, 2);
  const auto sq = value_profile(f9, 2, 2);
  CHECK(sq.zero_count == 17);
  REQUIRE(sq.unit_count);
  REQUIRE(sq.nonunit_count);
  CHECK(*sq.unit_count == 8);
  CHECK(*sq.nonunit_count == 8);
}

TEST_CASE("value_profile matches naive_count and sums to Q^s") {
  for (auto [p, m, d] : {std::tuple{2u, 2u, 3u}, {3u, 2u, 2u}, {3u, 2u, 4u}, {2u, 4u, 5u}, {2u, 4u, 3u},
                         {5u, 2u, 3u}, {7u, 1u, 3u}, {13u, 1u, 4u}}) {
    const Field f = build_field(p, m);
    for (unsigned s = 1; s <= 4; ++s) {
      if (ipow(f.size(), s) > (1u << 18)) continue;
      const auto prof = value_profile(f, d, s);
      BigInt total = 0;
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        total += prof.counts[b];
        CHECK(prof.counts[b] == naive_count(f, d, s, Element{b}));
      }
      CHECK(total == ipow(f.size(), s));
    }
  }
}

TEST_CASE("naive_count examples and bound") {
  const Field f4 = build_field(2, 2);
  CHECK(naive_count(f4, 3, 2, Field::zero()) == 10);
  CHECK(naive_count(f4, 3, 3, Field::zero()) == 28);
  CHECK(naive_count(build_field(3, 2), 4, 2, Field::zero()) == 33);
  Limits tight;
  tight.max_naive = 1000;
  CHECK_THROWS_AS(naive_count(f4, 3, 5, Field::zero(), tight), Error);
}

TEST_CASE("value_profile bound") {
  Limits tight;
  tight.max_profile_field = 8;
  CHECK_THROWS_AS(value_profile(build_field(3, 2), 2, 2, tight), Error);
}

TEST_CASE("projective_scan examples") {
  const Field f4 = build_field(2, 2);
  CHECK(projective_scan(f4, 3, 1).size() == 3);
  CHECK(projective_scan(f4, 3, 2).size() == 9);
  CHECK(projective_scan(build_field(3, 2), 4, 2).size() == 28);
}

TEST_CASE("projective_scan consistency with the affine profile") {
  for (auto [p, m, d] : {std::tuple{2u, 2u, 3u}, {3u, 2u, 4u}, {3u, 2u, 2u}, {2u, 4u, 5u}, {5u, 2u, 6u}}) {
    const Field f = build_field(p, m);
    for (unsigned s = 1; s <= 3; ++s) {
      const PointMatrix pts = projective_scan(f, d, s);
      const BigInt zero = value_profile(f, d, s + 1).zero_count;
      CHECK(BigInt(static_cast<unsigned long>(pts.size())) * f.order() + 1 == zero);
      std::set<std::vector<std::uint32_t>> seen;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        CHECK(is_normalized(pts.point(j)));
        std::vector<std::uint32_t> key;
        for (Element e : pts.point(j)) key.push_back(e.code);
        seen.insert(key);
        if (j > 0) CHECK(scan_less(pts.point(j - 1), pts.point(j)));
      }
      CHECK(seen.size() == pts.size());
    }
  }
}

TEST_CASE("scan order and projective space size") {
  const Field f3 = build_field(3, 1);
  const PointMatrix all = all_points(f3, 2);
  CHECK(all.size() == 13);
  CHECK(projective_space_size(3, 2) == 13);
  // leading-1 position first: (1,0,0) .. (1,2,2), then (0,1,0) .. (0,1,2), then (0,0,1)
  CHECK(std::vector<Element>(all.point(0).begin(), all.point(0).end()) ==
        std::vector<Element>{Element{1}, Element{0}, Element{0}});
  CHECK(std::vector<Element>(all.point(9).begin(), all.point(9).end()) ==
        std::vector<Element>{Element{0}, Element{1}, Element{0}});
  CHECK(std::vector<Element>(all.point(12).begin(), all.point(12).end()) ==
        std::vector<Element>{Element{0}, Element{0}, Element{1}});
  const PointMatrix shuffled_back = sorted_by_scan(all);
  CHECK(shuffled_back.coords == all.coords);

  Limits tight;
  tight.max_scan = 10;
  CHECK_THROWS_AS(all_points(f3, 2, tight), Error);
}
