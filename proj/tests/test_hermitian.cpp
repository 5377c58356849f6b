#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diagsurf/counts.hpp"
#include "diagsurf/hermitian.hpp"

using namespace diagsurf;

namespace {

std::vector<std::size_t> sizes(const RecursiveBuild& b) {
  std::vector<std::size_t> out;
  for (const auto& m : b.sets) out.push_back(m.size());
  return out;
}

}  // namespace

TEST_CASE("hermitian_parameters") {
  CHECK(hermitian_parameters(build_field(2, 2)).degree == 3);
  CHECK(hermitian_parameters(build_field(3, 2)).degree == 4);
  CHECK(hermitian_parameters(build_field(2, 4)).degree == 5);
  CHECK(hermitian_parameters(build_field(2, 4)).r == 2);
  CHECK_THROWS_AS(hermitian_parameters(build_field(2, 3)), Error);
}

TEST_CASE("build_direct examples") {
  const Field f4 = build_field(2, 2);
  CHECK(build_direct(f4, 1).size() == 3);
  CHECK(build_direct(f4, 2).size() == 9);
  CHECK(build_direct(build_field(3, 2), 2).size() == 28);
  CHECK(build_direct(f4, 2).provenance == Provenance::Direct);
}

TEST_CASE("build_recursive sizes") {
  CHECK(sizes(build_recursive(build_field(2, 2), 3)) == std::vector<std::size_t>{3, 9, 45});
  CHECK(sizes(build_recursive(build_field(3, 2), 3)) == std::vector<std::size_t>{4, 28, 280});
  CHECK(sizes(build_recursive(build_field(2, 4), 2)) == std::vector<std::size_t>{5, 65});
}

TEST_CASE("recursive block layout over F_4") {
  const Field f4 = build_field(2, 2);
  const RecursiveBuild b = build_recursive(f4, 2);
  REQUIRE(b.certificates.size() == 1);
  const auto& cert = b.certificates[0];
  CHECK(cert.block_widths == std::vector<std::size_t>{2, 2, 2, 3});
  CHECK(cert.h == 3);
  CHECK(cert.a == 2);
  CHECK(cert.p == 5);
  CHECK(f4.pow(cert.zeta_root, 3) == Field::one());
  CHECK(cert.zeta_root != Field::one());
  CHECK(check_certificate(f4, cert, b.sets[0], b.sets[1]));
}

TEST_CASE("certificate catches a corrupted column") {
  const Field f9 = build_field(3, 2);
  RecursiveBuild b = build_recursive(f9, 2);
  CHECK(check_certificate(f9, b.certificates[0], b.sets[0], b.sets[1]));
  PointMatrix broken = b.sets[1];
  broken.coords[broken.width() - 1] = f9.add(broken.coords[broken.width() - 1], Field::one());
  CHECK_FALSE(check_certificate(f9, b.certificates[0], b.sets[0], broken));
  auto cert = b.certificates[0];
  cert.representative[0] = f9.mul(cert.representative[0], f9.alpha());
  CHECK_FALSE(check_certificate(f9, cert, b.sets[0], b.sets[1]));
}

TEST_CASE("recursive construction invariants") {
  for (auto [p, m, s_max] : {std::tuple{2u, 2u, 4u}, {3u, 2u, 3u}, {2u, 4u, 2u}, {5u, 2u, 2u}}) {
    const Field f = build_field(p, m);
    const auto hf = hermitian_parameters(f);
    const RecursiveBuild b = build_recursive(f, s_max);
    for (std::size_t idx = 0; idx < b.sets.size(); ++idx) {
      const PointMatrix& pm = b.sets[idx];
      const unsigned s = static_cast<unsigned>(idx) + 1;
      CHECK(pm.dim == s);
      std::set<std::vector<Element>> distinct;
      for (std::size_t j = 0; j < pm.size(); ++j) {
        const auto pt = pm.point(j);
        CHECK(is_normalized(pt));
        Element sum = Field::zero();
        for (Element e : pt) sum = f.add(sum, f.pow(e, hf.degree));
        CHECK(sum == Field::zero());
        distinct.emplace(pt.begin(), pt.end());
      }
      CHECK(distinct.size() == pm.size());
      CHECK(projective_count(DiagonalParams{p, m / 2, 1, hf.degree}, s) == pm.size());

      // complement points never satisfy the equation
      const PointMatrix comp = complement(f, pm);
      CHECK(comp.size() + pm.size() == projective_space_size(f.size(), s));
      for (std::size_t j = 0; j < comp.size(); ++j) {
        Element sum = Field::zero();
        for (Element e : comp.point(j)) sum = f.add(sum, f.pow(e, hf.degree));
        CHECK(sum != Field::zero());
      }
    }
    for (std::size_t i = 0; i < b.certificates.size(); ++i) {
      CHECK(check_certificate(f, b.certificates[i], b.sets[i], b.sets[i + 1]));
    }
  }
}

TEST_CASE("verify_recursion") {
  for (auto [p, m, s_max] : {std::tuple{2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 4u, 2u}}) {
    const auto rep = verify_recursion(build_field(p, m), s_max);
    CHECK(rep.pass());
    CHECK(rep.steps.size() == s_max);
  }
  const auto rep = verify_recursion(build_field(2, 4), 2);
  CHECK(rep.steps[0].direct_size == 5);
  CHECK(rep.steps[1].direct_size == 65);

  // The Bose formula as printed gives 3 for (q = 4, s = 2); the corrected one gives 9.
  const auto f4 = verify_recursion(build_field(2, 2), 2);
  CHECK(f4.steps[1].bose_literal == 3);
  CHECK_FALSE(f4.steps[1].bose_literal_matches);
  CHECK(f4.steps[1].bose_corrected == 9);
}
