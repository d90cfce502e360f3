#include <doctest.h>

#include "adjq/rng.hpp"
#include "adjq/sections.hpp"

using namespace adjq;
using namespace adjq::sections;
using ratmat::Rat;
using ratmat::RatMat;
using rootsys::Family;

namespace {

RatMat rat_matrix(const std::vector<std::vector<long>>& rows) {
  RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

TEST_SUITE("sections") {
  TEST_CASE("algebra names and their inverses") {
    CHECK(algebra_name(Family::A, 3) == "sl4");
    CHECK(algebra_name(Family::B, 3) == "so7");
    CHECK(algebra_name(Family::C, 3) == "sp6");
    CHECK(algebra_name(Family::D, 4) == "so8");
    CHECK(matrix_size(Family::A, 3) == 4);
    CHECK(matrix_size(Family::B, 3) == 7);
    CHECK(matrix_size(Family::C, 3) == 6);
    CHECK(matrix_size(Family::D, 4) == 8);
    for (const char* name : {"sl2", "sl5", "so5", "so7", "so8", "so10", "sp4", "sp8"}) {
      CAPTURE(name);
      rootsys::CartanDatum d = parse_algebra_name(name);
      CHECK(algebra_name(d.family, d.rank) == name);
    }
    CHECK_THROWS_AS(parse_algebra_name("su3"), InvalidTypeError);
    CHECK_THROWS_AS(parse_algebra_name("sp5"), InvalidTypeError);
    CHECK_THROWS_AS(parse_algebra_name("sl"), InvalidTypeError);
    CHECK_THROWS_AS(algebra_kind(Family::E), InvalidTypeError);
  }

  TEST_CASE("the rank one slice in closed form") {
    KostantSlice s = build_kostant_slice(Family::A, 1);
    CHECK(s.n == 2);
    CHECK(s.x == rat_matrix({{0, 1}, {0, 0}}));
    CHECK(s.y == rat_matrix({{0, 0}, {1, 0}}));
    CHECK(s.h == rat_matrix({{1, 0}, {0, -1}}));
    REQUIRE(s.l_basis.size() == 1);
    CHECK(s.l_basis[0] == s.y);
    CHECK(s.exponents == std::vector<int>{1});
    RatMat z = s.point({Rat(5)});
    CHECK(z == rat_matrix({{0, 1}, {5, 0}}));
    // det(tI - z) = t^2 - 5, and the invariant list drops the zero trace.
    CHECK(invariants(s, z) == std::vector<Rat>{Rat(-5)});
    CHECK(solve_invariants(s, {Rat(-5)}) == std::vector<Rat>{Rat(5)});
    CHECK(centralizer_dimension(s, z) == 1);
  }

  TEST_CASE("slice structure holds across the classical families") {
    for (const char* name : {"sl3", "sl4", "so5", "so7", "sp4", "sp6", "so8"}) {
      CAPTURE(name);
      rootsys::CartanDatum d = parse_algebra_name(name);
      KostantSlice s = build_kostant_slice(d.family, d.rank);
      SliceStructure st = check_slice_structure(s);
      CHECK(st.algebra == name);
      CHECK(st.membership);
      CHECK(st.sl2_relations);
      CHECK(st.complement);
      CHECK(st.grading_matches_degrees);
      CHECK(st.rank == d.rank);
      CHECK(static_cast<int>(s.l_basis.size()) == d.rank);
    }
  }

  TEST_CASE("base points of the slice are regular nilpotents") {
    KostantSlice sp4 = build_kostant_slice(Family::C, 2);
    CHECK(centralizer_dimension(sp4, sp4.point({Rat(0), Rat(0)})) == 2);
    KostantSlice so5 = build_kostant_slice(Family::B, 2);
    CHECK(centralizer_dimension(so5, so5.x) == 2);
    CHECK(check_slice_structure(so5).dim_algebra == 10);
  }

  TEST_CASE("invariant degree lists") {
    auto degs = [](const char* name) {
      rootsys::CartanDatum d = parse_algebra_name(name);
      return invariant_degrees(build_kostant_slice(d.family, d.rank));
    };
    CHECK(degs("sl4") == std::vector<int>{2, 3, 4});
    CHECK(degs("so5") == std::vector<int>{2, 4});
    CHECK(degs("sp6") == std::vector<int>{2, 4, 6});
    // The degree four output listed last is the Pfaffian type one.
    CHECK(degs("so8") == std::vector<int>{2, 4, 6, 4});
  }

  TEST_CASE("invariants of a slice point recover its coordinates") {
    Rng rng(0xC0FFEE);
    for (const char* name : {"sl4", "so7", "sp6", "so8"}) {
      CAPTURE(name);
      rootsys::CartanDatum d = parse_algebra_name(name);
      KostantSlice s = build_kostant_slice(d.family, d.rank);
      std::vector<Rat> b;
      for (int i = 0; i < d.rank; ++i) b.push_back(rng.rational(50, 20));
      CHECK(solve_invariants(s, invariants(s, s.point(b))) == b);
    }
  }

  TEST_CASE("randomized slice verification passes on small samples") {
    Rng rng(0xC0FFEE);
    for (const char* name : {"sl3", "so5", "sp6", "so8"}) {
      CAPTURE(name);
      rootsys::CartanDatum d = parse_algebra_name(name);
      KostantSlice s = build_kostant_slice(d.family, d.rank);
      SliceCheck check = verify_kostant_slice(s, 5, rng);
      CAPTURE(check.witness);
      CHECK(check.pass());
      CHECK(check.samples == 5);
    }
  }

  TEST_CASE("companion matrices in closed form for n = 2") {
    SteinbergSlice s = build_steinberg_slice(2);
    CHECK(s.at({Rat(0)}) == rat_matrix({{0, -1}, {1, 0}}));
    CHECK(s.at({Rat(2)}) == rat_matrix({{0, -1}, {1, 2}}));
    CHECK(ratmat::det(s.at({Rat(7)})) == 1);
    // det(tI - g) = t^2 - 2 t + 1 at a = 2.
    CHECK(ratmat::charpoly(s.at({Rat(2)})) == std::vector<Rat>{Rat(-2), Rat(1)});
    CHECK(s.coordinates(s.at({Rat(2)})) == std::vector<Rat>{Rat(2)});
  }

  TEST_CASE("companion slice is affine with constant derivative") {
    SteinbergSlice s = build_steinberg_slice(4);
    std::vector<Rat> a = {Rat(3), Rat(-1), Rat(2)};
    auto deriv = s.derivative();
    REQUIRE(deriv.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<Rat> shifted = a;
      shifted[k] += 1;
      CHECK(s.at(shifted) - s.at(a) == deriv[k]);
    }
  }

  TEST_CASE("randomized companion slice verification") {
    Rng rng(0xC0FFEE);
    for (int n : {2, 3, 5}) {
      CAPTURE(n);
      SteinbergSlice s = build_steinberg_slice(n);
      GroupSliceCheck check = verify_steinberg_slice(s, 10, rng);
      CAPTURE(check.witness);
      CHECK(check.pass());
      CHECK(check.det_one);
      CHECK(check.charpoly_roundtrip);
      CHECK(check.commutant_dimension);
      CHECK(check.cyclic_vector);
    }
  }

  TEST_CASE("the two slices agree through the regular unipotent class") {
    for (int n : {2, 3, 4}) {
      CAPTURE(n);
      LinkReport rep = kostant_steinberg_link(n);
      CHECK(rep.n == n);
      CHECK(rep.log_nilpotent);
      CHECK(rep.log_principal);
      CHECK(rep.exp_recovers);
      CHECK(rep.tangent_traceless);
      CHECK(rep.complement);
      CHECK(rep.pass());
    }
  }

  TEST_CASE("size caps raise distinct errors") {
    CHECK_THROWS_AS(build_kostant_slice(Family::D, 7), CapExceededError);
    CHECK_THROWS_AS(build_steinberg_slice(13), CapExceededError);
    CHECK_THROWS_AS(build_steinberg_slice(1), InvalidTypeError);
    CHECK_THROWS_AS(kostant_steinberg_link(9), InvalidTypeError);
  }
}
