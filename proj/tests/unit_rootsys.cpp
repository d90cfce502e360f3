#include <doctest.h>

#include "adjq/rootsys.hpp"

using namespace adjq;
using namespace adjq::rootsys;

TEST_SUITE("rootsys") {
  TEST_CASE("root counts per type") {
    struct Row {
      const char* label;
      std::size_t roots, shorts;
    };
    // Short = all roots in the simply laced cases.
    const Row table[] = {
        {"A1", 2, 2},    {"A2", 6, 6},    {"B2", 8, 4},    {"C2", 8, 4},
        {"B3", 18, 6},   {"C3", 18, 12},  {"D4", 24, 24},  {"G2", 12, 6},
        {"F4", 48, 24},  {"E6", 72, 72},  {"E7", 126, 126}, {"E8", 240, 240},
    };
    for (const Row& row : table) {
      CAPTURE(row.label);
      RootSystem rs = build_root_system(row.label);
      CHECK(rs.roots.size() == row.roots);
      CHECK(rs.short_roots.size() == row.shorts);
      CHECK(rs.positive_roots.size() == row.roots / 2);
    }
  }

  TEST_CASE("zero-sum triple counts among short roots") {
    struct Row {
      const char* label;
      std::size_t triples;
    };
    const Row table[] = {{"A1", 0},  {"A2", 2},  {"B2", 0},  {"B3", 0},  {"C2", 0},
                         {"C3", 8},  {"D4", 32}, {"G2", 2},  {"F4", 32}, {"E6", 240},
                         {"E7", 672}};
    for (const Row& row : table) {
      CAPTURE(row.label);
      RootSystem rs = build_root_system(row.label);
      auto triples = zero_sum_triples(rs.short_roots);
      CHECK(triples.size() == row.triples);
      for (const auto& t : triples) {
        CHECK((t[0] + t[1] + t[2]).is_zero());
        CHECK(rs.is_short_root(t[0]));
        CHECK(rs.is_short_root(t[1]));
        CHECK(rs.is_short_root(t[2]));
      }
    }
  }

  TEST_CASE("invariant form normalizes long roots to squared length two") {
    for (const char* label : {"A3", "B3", "C3", "G2", "F4"}) {
      CAPTURE(label);
      RootSystem rs = build_root_system(label);
      CHECK(rs.inner(rs.highest_root, rs.highest_root) == 2);
      for (const WeightVec& a : rs.roots) {
        Rat len = rs.inner(a, a);
        CHECK(len > 0);
        CHECK(len <= 2);
        // The pairing <a, b-check> is integral for all root pairs.
        for (const WeightVec& b : rs.simple_roots) (void)rs.pairing(a, b);
      }
    }
  }

  TEST_CASE("simple-root coordinates of roots are integral and height-consistent") {
    RootSystem rs = build_root_system("G2");
    for (const WeightVec& a : rs.positive_roots) {
      auto coords = rs.simple_coords(a);
      long h = 0;
      for (const Rat& c : coords) {
        CHECK(c.get_den() == 1);
        h += c.get_num().get_si();
      }
      CHECK(h == rs.height(a));
      CHECK(h >= 1);
    }
    // G2 highest root has height 5, highest short root height 3.
    CHECK(rs.height(rs.highest_root) == 5);
    CHECK(rs.height(rs.highest_short_root) == 3);
  }

  TEST_CASE("center orders equal the Cartan determinant") {
    CHECK(center_order(Family::A, 4) == 5);
    CHECK(center_order(Family::B, 5) == 2);
    CHECK(center_order(Family::C, 6) == 2);
    CHECK(center_order(Family::D, 5) == 4);
    CHECK(center_order(Family::D, 6) == 4);
    CHECK(center_order(Family::E, 6) == 3);
    CHECK(center_order(Family::E, 7) == 2);
    CHECK(center_order(Family::E, 8) == 1);
    CHECK(center_order(Family::F, 4) == 1);
    CHECK(center_order(Family::G, 2) == 1);
  }

  TEST_CASE("type parsing accepts valid labels and rejects the rest") {
    auto [f, r] = parse_type("E7");
    CHECK(f == Family::E);
    CHECK(r == 7);
    CHECK_THROWS_AS(parse_type("Z3"), InvalidTypeError);
    CHECK_THROWS_AS(parse_type("E5"), InvalidTypeError);
    CHECK_THROWS_AS(parse_type("D2"), InvalidTypeError);
    CHECK_THROWS_AS(parse_type("A9"), InvalidTypeError);
    CHECK_THROWS_AS(parse_type(""), InvalidTypeError);
    // D3 is valid and matches A3 in size.
    RootSystem d3 = build_root_system("D3");
    CHECK(d3.roots.size() == 12);
    CHECK(center_order(Family::D, 3) == 4);
  }

  TEST_CASE("proper zero-sum quadruples exclude opposite pairs") {
    RootSystem rs = build_root_system("A3");
    auto quads = proper_zero_sum_quadruples(rs.roots);
    for (const auto& q : quads) {
      CHECK((q[0] + q[1] + q[2] + q[3]).is_zero());
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK_FALSE((q[i] + q[j]).is_zero());
    }
  }
}
