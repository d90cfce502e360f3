#include <doctest.h>

#include "adjq/correspond.hpp"
#include "adjq/rng.hpp"
#include "adjq/rootsys.hpp"
#include "adjq/weyl.hpp"

using namespace adjq;
using namespace adjq::correspond;
using ratmat::Rat;
using rootsys::RootSystem;
using rootsys::WeightVec;

TEST_SUITE("correspond") {
  TEST_CASE("relation set sizes") {
    struct Row {
      const char* label;
      std::size_t pairs;
      std::size_t triples;
    };
    // Pairs are half the short root count; triples come from zero sum
    // triples, counted once per unordered {a, b} with a + b short.
    const Row table[] = {{"A2", 3, 6},  {"A3", 6, 24}, {"B2", 2, 0},  {"B3", 3, 0},
                         {"C3", 6, 24}, {"D4", 12, 96}, {"G2", 3, 6}, {"F4", 12, 96}};
    for (const Row& row : table) {
      CAPTURE(row.label);
      RootSystem rs = rootsys::build_root_system(row.label);
      RelationSet rels = build_relation_set(rs);
      CHECK(rels.short_roots.size() == rs.short_roots.size());
      CHECK(rels.type_i.size() == row.pairs);
      CHECK(rels.type_ii.size() == row.triples);
      CHECK(rels.type_i_pairs.size() == row.pairs);
      CHECK(rels.type_ii_triples.size() == row.triples);
      for (const auto& rel : rels.type_i) CHECK(rel.size() == rels.short_roots.size());
    }
  }

  TEST_CASE("kernel generation holds with index one on small types") {
    struct Row {
      const char* label;
      int kernel_rank;
    };
    const Row table[] = {{"A1", 1}, {"A2", 4}, {"B2", 2}, {"B3", 3},
                         {"C3", 9}, {"D4", 20}, {"G2", 4}, {"F4", 20}, {"E6", 66}};
    for (const Row& row : table) {
      CAPTURE(row.label);
      RootSystem rs = rootsys::build_root_system(row.label);
      KernelGenerationReport rep = verify_kernel_generation(rs);
      CHECK(rep.pass);
      CHECK(rep.kernel_rank == row.kernel_rank);
      CHECK(rep.generated_rank == row.kernel_rank);
      CHECK(rep.index == 1);
    }
  }

  TEST_CASE("evaluation is a homomorphism from the weight lattice") {
    Rng rng(0xC0FFEE);
    RootSystem rs = rootsys::build_root_system("C3");
    TorusPoint x = random_nodal_point(rs, rng);
    TorusPoint y = random_cuspidal_point(rs, rng);
    const WeightVec a = rs.simple_roots[0];
    const WeightVec b = rs.highest_short_root;
    CHECK(evaluate(x, a + b) == evaluate(x, a) * evaluate(x, b));
    CHECK(evaluate(x, -a) * evaluate(x, a) == 1);
    CHECK(evaluate(y, a + b) == evaluate(y, a) + evaluate(y, b));
    CHECK(evaluate(x, WeightVec::zero(3)) == identity_value(CurveKind::nodal));
    CHECK(evaluate(y, WeightVec::zero(3)) == identity_value(CurveKind::cuspidal));
  }

  TEST_CASE("group action on points is contragredient to the weight action") {
    Rng rng(0xC0FFEE);
    RootSystem rs = rootsys::build_root_system("B3");
    auto gens = weyl::simple_reflections(rs);
    TorusPoint x = random_nodal_point(rs, rng);
    for (const auto& s : gens) {
      TorusPoint sx = act(s, x);
      for (const WeightVec& mu : rs.short_roots) {
        CHECK(evaluate(sx, mu) == evaluate(x, weyl::inverse(s).apply(mu)));
      }
    }
  }

  TEST_CASE("nodal point recovery round trips through the character function") {
    Rng rng(0xC0FFEE);
    for (const char* label : {"A2", "B3", "C3", "D4", "G2", "F4"}) {
      CAPTURE(label);
      RootSystem rs = rootsys::build_root_system(label);
      for (int t = 0; t < 10; ++t) {
        TorusPoint x = random_nodal_point(rs, rng);
        FiberFunction f = character_fiber_function(rs, x);
        CHECK(check_fiber_relations(f, build_relation_set(rs)));
        TorusSolve solve = solve_torus_point(rs, f);
        REQUIRE(solve.ok);
        for (int i = 0; i < rs.rank(); ++i) {
          CHECK(solve.simple_values[static_cast<std::size_t>(i)] ==
                evaluate(x, rs.simple_roots[static_cast<std::size_t>(i)]));
        }
      }
    }
  }

  TEST_CASE("corrupted fiber functions are rejected with a witness") {
    Rng rng(0xC0FFEE);
    RootSystem rs = rootsys::build_root_system("G2");
    RelationSet rels = build_relation_set(rs);
    TorusPoint x = random_nodal_point(rs, rng);
    FiberFunction f = character_fiber_function(rs, x);
    f.values[rels.short_roots.front()] *= 7;
    auto witness = find_violated_relation(f, rels);
    REQUIRE(witness.has_value());
    CHECK((witness->kind == "pair" || witness->kind == "triple"));
    CHECK(witness->product != 1);
    TorusSolve solve = solve_torus_point(rs, f);
    CHECK_FALSE(solve.ok);
    CHECK(solve.violation.has_value());
  }

  TEST_CASE("correspondence values on zero sum triples of characters are one") {
    Rng rng(0xC0FFEE);
    RootSystem rs = rootsys::build_root_system("G2");
    auto triples = rootsys::zero_sum_triples(rs.short_roots);
    REQUIRE(triples.size() == 2);
    TorusPoint x = random_nodal_point(rs, rng);
    FiberFunction f = character_fiber_function(rs, x);
    std::vector<std::array<WeightVec, 3>> arr;
    for (const auto& t : triples) arr.push_back({t[0], t[1], t[2]});
    for (const auto& [triple, value] : correspondence_c(f, arr)) {
      CHECK(value == 1);
    }
  }

  TEST_CASE("proper zero sum quadruples of the 56 weight orbit") {
    RootSystem rs = rootsys::build_root_system("E7");
    auto orb = weyl::weight_orbit(weyl::simple_reflections(rs),
                                  WeightVec::fundamental(7, 6));
    REQUIRE(orb.size() == 56);
    std::vector<WeightVec> weights;
    for (int k = 0; k < 56; ++k) weights.push_back(orb.tuple_at(k)[0]);
    auto quads = e7_proper_quadruples(rs, weights);
    CHECK(quads.size() == 630);
    for (const auto& q : quads) {
      CHECK(q[0] + q[1] + q[2] + q[3] == WeightVec::zero(7));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(q[i] + q[j] != WeightVec::zero(7));
    }
    // Products of a character function over each quadruple are all one.
    Rng rng(0xC0FFEE);
    TorusPoint x = random_nodal_point(rs, rng);
    FiberFunction f;
    for (const WeightVec& w : weights) f.values[w] = evaluate(x, w);
    auto vals = correspondence_c4(f, quads);
    CHECK(vals.size() == 630);
    for (const auto& [quad, value] : vals) CHECK(value == 1);
  }

  TEST_CASE("vanishing check on the identity locus of a triple") {
    Rng rng(0xC0FFEE);
    for (const char* label : {"A2", "G2"}) {
      CAPTURE(label);
      RootSystem rs = rootsys::build_root_system(label);
      auto triples = rootsys::zero_sum_triples(rs.short_roots);
      REQUIRE(!triples.empty());
      std::array<WeightVec, 3> triple = {triples[0][0], triples[0][1], triples[0][2]};
      CHECK(subscheme_vanishing_check(rs, triple, 20, rng));
    }
  }

  TEST_CASE("identity points evaluate every weight to the group identity") {
    TorusPoint e_mult = identity_point(CurveKind::nodal, 2);
    TorusPoint e_add = identity_point(CurveKind::cuspidal, 2);
    RootSystem rs = rootsys::build_root_system("G2");
    for (const WeightVec& r : rs.roots) {
      CHECK(evaluate(e_mult, r) == 1);
      CHECK(evaluate(e_add, r) == 0);
    }
  }
}
