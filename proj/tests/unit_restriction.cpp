#include <doctest.h>

#include "adjq/restriction.hpp"
#include "adjq/rootsys.hpp"
#include "adjq/weyl.hpp"

using namespace adjq;
using restriction::RestrictionReport;
using rootsys::RootSystem;
using rootsys::WeightVec;

namespace {

RestrictionReport highest_short_sequence(const char* label) {
  RootSystem rs = rootsys::build_root_system(label);
  auto stab = weyl::stabilizer_of_weight(rs, rs.highest_short_root);
  return restriction::restriction_invariants_sequence(rs, rs.highest_short_root,
                                                      stab.generators);
}

}  // namespace

TEST_SUITE("restriction") {
  TEST_CASE("the invariants sequence for the highest short root is exact") {
    for (const char* label : {"A2", "B2", "B3", "C3", "D4", "G2"}) {
      CAPTURE(label);
      RestrictionReport rep = highest_short_sequence(label);
      CHECK(rep.kernel_is_weight_line);
      CHECK(rep.surjective);
      CHECK(rep.exact());
    }
  }

  TEST_CASE("frozen report for the seven dimensional orthogonal case") {
    RestrictionReport rep = highest_short_sequence("B3");
    // Highest short root of B3 is the first fundamental weight, content one.
    CHECK(rep.kernel_generator == WeightVec({1, 0, 0}));
    CHECK(rep.torsion_order == 1);
    CHECK(rep.ambient_invariant_rank == 1);
    CHECK(rep.quotient_invariant_rank == 0);
  }

  TEST_CASE("invariant ranks drop by exactly one across the quotient") {
    for (const char* label : {"A2", "B2", "B3", "C3", "D4", "G2"}) {
      CAPTURE(label);
      RestrictionReport rep = highest_short_sequence(label);
      CHECK(rep.ambient_invariant_rank >= 1);
      CHECK(rep.quotient_invariant_rank == rep.ambient_invariant_rank - 1);
    }
  }

  TEST_CASE("stabilizer generators fix the weight they stabilize") {
    RootSystem rs = rootsys::build_root_system("C3");
    auto stab = weyl::stabilizer_of_weight(rs, rs.highest_short_root);
    REQUIRE(!stab.generators.empty());
    for (const auto& g : stab.generators) {
      CHECK(g.apply(rs.highest_short_root) == rs.highest_short_root);
    }
  }

  TEST_CASE("matrix form of a group element matches its action") {
    RootSystem rs = rootsys::build_root_system("B3");
    for (const auto& s : weyl::simple_reflections(rs)) {
      intlat::IntMatrix m = restriction::to_intmatrix(s);
      for (const WeightVec& r : rs.simple_roots) {
        WeightVec image = s.apply(r);
        // Matrix times column vector convention.
        for (int i = 0; i < 3; ++i) {
          intlat::Int acc = 0;
          for (int j = 0; j < 3; ++j) acc += m.at(i, j) * r[j];
          CHECK(acc == image[i]);
        }
      }
    }
  }
}
