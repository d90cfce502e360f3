#pragma once

// Minuscule and quasi minuscule representation data.
//
// A fundamental weight is minuscule exactly when its pairing with the
// highest short root is one; the highest short root has the highest
// coroot, and pairings of a dominant weight against positive coroots
// are maximized there. The quasi minuscule representation has the
// highest short root as highest weight; its nonzero weights are the
// short roots, each with multiplicity one, and the zero weight carries
// multiplicity equal to the number of short simple roots.

#include <adjq/rootsys.hpp>

#include <utility>
#include <vector>

namespace adjq::reps {

struct MinusculeCensus {
  std::vector<int> fundamental_indices;  // zero based indices of minuscule weights
  long center_order = 1;                 // census size is always center_order - 1
};

MinusculeCensus minuscule_census(const rootsys::RootSystem& rs);
bool is_minuscule_fundamental(const rootsys::RootSystem& rs, int i);

struct QuasiMinusculeData {
  rootsys::WeightVec highest_weight;                 // the highest short root
  std::vector<rootsys::WeightVec> nonzero_weights;   // the short roots
  int zero_multiplicity = 0;                         // short simple root count
  long dimension = 0;
};

QuasiMinusculeData quasi_minuscule_data(const rootsys::RootSystem& rs);

// Weights with multiplicity, nonzero weights first in root order, the
// zero weight last.
std::vector<std::pair<rootsys::WeightVec, int>> quasi_minuscule_weights(
    const rootsys::RootSystem& rs);

// Closed form dimension of the quasi minuscule representation, kept
// independent of the root enumeration as a cross check.
long quasi_minuscule_dimension(rootsys::Family family, int rank);

}  // namespace adjq::reps
