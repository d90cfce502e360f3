#include <adjq/reps.hpp>

#include <adjq/errors.hpp>

namespace adjq::reps {

using rootsys::Family;
using rootsys::RootSystem;
using rootsys::WeightVec;

bool is_minuscule_fundamental(const RootSystem& rs, int i) {
  WeightVec w = WeightVec::fundamental(rs.rank(), i);
  return rs.pairing(w, rs.highest_short_root) == 1;
}

MinusculeCensus minuscule_census(const RootSystem& rs) {
  MinusculeCensus census;
  census.center_order = rootsys::center_order(rs.datum.family, rs.datum.rank);
  for (int i = 0; i < rs.rank(); ++i)
    if (is_minuscule_fundamental(rs, i)) census.fundamental_indices.push_back(i);
  return census;
}

QuasiMinusculeData quasi_minuscule_data(const RootSystem& rs) {
  QuasiMinusculeData data;
  data.highest_weight = rs.highest_short_root;
  data.nonzero_weights = rs.short_roots;
  for (const auto& alpha : rs.simple_roots)
    if (rs.is_short_root(alpha)) ++data.zero_multiplicity;
  data.dimension =
      static_cast<long>(data.nonzero_weights.size()) + data.zero_multiplicity;
  return data;
}

std::vector<std::pair<WeightVec, int>> quasi_minuscule_weights(const RootSystem& rs) {
  QuasiMinusculeData data = quasi_minuscule_data(rs);
  std::vector<std::pair<WeightVec, int>> weights;
  weights.reserve(data.nonzero_weights.size() + 1);
  for (const auto& w : data.nonzero_weights) weights.emplace_back(w, 1);
  weights.emplace_back(WeightVec::zero(rs.rank()), data.zero_multiplicity);
  return weights;
}

long quasi_minuscule_dimension(Family family, int rank) {
  const long n = rank;
  switch (family) {
    case Family::A:
      return n * n + 2 * n;
    case Family::B:
      return 2 * n + 1;
    case Family::C:
      return 2 * n * n - n - 1;
    case Family::D:
      return 2 * n * n - n;
    case Family::E:
      if (rank == 6) return 78;
      if (rank == 7) return 133;
      return 248;
    case Family::F:
      return 26;
    case Family::G:
      return 7;
  }
  throw InvalidTypeError("unknown family");
}

}  // namespace adjq::reps
