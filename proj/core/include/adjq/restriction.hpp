#pragma once

// Invariants of the weight lattice under a weight stabilizer, and the
// induced map to the invariants of the quotient by that weight.
//
// For a nonzero weight w with stabilizer generators fixing it, the
// quotient X/<w> is Z/d + Z^(r-1), where d is the content of w. The
// sequence under test is
//
//   0 -> <w> -> X^{W0} -> (X/<w>)^{W0}
//
// and the report records whether the kernel is exactly the line <w>
// and whether the last map is surjective, torsion included.

#include <adjq/intlat.hpp>
#include <adjq/rootsys.hpp>
#include <adjq/weyl.hpp>

#include <vector>

namespace adjq::restriction {

struct RestrictionReport {
  rootsys::WeightVec kernel_generator;  // computed generator when the kernel has rank one
  bool kernel_is_weight_line = false;
  bool surjective = false;
  long torsion_order = 1;  // d, the content of the weight
  int ambient_invariant_rank = 0;
  int quotient_invariant_rank = 0;

  bool exact() const { return kernel_is_weight_line && surjective; }
};

intlat::IntMatrix to_intmatrix(const weyl::WeylElement& w);

RestrictionReport restriction_invariants_sequence(
    const rootsys::RootSystem& rs, const rootsys::WeightVec& varpi,
    const std::vector<weyl::WeylElement>& w0_gens);

}  // namespace adjq::restriction
