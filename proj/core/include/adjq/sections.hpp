#pragma once

#include <string>
#include <vector>

#include "adjq/ratmat.hpp"
#include "adjq/rng.hpp"
#include "adjq/rootsys.hpp"

// Explicit matrix models of the classical Lie algebras carrying a slice
// X + span(L) through the regular locus, the companion-matrix slice in SL_n,
// and the exp/log passage between the two. All verification is exact
// rational arithmetic; the only floating point is an optional cross-check
// of the Jacobian.
namespace adjq::sections {

using ratmat::Dual;
using ratmat::DualMat;
using ratmat::Rat;
using ratmat::RatMat;

enum class AlgebraKind { sl, so, sp };

// Classical matrix realization per family: A_r -> sl_{r+1}, B_r -> so_{2r+1},
// C_r -> sp_{2r}, D_r -> so_{2r}. Exceptional families have none and throw.
AlgebraKind algebra_kind(rootsys::Family family);
int matrix_size(rootsys::Family family, int rank);
std::string algebra_name(rootsys::Family family, int rank);

// Inverse of algebra_name: "sl4" -> A3, "so7" -> B3, "sp6" -> C3, "so8" -> D4.
rootsys::CartanDatum parse_algebra_name(const std::string& name);

// A slice x + span(l_basis) through the regular elements of a classical Lie
// algebra in its defining matrix realization. The form j is the antidiagonal
// symmetric (so) or symplectic (sp) form; empty for sl. (x, h, y) is a
// principal sl2 triple, l_basis spans the centralizer of y, and l_basis[k]
// has ad-h eigenvalue -2*exponents[k].
struct KostantSlice {
  rootsys::Family family = rootsys::Family::A;
  int rank = 0;
  AlgebraKind kind = AlgebraKind::sl;
  int n = 0;

  RatMat j;
  RatMat x, h, y;
  std::vector<RatMat> g_basis;
  std::vector<long> g_weights;
  std::vector<RatMat> l_basis;
  std::vector<int> exponents;

  RatMat point(const std::vector<Rat>& b) const;
};

// Builds the slice and verifies its structural invariants (membership, sl2
// relations, complement property, grading by the exponents) before
// returning. Matrix size is capped at max_size.
KostantSlice build_kostant_slice(rootsys::Family family, int rank, int max_size = 12);

// Structural facts about a built slice, recomputed from scratch.
struct SliceStructure {
  std::string algebra;
  int dim_algebra = 0;
  int rank = 0;
  bool membership = false;
  bool sl2_relations = false;
  bool complement = false;
  bool grading_matches_degrees = false;
  bool pass() const { return membership && sl2_relations && complement && grading_matches_degrees; }
};
SliceStructure check_slice_structure(const KostantSlice& s);

// Degrees of the invariant-map outputs. Characteristic-polynomial
// coefficients in ascending degree; for so(2l) the Pfaffian-type output of
// degree l is listed last.
std::vector<int> invariant_degrees(const KostantSlice& s);
std::vector<Rat> invariants(const KostantSlice& s, const RatMat& z);
std::vector<Dual> invariants_dual(const KostantSlice& s, const DualMat& z);

// Unique slice coordinates b with invariants(point(b)) == target. Solved one
// degree class at a time: outputs of degree d are affine in the coordinates
// of exponent d-1 with constant linear part, so each class is a small exact
// linear solve.
std::vector<Rat> solve_invariants(const KostantSlice& s, const std::vector<Rat>& target);

// Dimension of the centralizer of z inside the algebra.
int centralizer_dimension(const KostantSlice& s, const RatMat& z);

// r x r matrix of partial derivatives of the invariant map at b, computed
// exactly with dual numbers.
RatMat invariant_jacobian(const KostantSlice& s, const std::vector<Rat>& b);

// Randomized verification at `samples` points with numerators and
// denominators bounded by 1000: slice points are regular (ad-nullity = r),
// unused odd characteristic-polynomial coefficients vanish for so/sp, the
// exact Jacobian is nonsingular (cross-checked once against floating-point
// finite differences), and solving the invariants recovers the coordinates
// exactly.
struct SliceCheck {
  std::string algebra;
  int samples = 0;
  bool regular_at_samples = true;
  bool odd_coefficients_vanish = true;
  bool jacobian_nonsingular = true;
  bool jacobian_fd_consistent = true;
  bool roundtrip_exact = true;
  std::string witness;
  bool pass() const {
    return regular_at_samples && odd_coefficients_vanish && jacobian_nonsingular &&
           jacobian_fd_consistent && roundtrip_exact;
  }
};
SliceCheck verify_kostant_slice(const KostantSlice& s, int samples, Rng& rng);

// Companion-matrix slice in SL_n: at(a) is the companion matrix with
// characteristic polynomial t^n - a_1 t^(n-1) + a_2 t^(n-2) - ... + (-1)^n,
// so its determinant is identically 1.
struct SteinbergSlice {
  int n = 0;
  RatMat at(const std::vector<Rat>& a) const;
  // Partial derivatives d at / d a_k; constant because at() is affine in a.
  std::vector<RatMat> derivative() const;
  // Reads the slice coordinates back off the characteristic polynomial.
  std::vector<Rat> coordinates(const RatMat& g) const;
};

SteinbergSlice build_steinberg_slice(int n, int max_size = 12);

// Randomized verification at `samples` points: determinant exactly 1,
// characteristic polynomial reproduces the coordinates coefficient by
// coefficient, the commutant inside all n x n matrices has dimension n, and
// e_1 is a cyclic vector (the Krylov matrix is invertible).
struct GroupSliceCheck {
  int n = 0;
  int samples = 0;
  bool det_one = true;
  bool charpoly_roundtrip = true;
  bool commutant_dimension = true;
  bool cyclic_vector = true;
  std::string witness;
  bool pass() const { return det_one && charpoly_roundtrip && commutant_dimension && cyclic_vector; }
};
GroupSliceCheck verify_steinberg_slice(const SteinbergSlice& s, int samples, Rng& rng);

// Connects the two slices at the identity class: u = companion matrix of
// (t-1)^n is regular unipotent, its nilpotent logarithm X' satisfies
// exp(X') == u exactly, and the tangent space of the companion slice at u,
// translated into sl_n, is a complement to the image of ad X'.
struct LinkReport {
  int n = 0;
  bool log_nilpotent = false;
  bool log_principal = false;
  bool exp_recovers = false;
  bool tangent_traceless = false;
  bool complement = false;
  bool pass() const {
    return log_nilpotent && log_principal && exp_recovers && tangent_traceless && complement;
  }
};
LinkReport kostant_steinberg_link(int n);

}  // namespace adjq::sections
