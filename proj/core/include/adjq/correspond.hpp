#pragma once

// Finite fiber models of the spectral cover over a singular cubic, in
// both degenerations: cuspidal (additive group of exact rationals) and
// nodal (multiplicative group of nonzero exact rationals).
//
// A torus point stores coordinates in the coroot basis, so a weight in
// fundamental weight coordinates evaluates by plain dot product
// (cuspidal) or by the corresponding monomial (nodal). The relation
// lattice, the correspondence homomorphism on zero sum tuples, and the
// constructive torus recovery all live here.

#include <adjq/intlat.hpp>
#include <adjq/ratmat.hpp>
#include <adjq/rng.hpp>
#include <adjq/rootsys.hpp>
#include <adjq/weyl.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adjq::correspond {

using ratmat::Rat;
using rootsys::WeightVec;

enum class CurveKind { cuspidal, nodal };

const char* curve_kind_name(CurveKind kind);

// Identity of the regular locus group: 0 additive, 1 multiplicative.
Rat identity_value(CurveKind kind);

struct TorusPoint {
  CurveKind kind = CurveKind::nodal;
  std::vector<Rat> coords;  // coroot basis; nodal coordinates nonzero

  int rank() const { return static_cast<int>(coords.size()); }
};

TorusPoint identity_point(CurveKind kind, int rank);
TorusPoint random_nodal_point(const rootsys::RootSystem& rs, Rng& rng);
TorusPoint random_cuspidal_point(const rootsys::RootSystem& rs, Rng& rng);

// Exact integer power with negative exponents allowed (base nonzero).
Rat rat_pow(const Rat& base, long e);

// Value of the weight character at the point: dot product (cuspidal)
// or monomial (nodal).
Rat evaluate(const TorusPoint& x, const WeightVec& mu);

// Weyl action on torus points, contragredient to the weight action:
// evaluate(act(w, x), mu) == evaluate(x, apply(inverse(w), mu)).
TorusPoint act(const weyl::WeylElement& w, const TorusPoint& x);

struct SpectralFiber {
  CurveKind kind = CurveKind::nodal;
  std::vector<std::pair<WeightVec, Rat>> entries;  // weight order, one per nonzero weight
  int zero_multiplicity = 0;
  std::vector<WeightVec> at_identity;  // nonzero weights whose entry is the identity

  const Rat* value_at(const WeightVec& mu) const;
};

SpectralFiber spectral_fiber(const rootsys::RootSystem& rs,
                             const std::vector<std::pair<WeightVec, int>>& weights,
                             const TorusPoint& x);

// Nonzero rational values indexed by weight, a function on the fiber.
struct FiberFunction {
  std::map<WeightVec, Rat> values;

  const Rat& at(const WeightVec& mu) const;
  bool defined_on(const WeightVec& mu) const { return values.count(mu) != 0; }
};

// Character evaluation on the short roots of a nodal point.
FiberFunction character_fiber_function(const rootsys::RootSystem& rs, const TorusPoint& x);

// Relations cutting out the kernel of the evaluation map from the free
// abelian group on the short roots to the root lattice: opposite pairs
// e_a + e_{-a}, and e_a + e_b - e_{a+b} whenever a, b, a+b are all
// short.
struct RelationSet {
  std::vector<WeightVec> short_roots;  // fixed coordinate order for the vectors below
  std::vector<std::vector<long>> type_i;
  std::vector<std::vector<long>> type_ii;
  std::vector<std::pair<WeightVec, WeightVec>> type_i_pairs;      // (a, -a)
  std::vector<std::array<WeightVec, 3>> type_ii_triples;          // (a, b, a+b)
};

RelationSet build_relation_set(const rootsys::RootSystem& rs);

struct KernelGenerationReport {
  int kernel_rank = 0;
  int generated_rank = 0;
  intlat::Int index;  // lattice index when the spans are comparable
  bool pass = false;  // spans equal with index one
};

// Compares the span of the relation set with the kernel of the
// evaluation map, exactly.
KernelGenerationReport verify_kernel_generation(const rootsys::RootSystem& rs);

struct RelationWitness {
  std::string kind;                 // "pair" or "triple"
  std::vector<WeightVec> weights;   // the weights entering the relation
  Rat product;                      // offending multiplicative value
};

std::optional<RelationWitness> find_violated_relation(const FiberFunction& f,
                                                      const RelationSet& rels);
bool check_fiber_relations(const FiberFunction& f, const RelationSet& rels);

struct TorusSolve {
  bool ok = false;
  std::vector<Rat> simple_values;  // character values on the simple roots
  std::optional<RelationWitness> violation;
  std::optional<WeightVec> extension_failure;
};

// Recovers an adjoint torus point from a fiber function satisfying the
// relations: values on simple roots, then a full monomial expansion
// check against every short root. The expansion succeeding for every
// consistent input is the executable content of kernel generation.
TorusSolve solve_torus_point(const rootsys::RootSystem& rs, const FiberFunction& f);

// Product of the fiber function over each tuple; kernel membership of
// the correspondence homomorphism is all products equal to one.
std::vector<std::pair<std::array<WeightVec, 3>, Rat>> correspondence_c(
    const FiberFunction& f, const std::vector<std::array<WeightVec, 3>>& triples);
std::vector<std::pair<std::array<WeightVec, 4>, Rat>> correspondence_c4(
    const FiberFunction& f, const std::vector<std::array<WeightVec, 4>>& quadruples);

// Proper zero sum quadruples of the 56 minuscule weights: sum zero and
// no two entries opposite. Validates the type.
std::vector<std::array<WeightVec, 4>> e7_proper_quadruples(
    const rootsys::RootSystem& rs, const std::vector<WeightVec>& weights);

// Randomized check on the degenerate locus: sample nodal points where
// the whole triple evaluates to the identity, constrain a random fiber
// function to value one on every weight sitting at the identity, and
// confirm the triple's correspondence value is one.
bool subscheme_vanishing_check(const rootsys::RootSystem& rs,
                               const std::array<WeightVec, 3>& triple, int trials,
                               Rng& rng);

}  // namespace adjq::correspond
