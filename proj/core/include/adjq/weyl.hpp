#pragma once

// Weyl group elements, orbits with witnesses, stabilizers, group orders.
//
// Elements act on weight coordinates by integer matrices. The simple
// reflection s_i acts by (s_i x)_j = x_j - x_i * cartan[i][j]. Words
// list generator indices with the rightmost factor applied first, so
// the word {a, b} names the element s_a s_b. The matrix is always
// authoritative; the word is provenance and may be empty for elements
// built directly from a root.

#include <adjq/errors.hpp>
#include <adjq/rootsys.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace adjq::weyl {

using rootsys::RootSystem;
using rootsys::WeightVec;

struct WeylElement {
  int rank = 0;
  std::vector<long> mat;   // row-major rank x rank
  std::vector<int> word;   // generator indices, rightmost applied first

  static WeylElement identity_element(int rank);

  long entry(int i, int j) const { return mat[static_cast<std::size_t>(i) * rank + j]; }
  WeightVec apply(const WeightVec& x) const;
  bool is_identity() const;
};

WeylElement simple_reflection(const RootSystem& rs, int i);
std::vector<WeylElement> simple_reflections(const RootSystem& rs);

// Reflection in an arbitrary root, s_b(x) = x - <x, b^vee> b.
WeylElement reflection_in_root(const RootSystem& rs, const WeightVec& beta);

// For a zero sum triple (a, b, -a-b) the product s_a s_b cycles
// a -> b -> -a-b -> a and has order three.
WeylElement rotation_for_triple(const RootSystem& rs, const WeightVec& a, const WeightVec& b);

// compose(a, b) applies b first, then a.
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);
WeylElement element_from_word(const std::vector<WeylElement>& gens,
                              const std::vector<int>& word, int rank);
int element_order(const WeylElement& w, int cap = 64);

struct StateHash {
  std::size_t operator()(const std::vector<long>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (long x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Orbit BFS cap. A zero request resolves to ADJQ_ORBIT_CAP from the
// environment, or ten million.
std::size_t effective_orbit_cap(std::size_t requested = 0);

// Tuple canonicalization: blocks at positions >= sorted_from are sorted
// lexicographically, making the tail unordered. sorted_from = 0 is a
// fully unordered tuple; kOrderedTuple keeps every block in place. A
// marked tuple (one distinguished block, the rest a set) uses 1.
inline constexpr int kOrderedTuple = 1 << 20;

std::vector<long> canonical_state(const std::vector<WeightVec>& tuple, int sorted_from);

// Orbit of a tuple under the simultaneous action of a generator list.
// states[0] is the canonicalized start. parent[k] = (state, generator)
// gives BFS provenance, (-1, -1) at the root.
struct OrbitResult {
  int rank = 0;
  int block = 1;
  int sorted_from = kOrderedTuple;
  std::vector<std::vector<long>> states;
  std::vector<std::pair<int, int>> parent;
  std::unordered_map<std::vector<long>, int, StateHash> index;

  std::size_t size() const { return states.size(); }
  std::optional<int> find(const std::vector<WeightVec>& tuple) const;
  // Generator indices with the rightmost applied first; the resulting
  // element maps the start tuple to states[state_idx] (up to arrangement
  // of the unordered blocks).
  std::vector<int> witness_word(int state_idx) const;
  std::vector<WeightVec> tuple_at(int state_idx) const;
};

OrbitResult orbit(const std::vector<WeylElement>& gens, const std::vector<WeightVec>& start,
                  int sorted_from = kOrderedTuple, std::size_t cap = 0);
OrbitResult weight_orbit(const std::vector<WeylElement>& gens, const WeightVec& start,
                         std::size_t cap = 0);

// Element mapping one tuple onto another, or nullopt if they lie in
// different orbits.
std::optional<WeylElement> transporter(const std::vector<WeylElement>& gens,
                                       const std::vector<WeightVec>& from,
                                       const std::vector<WeightVec>& to,
                                       int sorted_from = kOrderedTuple, std::size_t cap = 0);

struct TransitivityReport {
  bool transitive = false;
  bool vacuous = false;
  std::size_t orbit_size = 0;
  std::size_t family_size = 0;
};

// Checks that the family is a single orbit. An empty family reports
// vacuous (and transitive) with both sizes zero.
TransitivityReport check_transitivity(const std::vector<WeylElement>& gens,
                                      const std::vector<std::vector<WeightVec>>& family,
                                      int sorted_from = 0, std::size_t cap = 0);

struct StabilizerData {
  std::vector<WeightVec> annihilated_roots;  // roots pairing to zero with the weight
  std::vector<WeylElement> generators;       // reflections in the positive annihilated roots
  long order = 1;
};

// Reflection subgroup fixing a weight, with its order computed as the
// orbit of the sum of the positive annihilated roots.
StabilizerData stabilizer_of_weight(const RootSystem& rs, const WeightVec& lambda);

// Coxeter degrees; the group order is their product.
std::vector<int> weyl_degrees(rootsys::Family family, int rank);
long weyl_order(rootsys::Family family, int rank);

// Group order as the orbit count of the all-ones weight, which is
// regular. Throws CapExceededError when the orbit would pass the cap.
long weyl_order_by_orbit(const RootSystem& rs, std::size_t cap = 0);

}  // namespace adjq::weyl
