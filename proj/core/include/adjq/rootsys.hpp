#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "adjq/errors.hpp"
#include "adjq/intlat.hpp"
#include "adjq/ratmat.hpp"

// Root systems of the simple families A through G at rank <= 8: Cartan data,
// reflection-closure root enumeration, the invariant inner product, and the
// lattice frame (root lattice inside the weight lattice). All weights are
// integer coordinate vectors in the fundamental-weight basis, i.e. entry j is
// the pairing with the j-th simple coroot.
namespace adjq::rootsys {

using ratmat::Rat;
using ratmat::RatMat;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct WeightVec {
  std::vector<long> c;

  WeightVec() = default;
  explicit WeightVec(std::vector<long> coords) : c(std::move(coords)) {}
  static WeightVec zero(int rank) { return WeightVec(std::vector<long>(rank, 0)); }
  static WeightVec fundamental(int rank, int i) {
    WeightVec w = zero(rank);
    w.c.at(static_cast<std::size_t>(i)) = 1;
    return w;
  }

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (long x : c)
      if (x) return false;
    return true;
  }
  bool is_dominant() const {
    for (long x : c)
      if (x < 0) return false;
    return true;
  }

  long operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  long& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  friend WeightVec operator+(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend WeightVec operator-(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend WeightVec operator-(const WeightVec& a) {
    WeightVec r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend WeightVec operator*(long k, const WeightVec& a) {
    WeightVec r = a;
    for (auto& x : r.c) x *= k;
    return r;
  }
  auto operator<=>(const WeightVec&) const = default;
};

struct WeightVecHash {
  std::size_t operator()(const WeightVec& w) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (long x : w.c) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using WeightSet = std::unordered_set<WeightVec, WeightVecHash>;

std::string to_string(const WeightVec& w);

// Validated Cartan matrix for one simple type. Rows are the simple roots in
// fundamental-weight coordinates: cartan[i][j] = <alpha_i, alpha_j-check>.
// Simple roots are numbered in the standard (Bourbaki) order; the table in
// docs/root-data.md fixes the labeling used here.
struct CartanDatum {
  Family family;
  int rank = 0;
  std::vector<std::vector<long>> cartan;

  std::string label() const;  // e.g. "E7"
};

CartanDatum cartan_datum(Family family, int rank);

// Parses labels like "A2", "E7". Throws InvalidTypeError on anything else.
std::pair<Family, int> parse_type(const std::string& label);

// |det(Cartan)| = order of the center of the simply connected form = index of
// the root lattice in the weight lattice.
long center_order(Family family, int rank);

struct RootSystem {
  CartanDatum datum;
  std::vector<WeightVec> roots;           // closed under negation, sorted
  std::vector<WeightVec> positive_roots;  // sorted
  std::vector<WeightVec> simple_roots;    // row i of the Cartan matrix
  std::vector<WeightVec> short_roots;     // minimal squared length; all roots when simply laced
  WeightVec highest_root;
  WeightVec highest_short_root;
  RatMat form;  // W-invariant inner product on the weight lattice, long roots squared length 2

  int rank() const { return datum.rank; }
  std::string label() const { return datum.label(); }
  bool is_root(const WeightVec& w) const { return root_set_.count(w) > 0; }
  bool is_short_root(const WeightVec& w) const { return short_set_.count(w) > 0; }
  bool simply_laced() const { return short_roots.size() == roots.size(); }

  Rat inner(const WeightVec& a, const WeightVec& b) const;  // (a, b) via the form
  // <lambda, beta-check> = 2 (lambda, beta) / (beta, beta); always an integer.
  long pairing(const WeightVec& lambda, const WeightVec& beta) const;
  // Coordinates in the simple-root basis; integral for roots.
  std::vector<Rat> simple_coords(const WeightVec& w) const;
  long height(const WeightVec& root) const;

  WeightSet root_set_;   // lookup mirrors of the vectors above
  WeightSet short_set_;
  RatMat cartan_t_inv_;  // solves simple-root coordinates
};

RootSystem build_root_system(Family family, int rank);
inline RootSystem build_root_system(const std::string& label) {
  auto [f, r] = parse_type(label);
  return build_root_system(f, r);
}

// Root lattice Q(R) and coroot lattice inside their ambient frames. The
// weight lattice is identified with Z^rank, so Q(R)'s generator matrix is the
// Cartan matrix and [weight : root] = |det|.
struct LatticeFrame {
  int ambient = 0;
  intlat::IntMatrix root_lattice;    // rows: simple roots in weight coordinates
  intlat::IntMatrix coroot_lattice;  // rows: simple coroots in their own basis
};

LatticeFrame lattice_frame(const RootSystem& rs);

// All unordered triples {a, b, c} from `weights` with a + b + c = 0. Entries
// of a triple are always pairwise distinct. Triples are sorted internally and
// the list is sorted, so the output order is deterministic.
std::vector<std::array<WeightVec, 3>> zero_sum_triples(const std::vector<WeightVec>& weights);

// Unordered quadruples with zero sum such that no two members sum to zero
// (and in particular no member repeats). Deterministic order as above.
std::vector<std::array<WeightVec, 4>> proper_zero_sum_quadruples(const std::vector<WeightVec>& weights);

// JSON debug dump of the root data (family, rank, roots as coordinate arrays).
std::string debug_dump_json(const RootSystem& rs);

}  // namespace adjq::rootsys
