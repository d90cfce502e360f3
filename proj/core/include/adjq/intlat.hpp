#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "adjq/errors.hpp"

// Exact integer linear algebra on lattices: Smith normal form, kernel
// lattices, sublattice comparison, and invariant sublattices of integer
// group actions. Everything runs over arbitrary-precision integers; no
// floating point, no probabilistic shortcuts.
namespace adjq::intlat {

using Int = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw RankMismatchError("from_rows: ragged row lengths");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix transpose() const;

  std::vector<Int> row(int i) const;
  void set_row(int i, const std::vector<Int>& v);
  bool is_zero() const;

  // Appends the rows of `below`. Column counts must agree.
  IntMatrix vstack(const IntMatrix& below) const;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

// u * m * v == d with u, v unimodular and d diagonal, each diagonal entry
// nonnegative and dividing the next. u_inv and v_inv are maintained alongside
// so that u_inv * d * v_inv reconstructs m exactly.
struct SmithDecomposition {
  IntMatrix u, d, v, u_inv, v_inv;
  std::vector<Int> divisors() const;  // nonzero diagonal entries, in order
  int rank() const { return static_cast<int>(divisors().size()); }
};

SmithDecomposition smith(const IntMatrix& m);

// Exact rank via elimination (no floating point).
int rank(const IntMatrix& m);

// Determinant of a square matrix (fraction-free Bareiss elimination).
Int det(const IntMatrix& m);

// A full-rank basis of a sublattice of Z^ambient, stored as basis rows.
struct Sublattice {
  int ambient = 0;
  IntMatrix basis;  // rows are independent generators; may have 0 rows

  int rank() const { return basis.rows(); }
};

// Row vectors annihilating m: {v : v * m = 0}. The returned basis spans the
// full (saturated) kernel lattice, so rank(kernel) + rank(m) == rows(m).
Sublattice kernel_lattice(const IntMatrix& m);

// Lattice generated by the rows of gens, reduced to an independent basis.
Sublattice row_lattice(const IntMatrix& gens);

enum class LatticeOrder { equal, a_inside_b, b_inside_a, incomparable };

struct LatticeComparison {
  LatticeOrder order;
  // Index [B : A] when a_inside_b (or [A : B] when b_inside_a) and the ranks
  // agree; 1 exactly when the lattices are equal. Absent when ranks differ.
  std::optional<Int> index;
};

// Decides containment/equality of two sublattices exactly (never by rank).
LatticeComparison sublattice_equals(const Sublattice& a, const Sublattice& b);

// Solves x * basis = target over the integers. Returns false when target is
// outside the span or the integral solution does not exist.
bool solve_in_lattice(const IntMatrix& basis, const std::vector<Int>& target,
                      std::vector<Int>* coords);

// {x in Z^ambient : g x = x for every g}. Matrices act on column vectors.
Sublattice invariant_sublattice(const std::vector<IntMatrix>& action, int ambient);

}  // namespace adjq::intlat
