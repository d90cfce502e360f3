#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adjq/errors.hpp"

// Dense exact linear algebra over the rationals, plus a dual-number scalar
// for exact directional derivatives of polynomial maps (characteristic
// polynomial coefficients, Pfaffians).
namespace adjq::ratmat {

using Rat = mpq_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// a + b*eps with eps^2 = 0. Supports the ring operations plus division by
// plain integers, which is all Faddeev-LeVerrier needs.
struct Dual {
  Rat a, b;
  Dual() : a(0), b(0) {}
  Dual(long x) : a(x), b(0) {}        // NOLINT: lets K(0)/K(1) work generically
  Dual(const Rat& x) : a(x), b(0) {}  // NOLINT: implicit lift is the point
  Dual(const Rat& x, const Rat& y) : a(x), b(y) {}

  Dual operator+(const Dual& o) const { return {a + o.a, b + o.b}; }
  Dual operator-(const Dual& o) const { return {a - o.a, b - o.b}; }
  Dual operator-() const { return {-a, -b}; }
  Dual operator*(const Dual& o) const { return {a * o.a, a * o.b + b * o.a}; }
  Dual& operator+=(const Dual& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  bool operator==(const Dual& o) const { return a == o.a && b == o.b; }
};

inline Dual div_by_int(const Dual& x, long k) { return {x.a / k, x.b / k}; }
inline Rat div_by_int(const Rat& x, long k) { return x / k; }
inline double div_by_int(double x, long k) { return x / static_cast<double>(k); }

template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw RankMismatchError("rational matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& aik = at(i, k);
        if (aik == K(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  Mat scaled(const K& s) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const K& x : a_)
      if (!(x == K(0))) return false;
    return true;
  }

  K trace() const {
    K t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

 private:
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw RankMismatchError("rational matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<K> a_;
};

using RatMat = Mat<Rat>;
using DualMat = Mat<Dual>;

// Commutator a*b - b*a.
template <class K>
Mat<K> bracket(const Mat<K>& a, const Mat<K>& b) {
  return a * b - b * a;
}

namespace detail {
// Row echelon form in place; returns pivot columns. Optionally carries an
// augmented block with the same row operations.
inline std::vector<int> echelon(RatMat& m, RatMat* aug) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!(m.at(i, col) == Rat(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) std::swap(aug->at(row, j), aug->at(p, j));
    }
    Rat inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    if (aug)
      for (int j = 0; j < aug->cols(); ++j) aug->at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == Rat(0)) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) aug->at(i, j) -= f * aug->at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}
}  // namespace detail

inline int rank(RatMat m) { return static_cast<int>(detail::echelon(m, nullptr).size()); }

inline Rat det(RatMat m) {
  if (m.rows() != m.cols()) throw RankMismatchError("det of non-square matrix");
  const int n = m.rows();
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!(m.at(i, col) == Rat(0))) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(p, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == Rat(0)) continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

// Basis of the right kernel {x : m x = 0}.
inline std::vector<std::vector<Rat>> nullspace(const RatMat& m) {
  RatMat e = m;
  std::vector<int> pivots = detail::echelon(e, nullptr);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rat> x(static_cast<std::size_t>(m.cols()), Rat(0));
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[static_cast<std::size_t>(pivots[r])] = -e.at(static_cast<int>(r), free);
    basis.push_back(std::move(x));
  }
  return basis;
}

inline bool solve(const RatMat& m, const std::vector<Rat>& rhs, std::vector<Rat>* x) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw RankMismatchError("solve rhs length mismatch");
  RatMat e = m;
  RatMat b(m.rows(), 1);
  for (int i = 0; i < m.rows(); ++i) b.at(i, 0) = rhs[static_cast<std::size_t>(i)];
  std::vector<int> pivots = detail::echelon(e, &b);
  // Consistency: zero rows of e must have zero rhs.
  for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i)
    if (!(b.at(i, 0) == Rat(0))) return false;
  if (x) {
    x->assign(static_cast<std::size_t>(m.cols()), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      (*x)[static_cast<std::size_t>(pivots[r])] = b.at(static_cast<int>(r), 0);
  }
  return true;
}

inline RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw RankMismatchError("inverse of non-square matrix");
  RatMat e = m;
  RatMat aug = RatMat::identity(m.rows());
  std::vector<int> pivots = detail::echelon(e, &aug);
  if (static_cast<int>(pivots.size()) != m.rows()) throw InvariantViolationError("inverse of singular matrix");
  return aug;
}

// Monic characteristic polynomial coefficients [c1, ..., cn] of an n x n
// matrix, meaning det(tI - M) = t^n + c1 t^(n-1) + ... + cn. Runs over any
// commutative ring with exact division by integers (Faddeev-LeVerrier).
template <class K>
std::vector<K> charpoly(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw RankMismatchError("charpoly of non-square matrix");
  const int n = m.rows();
  std::vector<K> c(static_cast<std::size_t>(n));
  Mat<K> acc = m;
  for (int k = 1; k <= n; ++k) {
    K ck = div_by_int(-acc.trace(), k);
    c[static_cast<std::size_t>(k - 1)] = ck;
    if (k == n) break;
    Mat<K> shifted = acc;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
    acc = m * shifted;
  }
  return c;
}

// Pfaffian of an antisymmetric matrix of even size, by exact expansion along
// the first surviving row with memoization on index subsets. Intended for
// sizes <= 12.
template <class K>
K pfaffian(const Mat<K>& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw RankMismatchError("pfaffian needs an even-size square matrix");
  const int n = m.rows();
  if (n > 16) throw CapExceededError("pfaffian expansion capped at size 16");
  std::map<std::uint32_t, K> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> K {
    if (mask == 0) return K(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int i = 0;
    while (!(mask & (1u << i))) ++i;
    K acc(0);
    int pos = 0;
    for (int j = i + 1; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      K term = m.at(i, j) * self(self, mask & ~(1u << i) & ~(1u << j));
      if (pos % 2 == 0)
        acc += term;
      else
        acc -= term;
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, n >= 32 ? 0xFFFFFFFFu : ((1u << n) - 1u));
}

}  // namespace adjq::ratmat
