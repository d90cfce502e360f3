#include "adjq/sections.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "adjq/errors.hpp"
#include "adjq/weyl.hpp"

namespace adjq::sections {

namespace {

RatMat unit(int n, int a, int b) {
  RatMat m(n, n);
  m.at(a, b) = 1;
  return m;
}

// Stacks vec(m) for each matrix as the columns of an n^2 x k matrix.
RatMat columns_of(int n, const std::vector<RatMat>& ms) {
  RatMat out(n * n, static_cast<int>(ms.size()));
  for (int c = 0; c < static_cast<int>(ms.size()); ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.at(i * n + j, c) = ms[static_cast<std::size_t>(c)].at(i, j);
  return out;
}

std::vector<Rat> vec_of(const RatMat& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

bool in_algebra(const KostantSlice& s, const RatMat& m) {
  if (s.kind == AlgebraKind::sl) return m.trace() == Rat(0);
  return (m.transpose() * s.j + s.j * m).is_zero();
}

// Antidiagonal entries of the form: +1 throughout for so, split signs for sp.
std::vector<long> form_signs(AlgebraKind kind, int n) {
  std::vector<long> tau(static_cast<std::size_t>(n), 1);
  if (kind == AlgebraKind::sp)
    for (int i = n / 2; i < n; ++i) tau[static_cast<std::size_t>(i)] = -1;
  return tau;
}

// Basis element of so/sp supported at position (a,b) and its mirror across
// the antidiagonal. On the antidiagonal itself only sp has a nonzero element.
RatMat pair_elem(AlgebraKind kind, const std::vector<long>& tau, int n, int a, int b) {
  const int ma = n - 1 - b;
  const int mb = n - 1 - a;
  if (a == ma && b == mb) {
    if (kind != AlgebraKind::sp) throw InvariantViolationError("so has no antidiagonal basis element");
    return unit(n, a, b);
  }
  RatMat m = unit(n, a, b);
  m.at(ma, mb) = Rat(-tau[static_cast<std::size_t>(a)] * tau[static_cast<std::size_t>(b)]);
  return m;
}

std::vector<Rat> binomial_point(int n) {
  std::vector<Rat> a;
  for (int k = 1; k < n; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    a.emplace_back(b);
  }
  return a;
}

std::vector<RatMat> sl_basis(int n) {
  std::vector<RatMat> basis;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) basis.push_back(unit(n, a, b));
  for (int i = 0; i + 1 < n; ++i) {
    RatMat d(n, n);
    d.at(i, i) = 1;
    d.at(i + 1, i + 1) = -1;
    basis.push_back(d);
  }
  return basis;
}

template <class K>
K from_rat(const Rat& q);
template <>
Rat from_rat<Rat>(const Rat& q) {
  return q;
}
template <>
Dual from_rat<Dual>(const Rat& q) {
  return Dual(q);
}
template <>
double from_rat<double>(const Rat& q) {
  return q.get_d();
}

template <class K>
ratmat::Mat<K> lift(const RatMat& m) {
  ratmat::Mat<K> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = from_rat<K>(m.at(i, j));
  return out;
}

template <class K>
std::vector<K> invariants_impl(const KostantSlice& s, const ratmat::Mat<K>& z) {
  if (z.rows() != s.n || z.cols() != s.n) throw RankMismatchError("slice invariants need an n x n matrix");
  std::vector<K> c = ratmat::charpoly(z);
  std::vector<K> out;
  switch (s.kind) {
    case AlgebraKind::sl:
      for (int k = 2; k <= s.n; ++k) out.push_back(c[static_cast<std::size_t>(k - 1)]);
      break;
    case AlgebraKind::sp:
      for (int k = 2; k <= s.n; k += 2) out.push_back(c[static_cast<std::size_t>(k - 1)]);
      break;
    case AlgebraKind::so:
      if (s.n % 2 == 1) {
        for (int k = 2; k <= s.n - 1; k += 2) out.push_back(c[static_cast<std::size_t>(k - 1)]);
      } else {
        for (int k = 2; k <= s.n - 2; k += 2) out.push_back(c[static_cast<std::size_t>(k - 1)]);
        out.push_back(ratmat::pfaffian(lift<K>(s.j) * z));
      }
      break;
  }
  return out;
}

}  // namespace

AlgebraKind algebra_kind(rootsys::Family family) {
  switch (family) {
    case rootsys::Family::A:
      return AlgebraKind::sl;
    case rootsys::Family::B:
    case rootsys::Family::D:
      return AlgebraKind::so;
    case rootsys::Family::C:
      return AlgebraKind::sp;
    default:
      throw InvalidTypeError("no classical matrix realization for this family");
  }
}

int matrix_size(rootsys::Family family, int rank) {
  switch (family) {
    case rootsys::Family::A:
      return rank + 1;
    case rootsys::Family::B:
      return 2 * rank + 1;
    case rootsys::Family::C:
    case rootsys::Family::D:
      return 2 * rank;
    default:
      throw InvalidTypeError("no classical matrix realization for this family");
  }
}

std::string algebra_name(rootsys::Family family, int rank) {
  const char* stem = algebra_kind(family) == AlgebraKind::sl  ? "sl"
                     : algebra_kind(family) == AlgebraKind::so ? "so"
                                                               : "sp";
  return stem + std::to_string(matrix_size(family, rank));
}

rootsys::CartanDatum parse_algebra_name(const std::string& name) {
  if (name.size() < 3) throw InvalidTypeError("algebra name too short: " + name);
  const std::string stem = name.substr(0, 2);
  int n = 0;
  for (std::size_t i = 2; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') throw InvalidTypeError("bad algebra name: " + name);
    n = n * 10 + (name[i] - '0');
  }
  if (stem == "sl" && n >= 2) return rootsys::cartan_datum(rootsys::Family::A, n - 1);
  if (stem == "so" && n >= 5 && n % 2 == 1) return rootsys::cartan_datum(rootsys::Family::B, (n - 1) / 2);
  if (stem == "so" && n >= 6 && n % 2 == 0) return rootsys::cartan_datum(rootsys::Family::D, n / 2);
  if (stem == "sp" && n >= 4 && n % 2 == 0) return rootsys::cartan_datum(rootsys::Family::C, n / 2);
  throw InvalidTypeError("bad algebra name: " + name);
}

RatMat KostantSlice::point(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rank) throw UsageError("slice point needs one coordinate per rank");
  RatMat z = x;
  for (int k = 0; k < rank; ++k)
    z = z + l_basis[static_cast<std::size_t>(k)].scaled(b[static_cast<std::size_t>(k)]);
  return z;
}

KostantSlice build_kostant_slice(rootsys::Family family, int rank, int max_size) {
  rootsys::CartanDatum datum = rootsys::cartan_datum(family, rank);
  KostantSlice s;
  s.family = family;
  s.rank = rank;
  s.kind = algebra_kind(family);
  s.n = matrix_size(family, rank);
  if (s.n > max_size) throw CapExceededError("matrix realization larger than the size cap");
  const int n = s.n;
  const int l = n / 2;

  if (s.kind != AlgebraKind::sl) {
    s.j = RatMat(n, n);
    std::vector<long> tau = form_signs(s.kind, n);
    for (int i = 0; i < n; ++i) s.j.at(i, n - 1 - i) = Rat(tau[static_cast<std::size_t>(i)]);
  }

  // Diagonal of the principal grading element: consecutive even or odd
  // integers, symmetric under i -> n-1-i with a sign flip.
  std::vector<long> hd(static_cast<std::size_t>(n));
  if (family == rootsys::Family::D) {
    for (int i = 0; i < l; ++i) hd[static_cast<std::size_t>(i)] = 2 * (l - 1 - i);
    for (int i = l; i < n; ++i) hd[static_cast<std::size_t>(i)] = -hd[static_cast<std::size_t>(n - 1 - i)];
  } else {
    for (int i = 0; i < n; ++i) hd[static_cast<std::size_t>(i)] = n - 1 - 2 * i;
  }
  s.h = RatMat(n, n);
  for (int i = 0; i < n; ++i) s.h.at(i, i) = Rat(hd[static_cast<std::size_t>(i)]);

  // Weight-homogeneous basis of the algebra.
  if (s.kind == AlgebraKind::sl) {
    s.g_basis = sl_basis(n);
    for (const RatMat& m : s.g_basis) {
      long w = 0;
      for (int a = 0; a < n && w == 0; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b && !(m.at(a, b) == Rat(0))) {
            w = hd[static_cast<std::size_t>(a)] - hd[static_cast<std::size_t>(b)];
            break;
          }
      s.g_weights.push_back(w);
    }
  } else {
    std::vector<long> tau = form_signs(s.kind, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ma = n - 1 - b;
        const int mb = n - 1 - a;
        if (a == ma && b == mb) {
          if (s.kind != AlgebraKind::sp) continue;
        } else if (std::make_pair(a, b) > std::make_pair(ma, mb)) {
          continue;
        }
        s.g_basis.push_back(pair_elem(s.kind, tau, n, a, b));
        s.g_weights.push_back(hd[static_cast<std::size_t>(a)] - hd[static_cast<std::size_t>(b)]);
      }
  }
  const int dim_g = s.kind == AlgebraKind::sl ? n * n - 1
                    : s.kind == AlgebraKind::so ? n * (n - 1) / 2
                                                : n * (n + 1) / 2;
  if (static_cast<int>(s.g_basis.size()) != dim_g)
    throw InvariantViolationError("algebra basis has the wrong dimension");

  // Principal nilpotent: sum of the simple root vectors with unit
  // coefficients. Chain positions (i,i+1), plus the branch vector for D.
  std::vector<std::pair<int, int>> simple_pos;
  std::vector<long> tau = form_signs(s.kind, n);
  switch (family) {
    case rootsys::Family::A:
      for (int i = 0; i + 1 < n; ++i) simple_pos.emplace_back(i, i + 1);
      break;
    case rootsys::Family::B:
    case rootsys::Family::C:
      for (int i = 0; i < l; ++i) simple_pos.emplace_back(i, i + 1);
      break;
    case rootsys::Family::D:
      for (int i = 0; i + 1 < l; ++i) simple_pos.emplace_back(i, i + 1);
      simple_pos.emplace_back(l - 2, l);
      break;
    default:
      break;
  }
  if (static_cast<int>(simple_pos.size()) != rank)
    throw InvariantViolationError("wrong number of simple root vectors");
  s.x = RatMat(n, n);
  std::vector<RatMat> lowering;
  for (auto [a, b] : simple_pos) {
    RatMat e = s.kind == AlgebraKind::sl ? unit(n, a, b) : pair_elem(s.kind, tau, n, a, b);
    s.x = s.x + e;
    lowering.push_back(s.kind == AlgebraKind::sl ? unit(n, b, a) : pair_elem(s.kind, tau, n, b, a));
  }

  // The opposite nilpotent is the combination of lowering vectors with
  // [x, y] = h; the bracket [x, f_i] is the i-th coroot, so the system has a
  // unique solution.
  RatMat sysmat = columns_of(n, [&] {
    std::vector<RatMat> cols;
    for (const RatMat& f : lowering) cols.push_back(ratmat::bracket(s.x, f));
    return cols;
  }());
  std::vector<Rat> coeffs;
  if (!ratmat::solve(sysmat, vec_of(s.h), &coeffs))
    throw InvariantViolationError("no opposite nilpotent completes the sl2 triple");
  s.y = RatMat(n, n);
  for (int k = 0; k < rank; ++k)
    s.y = s.y + lowering[static_cast<std::size_t>(k)].scaled(coeffs[static_cast<std::size_t>(k)]);

  // Centralizer of y, weight space by weight space. Kernel vectors may only
  // appear at even negative weights -2m with m an exponent.
  std::map<long, std::vector<int>> by_weight;
  for (int i = 0; i < dim_g; ++i) by_weight[s.g_weights[static_cast<std::size_t>(i)]].push_back(i);
  std::vector<std::pair<int, RatMat>> graded;
  for (const auto& [w, idx] : by_weight) {
    std::vector<RatMat> cols;
    for (int i : idx) cols.push_back(ratmat::bracket(s.y, s.g_basis[static_cast<std::size_t>(i)]));
    for (const std::vector<Rat>& coef : ratmat::nullspace(columns_of(n, cols))) {
      if (w >= 0 || w % 2 != 0)
        throw InvariantViolationError("centralizer of y has a vector at a non-exponent weight");
      RatMat m(n, n);
      for (std::size_t t = 0; t < idx.size(); ++t)
        m = m + s.g_basis[static_cast<std::size_t>(idx[t])].scaled(coef[t]);
      graded.emplace_back(static_cast<int>(-w / 2), m);
    }
  }
  std::stable_sort(graded.begin(), graded.end(),
                   [](const auto& p, const auto& q) { return p.first < q.first; });
  for (auto& [m, mat] : graded) {
    s.exponents.push_back(m);
    s.l_basis.push_back(mat);
  }

  SliceStructure structure = check_slice_structure(s);
  if (!structure.pass()) throw InvariantViolationError("slice failed its build-time verification");
  return s;
}

SliceStructure check_slice_structure(const KostantSlice& s) {
  SliceStructure r;
  r.algebra = algebra_name(s.family, s.rank);
  r.dim_algebra = static_cast<int>(s.g_basis.size());
  r.rank = s.rank;

  r.membership = in_algebra(s, s.x) && in_algebra(s, s.h) && in_algebra(s, s.y);
  for (const RatMat& m : s.l_basis) r.membership = r.membership && in_algebra(s, m);

  r.sl2_relations = ratmat::bracket(s.x, s.y) == s.h &&
                    ratmat::bracket(s.h, s.x) == s.x.scaled(Rat(2)) &&
                    ratmat::bracket(s.h, s.y) == s.y.scaled(Rat(-2));

  std::vector<RatMat> image;
  for (const RatMat& f : s.g_basis) image.push_back(ratmat::bracket(s.x, f));
  const int rank_ad = ratmat::rank(columns_of(s.n, image));
  std::vector<RatMat> combined = image;
  combined.insert(combined.end(), s.l_basis.begin(), s.l_basis.end());
  r.complement = static_cast<int>(s.l_basis.size()) == s.rank &&
                 rank_ad == r.dim_algebra - s.rank &&
                 ratmat::rank(columns_of(s.n, combined)) == r.dim_algebra;

  std::vector<int> expected = weyl::weyl_degrees(s.family, s.rank);
  for (int& d : expected) --d;
  std::sort(expected.begin(), expected.end());
  std::vector<int> got = s.exponents;
  std::sort(got.begin(), got.end());
  r.grading_matches_degrees = got == expected;
  for (std::size_t k = 0; k < s.l_basis.size(); ++k)
    r.grading_matches_degrees =
        r.grading_matches_degrees &&
        ratmat::bracket(s.h, s.l_basis[k]) == s.l_basis[k].scaled(Rat(-2 * s.exponents[k]));
  return r;
}

std::vector<int> invariant_degrees(const KostantSlice& s) {
  std::vector<int> d;
  switch (s.kind) {
    case AlgebraKind::sl:
      for (int k = 2; k <= s.n; ++k) d.push_back(k);
      break;
    case AlgebraKind::sp:
      for (int k = 2; k <= s.n; k += 2) d.push_back(k);
      break;
    case AlgebraKind::so:
      if (s.n % 2 == 1) {
        for (int k = 2; k <= s.n - 1; k += 2) d.push_back(k);
      } else {
        for (int k = 2; k <= s.n - 2; k += 2) d.push_back(k);
        d.push_back(s.n / 2);
      }
      break;
  }
  return d;
}

std::vector<Rat> invariants(const KostantSlice& s, const RatMat& z) { return invariants_impl(s, z); }

std::vector<Dual> invariants_dual(const KostantSlice& s, const DualMat& z) {
  return invariants_impl(s, z);
}

std::vector<Rat> solve_invariants(const KostantSlice& s, const std::vector<Rat>& target) {
  if (static_cast<int>(target.size()) != s.rank)
    throw UsageError("invariant target needs one value per rank");
  const std::vector<int> degrees = invariant_degrees(s);
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> classes;
  for (int i = 0; i < s.rank; ++i) classes[degrees[static_cast<std::size_t>(i)]].first.push_back(i);
  for (int k = 0; k < s.rank; ++k) classes[s.exponents[static_cast<std::size_t>(k)] + 1].second.push_back(k);

  std::vector<Rat> b(static_cast<std::size_t>(s.rank), Rat(0));
  for (const auto& [degree, cls] : classes) {
    const std::vector<int>& outs = cls.first;
    const std::vector<int>& coords = cls.second;
    if (outs.size() != coords.size())
      throw InvariantViolationError("invariant degrees do not match the slice grading");
    const int m = static_cast<int>(outs.size());
    std::vector<Rat> base = invariants(s, s.point(b));
    // Each degree class is affine in its own coordinates with a constant
    // linear part, so columns probed at unit coordinates determine it.
    RatMat sys(m, m);
    for (int c = 0; c < m; ++c) {
      b[static_cast<std::size_t>(coords[static_cast<std::size_t>(c)])] = 1;
      std::vector<Rat> probe = invariants(s, s.point(b));
      b[static_cast<std::size_t>(coords[static_cast<std::size_t>(c)])] = 0;
      for (int i = 0; i < m; ++i) {
        const std::size_t oi = static_cast<std::size_t>(outs[static_cast<std::size_t>(i)]);
        sys.at(i, c) = probe[oi] - base[oi];
      }
    }
    if (ratmat::det(sys) == Rat(0))
      throw InvariantViolationError("invariant map is not triangular over the slice grading");
    std::vector<Rat> rhs;
    for (int i = 0; i < m; ++i) {
      const std::size_t oi = static_cast<std::size_t>(outs[static_cast<std::size_t>(i)]);
      rhs.push_back(target[oi] - base[oi]);
    }
    std::vector<Rat> sol;
    ratmat::solve(sys, rhs, &sol);
    for (int c = 0; c < m; ++c)
      b[static_cast<std::size_t>(coords[static_cast<std::size_t>(c)])] = sol[static_cast<std::size_t>(c)];
  }
  return b;
}

int centralizer_dimension(const KostantSlice& s, const RatMat& z) {
  std::vector<RatMat> cols;
  for (const RatMat& f : s.g_basis) cols.push_back(ratmat::bracket(z, f));
  return static_cast<int>(s.g_basis.size()) - ratmat::rank(columns_of(s.n, cols));
}

RatMat invariant_jacobian(const KostantSlice& s, const std::vector<Rat>& b) {
  RatMat z = s.point(b);
  RatMat jac(s.rank, s.rank);
  for (int k = 0; k < s.rank; ++k) {
    DualMat zd(s.n, s.n);
    for (int i = 0; i < s.n; ++i)
      for (int jj = 0; jj < s.n; ++jj)
        zd.at(i, jj) = Dual(z.at(i, jj), s.l_basis[static_cast<std::size_t>(k)].at(i, jj));
    std::vector<Dual> out = invariants_dual(s, zd);
    for (int i = 0; i < s.rank; ++i) jac.at(i, k) = out[static_cast<std::size_t>(i)].b;
  }
  return jac;
}

SliceCheck verify_kostant_slice(const KostantSlice& s, int samples, Rng& rng) {
  SliceCheck ck;
  ck.algebra = algebra_name(s.family, s.rank);
  ck.samples = samples;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (ck.witness.empty()) ck.witness = what;
  };

  for (int t = 0; t < samples; ++t) {
    std::vector<Rat> b;
    for (int k = 0; k < s.rank; ++k) b.push_back(rng.rational(1000, 1000));
    RatMat z = s.point(b);

    const int nullity = centralizer_dimension(s, z);
    if (nullity != s.rank)
      fail(ck.regular_at_samples,
           "sample " + std::to_string(t) + " has ad-nullity " + std::to_string(nullity));

    if (s.kind != AlgebraKind::sl) {
      std::vector<Rat> c = ratmat::charpoly(z);
      for (int k = 1; k <= s.n; k += 2)
        if (!(c[static_cast<std::size_t>(k - 1)] == Rat(0)))
          fail(ck.odd_coefficients_vanish,
               "sample " + std::to_string(t) + " has a nonzero odd coefficient at degree " +
                   std::to_string(k));
    }

    std::vector<Rat> back = solve_invariants(s, invariants(s, z));
    if (back != b) fail(ck.roundtrip_exact, "sample " + std::to_string(t) + " round trip differs");

    RatMat jac = invariant_jacobian(s, b);
    if (ratmat::rank(jac) != s.rank)
      fail(ck.jacobian_nonsingular, "sample " + std::to_string(t) + " has a singular Jacobian");

    if (t == 0) {
      // Floating-point cross-check of the exact Jacobian by central
      // differences; tolerance is loose because it only guards against a
      // wrong derivative implementation, not roundoff.
      const double rel_tol = 1e-3;
      for (int k = 0; k < s.rank && ck.jacobian_fd_consistent; ++k) {
        const double bk = b[static_cast<std::size_t>(k)].get_d();
        const double step = (1.0 + std::fabs(bk)) * 0x1p-24;
        auto eval = [&](double delta) {
          ratmat::Mat<double> zd = lift<double>(s.point(b));
          ratmat::Mat<double> dir = lift<double>(s.l_basis[static_cast<std::size_t>(k)]);
          for (int i = 0; i < s.n; ++i)
            for (int jj = 0; jj < s.n; ++jj) zd.at(i, jj) += delta * dir.at(i, jj);
          return invariants_impl(s, zd);
        };
        std::vector<double> hi = eval(step);
        std::vector<double> lo = eval(-step);
        for (int i = 0; i < s.rank; ++i) {
          const double fd = (hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)]) / (2 * step);
          const double exact = jac.at(i, k).get_d();
          if (std::fabs(fd - exact) > rel_tol * (1.0 + std::fabs(exact))) {
            fail(ck.jacobian_fd_consistent,
                 "finite differences disagree with the exact Jacobian at entry (" +
                     std::to_string(i) + "," + std::to_string(k) + ")");
            break;
          }
        }
      }
    }
  }
  return ck;
}

RatMat SteinbergSlice::at(const std::vector<Rat>& a) const {
  if (static_cast<int>(a.size()) != n - 1) throw UsageError("slice needs n-1 coordinates");
  // Companion matrix of t^n - a_1 t^(n-1) + a_2 t^(n-2) - ... + (-1)^n.
  std::vector<Rat> p(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k < n; ++k)
    p[static_cast<std::size_t>(k)] = (k % 2 == 0 ? a[static_cast<std::size_t>(k - 1)]
                                                 : -a[static_cast<std::size_t>(k - 1)]);
  p[static_cast<std::size_t>(n)] = Rat(n % 2 == 0 ? 1 : -1);
  RatMat c(n, n);
  for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c.at(i, n - 1) = -p[static_cast<std::size_t>(n - i)];
  return c;
}

std::vector<RatMat> SteinbergSlice::derivative() const {
  std::vector<RatMat> d;
  for (int k = 1; k < n; ++k) {
    RatMat m(n, n);
    m.at(n - k, n - 1) = Rat(k % 2 == 0 ? -1 : 1);
    d.push_back(m);
  }
  return d;
}

std::vector<Rat> SteinbergSlice::coordinates(const RatMat& g) const {
  std::vector<Rat> c = ratmat::charpoly(g);
  std::vector<Rat> a;
  for (int k = 1; k < n; ++k)
    a.push_back(k % 2 == 0 ? c[static_cast<std::size_t>(k - 1)] : -c[static_cast<std::size_t>(k - 1)]);
  return a;
}

SteinbergSlice build_steinberg_slice(int n, int max_size) {
  if (n < 2) throw InvalidTypeError("companion slice needs n >= 2");
  if (n > max_size) throw CapExceededError("companion slice larger than the size cap");
  return SteinbergSlice{n};
}

GroupSliceCheck verify_steinberg_slice(const SteinbergSlice& s, int samples, Rng& rng) {
  GroupSliceCheck ck;
  ck.n = s.n;
  ck.samples = samples;
  const int n = s.n;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (ck.witness.empty()) ck.witness = what;
  };

  for (int t = 0; t < samples; ++t) {
    std::vector<Rat> a;
    for (int k = 1; k < n; ++k) a.push_back(rng.rational(1000, 1000));
    RatMat g = s.at(a);

    if (!(ratmat::det(g) == Rat(1)))
      fail(ck.det_one, "sample " + std::to_string(t) + " has determinant != 1");

    std::vector<Rat> c = ratmat::charpoly(g);
    bool rt = s.coordinates(g) == a && c[static_cast<std::size_t>(n - 1)] == Rat(n % 2 == 0 ? 1 : -1);
    if (!rt)
      fail(ck.charpoly_roundtrip,
           "sample " + std::to_string(t) + " does not reproduce its coefficients");

    std::vector<RatMat> cols;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) cols.push_back(ratmat::bracket(g, unit(n, i, jj)));
    const int commutant = n * n - ratmat::rank(columns_of(n, cols));
    if (commutant != n)
      fail(ck.commutant_dimension,
           "sample " + std::to_string(t) + " has commutant dimension " + std::to_string(commutant));

    RatMat krylov(n, n);
    RatMat v(n, 1);
    v.at(0, 0) = 1;
    for (int jj = 0; jj < n; ++jj) {
      for (int i = 0; i < n; ++i) krylov.at(i, jj) = v.at(i, 0);
      v = g * v;
    }
    if (ratmat::det(krylov) == Rat(0))
      fail(ck.cyclic_vector, "sample " + std::to_string(t) + " fails the cyclic-vector certificate");
  }
  return ck;
}

LinkReport kostant_steinberg_link(int n) {
  if (n < 2 || n > 8) throw InvalidTypeError("link check supports 2 <= n <= 8");
  LinkReport r;
  r.n = n;
  SteinbergSlice s = build_steinberg_slice(n);

  // Value of the slice at the invariants of the identity: the companion
  // matrix of (t-1)^n, a regular unipotent element.
  RatMat u = s.at(binomial_point(n));
  RatMat nil = u - RatMat::identity(n);

  RatMat xp(n, n);
  RatMat pw = nil;
  for (int k = 1; k < n; ++k) {
    xp = xp + pw.scaled(Rat(k % 2 == 1 ? 1 : -1, k));
    pw = pw * nil;
  }

  RatMat xpow = RatMat::identity(n);
  for (int k = 0; k < n; ++k) xpow = xpow * xp;
  r.log_nilpotent = xpow.is_zero() && !xp.is_zero();

  std::vector<RatMat> basis = sl_basis(n);
  std::vector<RatMat> image;
  for (const RatMat& f : basis) image.push_back(ratmat::bracket(xp, f));
  const int dim_sl = n * n - 1;
  const int rank_ad = ratmat::rank(columns_of(n, image));
  r.log_principal = dim_sl - rank_ad == n - 1;

  RatMat expx(n, n);
  RatMat term = RatMat::identity(n);
  long factorial = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) factorial *= k;
    expx = expx + term.scaled(Rat(1, factorial));
    term = term * xp;
  }
  r.exp_recovers = expx == u;

  // Tangent space of the slice at u, carried into the Lie algebra by left
  // translation. Conjugation by u = exp(X') fixes Im ad X', so the choice of
  // left over right translation cannot change the complement verdict.
  RatMat uinv = ratmat::inverse(u);
  std::vector<RatMat> tangent;
  r.tangent_traceless = true;
  for (const RatMat& d : s.derivative()) {
    RatMat lk = uinv * d;
    r.tangent_traceless = r.tangent_traceless && lk.trace() == Rat(0);
    tangent.push_back(lk);
  }

  std::vector<RatMat> combined = image;
  combined.insert(combined.end(), tangent.begin(), tangent.end());
  r.complement = ratmat::rank(columns_of(n, combined)) == dim_sl;
  return r;
}

}  // namespace adjq::sections
