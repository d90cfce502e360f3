#include <adjq/restriction.hpp>

#include <adjq/errors.hpp>

namespace adjq::restriction {

using intlat::Int;
using intlat::IntMatrix;
using intlat::Sublattice;
using rootsys::WeightVec;

IntMatrix to_intmatrix(const weyl::WeylElement& w) {
  const int r = w.rank;
  IntMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m.at(i, j) = w.entry(i, j);
  return m;
}

namespace {

std::vector<Int> to_int_vec(const WeightVec& w) {
  std::vector<Int> v;
  v.reserve(w.c.size());
  for (long x : w.c) v.emplace_back(x);
  return v;
}

// Basis of {c : A c = 0 mod d} as rows, for the column action c -> A c.
IntMatrix congruence_kernel(const IntMatrix& a, const Int& d) {
  const int k = a.cols();
  intlat::SmithDecomposition s = intlat::smith(a);
  const int rk = s.rank();
  IntMatrix basis(k, k);
  for (int i = 0; i < k; ++i) {
    Int m = 1;
    if (i < rk) {
      Int di = s.d.at(i, i);
      m = d / gcd(di, d);
    }
    // c_i = m * (column i of v); store as row i.
    for (int j = 0; j < k; ++j) basis.at(i, j) = m * s.v.at(j, i);
  }
  return basis;
}

}  // namespace

RestrictionReport restriction_invariants_sequence(
    const rootsys::RootSystem& rs, const WeightVec& varpi,
    const std::vector<weyl::WeylElement>& w0_gens) {
  const int r = rs.rank();
  if (varpi.rank() != r) throw RankMismatchError("weight rank mismatch");
  if (varpi.is_zero()) throw UsageError("restriction sequence needs a nonzero weight");
  for (const auto& g : w0_gens)
    if (!(g.apply(varpi) == varpi))
      throw UsageError("restriction sequence generators must fix the weight");

  RestrictionReport report;
  report.kernel_generator = WeightVec::zero(r);

  std::vector<IntMatrix> action;
  action.reserve(w0_gens.size());
  for (const auto& g : w0_gens) action.push_back(to_intmatrix(g));
  Sublattice inv = intlat::invariant_sublattice(action, r);
  report.ambient_invariant_rank = inv.rank();

  if (!intlat::solve_in_lattice(inv.basis, to_int_vec(varpi), nullptr))
    throw InvariantViolationError("fixed weight missing from the invariant lattice");

  // Unimodular T with T * varpi = (+-d) e_1, from the Smith form of the
  // weight as a column.
  IntMatrix col(r, 1);
  for (int i = 0; i < r; ++i) col.at(i, 0) = varpi[i];
  intlat::SmithDecomposition ws = intlat::smith(col);
  const IntMatrix& t = ws.u;
  const IntMatrix& t_inv = ws.u_inv;
  Int d = ws.d.at(0, 0);
  report.torsion_order = d.get_si();

  // Conjugated generators fix e_1, so the first column is e_1 and the
  // quotient action splits into a free block and a torsion coupling row.
  std::vector<IntMatrix> free_blocks;
  std::vector<std::vector<Int>> couplings;
  for (const auto& g : action) {
    IntMatrix gp = t * g * t_inv;
    for (int i = 0; i < r; ++i)
      if (gp.at(i, 0) != (i == 0 ? 1 : 0))
        throw InvariantViolationError("conjugated generator does not fix the weight line");
    IntMatrix block(r - 1, r - 1);
    std::vector<Int> coupling(static_cast<std::size_t>(r - 1));
    for (int j = 1; j < r; ++j) {
      coupling[static_cast<std::size_t>(j - 1)] = gp.at(0, j);
      for (int i = 1; i < r; ++i) block.at(i - 1, j - 1) = gp.at(i, j);
    }
    free_blocks.push_back(std::move(block));
    couplings.push_back(std::move(coupling));
  }

  // Invariants of the quotient: free vectors fixed by every block whose
  // coupling values vanish mod d, plus the whole torsion part.
  Sublattice free_inv = intlat::invariant_sublattice(free_blocks, r - 1);
  report.quotient_invariant_rank = free_inv.rank();
  IntMatrix quot_basis;  // rows: free part of each quotient invariant generator
  if (d == 1 || free_inv.rank() == 0 || couplings.empty()) {
    quot_basis = free_inv.basis;
  } else {
    IntMatrix a(static_cast<int>(couplings.size()), free_inv.rank());
    for (int gi = 0; gi < a.rows(); ++gi)
      for (int c = 0; c < a.cols(); ++c) {
        Int acc = 0;
        for (int j = 0; j < r - 1; ++j) acc += couplings[gi][j] * free_inv.basis.at(c, j);
        a.at(gi, c) = acc;
      }
    IntMatrix coeff = congruence_kernel(a, d);
    quot_basis = coeff * free_inv.basis;
  }

  // Images of the ambient invariant basis in quotient coordinates; the
  // torsion coordinate goes last, with a slack row making it mod d.
  const int k = inv.rank();
  const bool torsion = d > 1;
  const int qc = (r - 1) + (torsion ? 1 : 0);
  IntMatrix images(k + (torsion ? 1 : 0), qc);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < r; ++i) {
      Int acc = 0;
      for (int c = 0; c < r; ++c) acc += t.at(i, c) * inv.basis.at(j, c);
      if (i == 0) {
        if (torsion) images.at(j, qc - 1) = acc;
      } else {
        images.at(j, i - 1) = acc;
      }
    }
  }
  if (torsion) images.at(k, qc - 1) = d;

  // Kernel of the restriction map, pushed back to ambient coordinates.
  Sublattice coords = intlat::kernel_lattice(images);
  IntMatrix kernel_rows(coords.rank(), r);
  for (int i = 0; i < coords.rank(); ++i)
    for (int c = 0; c < r; ++c) {
      Int acc = 0;
      for (int j = 0; j < k; ++j) acc += coords.basis.at(i, j) * inv.basis.at(j, c);
      kernel_rows.at(i, c) = acc;
    }
  Sublattice kernel = intlat::row_lattice(kernel_rows);
  Sublattice weight_line;
  weight_line.ambient = r;
  weight_line.basis = IntMatrix(1, r);
  for (int i = 0; i < r; ++i) weight_line.basis.at(0, i) = varpi[i];
  report.kernel_is_weight_line =
      intlat::sublattice_equals(kernel, weight_line).order == intlat::LatticeOrder::equal;
  if (kernel.rank() == 1) {
    WeightVec gen = WeightVec::zero(r);
    for (int i = 0; i < r; ++i) gen.c[i] = kernel.basis.at(0, i).get_si();
    for (int i = 0; i < r; ++i) {
      if (gen.c[i] == 0) continue;
      if (gen.c[i] < 0) gen = -gen;
      break;
    }
    report.kernel_generator = gen;
  }

  // Surjectivity: every quotient invariant generator lifts to an
  // ambient invariant vector.
  report.surjective = true;
  for (int i = 0; i < quot_basis.rows(); ++i) {
    std::vector<Int> target(static_cast<std::size_t>(qc));
    for (int j = 0; j < r - 1; ++j) target[static_cast<std::size_t>(j)] = quot_basis.at(i, j);
    if (!intlat::solve_in_lattice(images, target, nullptr)) report.surjective = false;
  }
  if (torsion) {
    std::vector<Int> target(static_cast<std::size_t>(qc));
    target[static_cast<std::size_t>(qc - 1)] = 1;
    if (!intlat::solve_in_lattice(images, target, nullptr)) report.surjective = false;
  }
  return report;
}

}  // namespace adjq::restriction
