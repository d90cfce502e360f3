#include <adjq/correspond.hpp>

#include <adjq/errors.hpp>

#include <algorithm>
#include <map>

namespace adjq::correspond {

using intlat::Int;
using intlat::IntMatrix;
using rootsys::RootSystem;

const char* curve_kind_name(CurveKind kind) {
  return kind == CurveKind::cuspidal ? "cuspidal" : "nodal";
}

Rat identity_value(CurveKind kind) {
  return kind == CurveKind::cuspidal ? Rat(0) : Rat(1);
}

TorusPoint identity_point(CurveKind kind, int rank) {
  TorusPoint x;
  x.kind = kind;
  x.coords.assign(static_cast<std::size_t>(rank), identity_value(kind));
  return x;
}

TorusPoint random_nodal_point(const RootSystem& rs, Rng& rng) {
  TorusPoint x;
  x.kind = CurveKind::nodal;
  x.coords.reserve(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) x.coords.push_back(rng.prime_ratio());
  return x;
}

TorusPoint random_cuspidal_point(const RootSystem& rs, Rng& rng) {
  TorusPoint x;
  x.kind = CurveKind::cuspidal;
  x.coords.reserve(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) x.coords.push_back(rng.rational(9, 9));
  return x;
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw UsageError("zero base with negative exponent");
    return rat_pow(Rat(1) / base, -e);
  }
  Rat acc(1);
  for (long k = 0; k < e; ++k) acc *= base;
  return acc;
}

Rat evaluate(const TorusPoint& x, const WeightVec& mu) {
  if (x.rank() != mu.rank()) throw RankMismatchError("torus point rank mismatch");
  if (x.kind == CurveKind::cuspidal) {
    Rat acc(0);
    for (int i = 0; i < mu.rank(); ++i) acc += Rat(mu[i]) * x.coords[static_cast<std::size_t>(i)];
    return acc;
  }
  Rat acc(1);
  for (int i = 0; i < mu.rank(); ++i)
    acc *= rat_pow(x.coords[static_cast<std::size_t>(i)], mu[i]);
  return acc;
}

TorusPoint act(const weyl::WeylElement& w, const TorusPoint& x) {
  if (w.rank != x.rank()) throw RankMismatchError("torus action rank mismatch");
  weyl::WeylElement wi = weyl::inverse(w);
  TorusPoint out;
  out.kind = x.kind;
  out.coords.assign(x.coords.size(), identity_value(x.kind));
  // Contragredient action: new coordinate j collects entry (i, j) of the
  // inverse matrix, so characters transform by the inverse on weights.
  for (int j = 0; j < w.rank; ++j) {
    if (x.kind == CurveKind::cuspidal) {
      Rat acc(0);
      for (int i = 0; i < w.rank; ++i)
        acc += Rat(wi.entry(i, j)) * x.coords[static_cast<std::size_t>(i)];
      out.coords[static_cast<std::size_t>(j)] = acc;
    } else {
      Rat acc(1);
      for (int i = 0; i < w.rank; ++i)
        acc *= rat_pow(x.coords[static_cast<std::size_t>(i)], wi.entry(i, j));
      out.coords[static_cast<std::size_t>(j)] = acc;
    }
  }
  return out;
}

const Rat* SpectralFiber::value_at(const WeightVec& mu) const {
  for (const auto& [w, v] : entries)
    if (w == mu) return &v;
  return nullptr;
}

SpectralFiber spectral_fiber(const RootSystem& rs,
                             const std::vector<std::pair<WeightVec, int>>& weights,
                             const TorusPoint& x) {
  if (x.rank() != rs.rank()) throw RankMismatchError("fiber rank mismatch");
  SpectralFiber fiber;
  fiber.kind = x.kind;
  const Rat id = identity_value(x.kind);
  for (const auto& [mu, mult] : weights) {
    if (mu.is_zero()) {
      fiber.zero_multiplicity += mult;
      continue;
    }
    Rat v = evaluate(x, mu);
    if (v == id) fiber.at_identity.push_back(mu);
    for (int k = 0; k < mult; ++k) fiber.entries.emplace_back(mu, v);
  }
  std::sort(fiber.entries.begin(), fiber.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::sort(fiber.at_identity.begin(), fiber.at_identity.end());
  return fiber;
}

const Rat& FiberFunction::at(const WeightVec& mu) const {
  auto it = values.find(mu);
  if (it == values.end())
    throw UsageError("fiber function missing weight " + rootsys::to_string(mu));
  return it->second;
}

FiberFunction character_fiber_function(const RootSystem& rs, const TorusPoint& x) {
  if (x.kind != CurveKind::nodal)
    throw UsageError("character fiber functions are multiplicative; nodal point required");
  FiberFunction f;
  for (const auto& alpha : rs.short_roots) f.values.emplace(alpha, evaluate(x, alpha));
  return f;
}

RelationSet build_relation_set(const RootSystem& rs) {
  RelationSet rels;
  rels.short_roots = rs.short_roots;
  const int n = static_cast<int>(rels.short_roots.size());
  std::map<WeightVec, int> pos;
  for (int i = 0; i < n; ++i) pos.emplace(rels.short_roots[i], i);
  for (int i = 0; i < n; ++i) {
    const WeightVec& a = rels.short_roots[i];
    auto it = pos.find(-a);
    if (it == pos.end()) throw InvariantViolationError("short roots not closed under negation");
    if (it->second > i) {
      std::vector<long> v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(it->second)] = 1;
      rels.type_i.push_back(std::move(v));
      rels.type_i_pairs.emplace_back(a, -a);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      WeightVec sum = rels.short_roots[i] + rels.short_roots[j];
      auto it = pos.find(sum);
      if (it == pos.end()) continue;
      std::vector<long> v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(j)] = 1;
      v[static_cast<std::size_t>(it->second)] -= 1;
      rels.type_ii.push_back(std::move(v));
      rels.type_ii_triples.push_back({rels.short_roots[i], rels.short_roots[j], sum});
    }
  return rels;
}

KernelGenerationReport verify_kernel_generation(const RootSystem& rs) {
  RelationSet rels = build_relation_set(rs);
  const int n = static_cast<int>(rels.short_roots.size());
  IntMatrix phi(n, rs.rank());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rs.rank(); ++j) phi.at(i, j) = rels.short_roots[i][j];
  intlat::Sublattice kernel = intlat::kernel_lattice(phi);

  std::vector<std::vector<long>> rows = rels.type_i;
  rows.insert(rows.end(), rels.type_ii.begin(), rels.type_ii.end());

  // Every relation row annihilates the evaluation map; verified here so the
  // early exit below may stop scanning once a prefix already spans the
  // kernel.
  for (const std::vector<long>& v : rows)
    for (int j = 0; j < rs.rank(); ++j) {
      long acc = 0;
      for (int i = 0; i < n; ++i) acc += v[static_cast<std::size_t>(i)] * rels.short_roots[static_cast<std::size_t>(i)][j];
      if (acc != 0) throw InvariantViolationError("relation row outside the evaluation kernel");
    }

  // The span accumulates block by block: each pass reduces the current basis
  // together with the next block of rows. Large simply laced systems have
  // thousands of triple relations but their span stabilizes after a few
  // blocks, so this avoids one Smith reduction over the full stack.
  KernelGenerationReport report;
  report.kernel_rank = kernel.rank();
  report.index = 0;
  const std::size_t block = 300;
  intlat::Sublattice span{n, IntMatrix(0, n)};
  intlat::LatticeComparison cmp{intlat::LatticeOrder::incomparable, std::nullopt};
  std::size_t consumed = 0;
  while (true) {
    const std::size_t take = std::min(block, rows.size() - consumed);
    if (take > 0) {
      IntMatrix stack(span.basis.rows() + static_cast<int>(take), n);
      for (int i = 0; i < span.basis.rows(); ++i)
        for (int j = 0; j < n; ++j) stack.at(i, j) = span.basis.at(i, j);
      for (std::size_t t = 0; t < take; ++t)
        for (int j = 0; j < n; ++j)
          stack.at(span.basis.rows() + static_cast<int>(t), j) =
              rows[consumed + t][static_cast<std::size_t>(j)];
      consumed += take;
      span = intlat::row_lattice(stack);
    }
    if (span.rank() == kernel.rank()) cmp = intlat::sublattice_equals(span, kernel);
    if (cmp.order == intlat::LatticeOrder::equal || consumed >= rows.size()) break;
  }
  report.generated_rank = span.rank();
  if (cmp.index) report.index = *cmp.index;
  report.pass = cmp.order == intlat::LatticeOrder::equal;
  return report;
}

std::optional<RelationWitness> find_violated_relation(const FiberFunction& f,
                                                      const RelationSet& rels) {
  for (const auto& [a, b] : rels.type_i_pairs) {
    Rat p = f.at(a) * f.at(b);
    if (p != 1) return RelationWitness{"pair", {a, b}, p};
  }
  for (const auto& t : rels.type_ii_triples) {
    Rat p = f.at(t[0]) * f.at(t[1]) / f.at(t[2]);
    if (p != 1) return RelationWitness{"triple", {t[0], t[1], t[2]}, p};
  }
  return std::nullopt;
}

bool check_fiber_relations(const FiberFunction& f, const RelationSet& rels) {
  return !find_violated_relation(f, rels).has_value();
}

TorusSolve solve_torus_point(const RootSystem& rs, const FiberFunction& f) {
  TorusSolve solve;
  RelationSet rels = build_relation_set(rs);
  solve.violation = find_violated_relation(f, rels);
  if (solve.violation) return solve;

  const int n = static_cast<int>(rels.short_roots.size());
  IntMatrix shorts(n, rs.rank());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rs.rank(); ++j) shorts.at(i, j) = rels.short_roots[i][j];

  solve.simple_values.assign(static_cast<std::size_t>(rs.rank()), Rat(1));
  for (int i = 0; i < rs.rank(); ++i) {
    const WeightVec& alpha = rs.simple_roots[static_cast<std::size_t>(i)];
    if (rs.is_short_root(alpha)) {
      solve.simple_values[static_cast<std::size_t>(i)] = f.at(alpha);
      continue;
    }
    // A long simple root lies in the lattice spanned by the short roots;
    // its value is the corresponding monomial in short root values.
    std::vector<Int> target;
    for (int j = 0; j < rs.rank(); ++j) target.emplace_back(alpha[j]);
    std::vector<Int> coords;
    if (!intlat::solve_in_lattice(shorts, target, &coords))
      throw InvariantViolationError("long simple root outside the short root span");
    Rat v(1);
    for (int k = 0; k < n; ++k)
      v *= rat_pow(f.at(rels.short_roots[static_cast<std::size_t>(k)]),
                   coords[static_cast<std::size_t>(k)].get_si());
    solve.simple_values[static_cast<std::size_t>(i)] = v;
  }

  for (const auto& alpha : rels.short_roots) {
    std::vector<Rat> c = rs.simple_coords(alpha);
    Rat predicted(1);
    for (int i = 0; i < rs.rank(); ++i) {
      if (c[static_cast<std::size_t>(i)].get_den() != 1)
        throw InvariantViolationError("root with non integral simple coordinates");
      predicted *= rat_pow(solve.simple_values[static_cast<std::size_t>(i)],
                           c[static_cast<std::size_t>(i)].get_num().get_si());
    }
    if (predicted != f.at(alpha)) {
      solve.extension_failure = alpha;
      return solve;
    }
  }
  solve.ok = true;
  return solve;
}

std::vector<std::pair<std::array<WeightVec, 3>, Rat>> correspondence_c(
    const FiberFunction& f, const std::vector<std::array<WeightVec, 3>>& triples) {
  std::vector<std::pair<std::array<WeightVec, 3>, Rat>> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.emplace_back(t, f.at(t[0]) * f.at(t[1]) * f.at(t[2]));
  return out;
}

std::vector<std::pair<std::array<WeightVec, 4>, Rat>> correspondence_c4(
    const FiberFunction& f, const std::vector<std::array<WeightVec, 4>>& quadruples) {
  std::vector<std::pair<std::array<WeightVec, 4>, Rat>> out;
  out.reserve(quadruples.size());
  for (const auto& q : quadruples)
    out.emplace_back(q, f.at(q[0]) * f.at(q[1]) * f.at(q[2]) * f.at(q[3]));
  return out;
}

std::vector<std::array<WeightVec, 4>> e7_proper_quadruples(
    const RootSystem& rs, const std::vector<WeightVec>& weights) {
  if (rs.datum.family != rootsys::Family::E || rs.datum.rank != 7)
    throw InvalidTypeError("proper quadruples are an E7 construction");
  if (weights.size() != 56)
    throw UsageError("expected the 56 minuscule weights");
  return rootsys::proper_zero_sum_quadruples(weights);
}

bool subscheme_vanishing_check(const RootSystem& rs, const std::array<WeightVec, 3>& triple,
                               int trials, Rng& rng) {
  for (const auto& w : triple)
    if (!rs.is_short_root(w)) throw UsageError("subscheme triple must consist of short roots");
  if (!(triple[0] + triple[1] + triple[2]).is_zero())
    throw UsageError("subscheme triple must sum to zero");

  // Coweight directions annihilating the triple; points built from them
  // put the whole triple at the identity.
  const int r = rs.rank();
  IntMatrix m(r, 2);
  for (int i = 0; i < r; ++i) {
    m.at(i, 0) = triple[0][i];
    m.at(i, 1) = triple[1][i];
  }
  intlat::Sublattice directions = intlat::kernel_lattice(m);

  for (int trial = 0; trial < trials; ++trial) {
    TorusPoint x;
    x.kind = CurveKind::nodal;
    x.coords.assign(static_cast<std::size_t>(r), Rat(1));
    for (int k = 0; k < directions.rank(); ++k) {
      Rat t = rng.prime_ratio();
      for (int i = 0; i < r; ++i)
        x.coords[static_cast<std::size_t>(i)] *= rat_pow(t, directions.basis.at(k, i).get_si());
    }
    for (const auto& w : triple)
      if (evaluate(x, w) != 1)
        throw InvariantViolationError("degenerate sample misses the triple locus");

    FiberFunction f;
    for (const auto& alpha : rs.short_roots) {
      if (evaluate(x, alpha) == 1)
        f.values.emplace(alpha, Rat(1));
      else
        f.values.emplace(alpha, rng.rational(9, 9));
    }
    Rat c = f.at(triple[0]) * f.at(triple[1]) * f.at(triple[2]);
    if (c != 1) return false;
  }
  return true;
}

}  // namespace adjq::correspond
