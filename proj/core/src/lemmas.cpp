#include "adjq/lemmas.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>

#include "adjq/correspond.hpp"
#include "adjq/errors.hpp"
#include "adjq/registry.hpp"
#include "adjq/reps.hpp"
#include "adjq/restriction.hpp"
#include "adjq/sections.hpp"
#include "adjq/weyl.hpp"

namespace adjq::lemmas {

namespace {

using nlohmann::ordered_json;
using rootsys::Family;
using rootsys::RootSystem;
using rootsys::WeightVec;

struct RunOut {
  std::string status;
  ordered_json witness;
};

RunOut passed(ordered_json w) { return {"pass", std::move(w)}; }
RunOut failed(ordered_json w) { return {"fail", std::move(w)}; }
RunOut vacuous(ordered_json w) { return {"vacuous", std::move(w)}; }

int trials_or(const Options& opt, int dflt) {
  if (!opt.trials) return dflt;
  if (*opt.trials <= 0) throw UsageError("trials must be positive");
  return *opt.trials;
}

ordered_json weight_list(const std::vector<WeightVec>& ws) {
  ordered_json a = ordered_json::array();
  for (const WeightVec& w : ws) a.push_back(rootsys::to_string(w));
  return a;
}

// Type enumeration in label order within each family.
std::vector<TypeId> types_rank_le(int max_rank) {
  std::vector<TypeId> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

std::vector<TypeId> a_range(int lo, int hi) {
  std::vector<TypeId> out;
  for (int r = lo; r <= hi; ++r) out.push_back({Family::A, r});
  return out;
}

// ---------------------------------------------------------------- census

RunOut run_minuscule_census(const TypeId& t, const Options&) {
  RootSystem rs = rootsys::build_root_system(t.first, t.second);
  reps::MinusculeCensus census = reps::minuscule_census(rs);
  const long expected = rootsys::center_order(t.first, t.second) - 1;
  bool recheck = true;
  for (int i : census.fundamental_indices)
    recheck = recheck && reps::is_minuscule_fundamental(rs, i);
  ordered_json w;
  w["center_order"] = census.center_order;
  w["expected_count"] = expected;
  w["count"] = census.fundamental_indices.size();
  ordered_json idx = ordered_json::array();
  for (int i : census.fundamental_indices) idx.push_back(i + 1);
  w["fundamental_weights"] = idx;  // one-based, standard numbering
  const bool ok = recheck && static_cast<long>(census.fundamental_indices.size()) == expected &&
                  census.center_order == rootsys::center_order(t.first, t.second);
  return ok ? passed(w) : failed(w);
}

RunOut run_quasi_minuscule(const TypeId& t, const Options&) {
  RootSystem rs = rootsys::build_root_system(t.first, t.second);
  reps::QuasiMinusculeData qm = reps::quasi_minuscule_data(rs);
  int short_simple = 0;
  for (const WeightVec& a : rs.simple_roots)
    if (rs.is_short_root(a)) ++short_simple;
  const long closed = reps::quasi_minuscule_dimension(t.first, t.second);
  const bool ok = qm.highest_weight == rs.highest_short_root &&
                  qm.nonzero_weights.size() == rs.short_roots.size() &&
                  qm.zero_multiplicity == short_simple &&
                  qm.dimension ==
                      static_cast<long>(qm.nonzero_weights.size()) + qm.zero_multiplicity &&
                  qm.dimension == closed;
  ordered_json w;
  w["highest_weight"] = rootsys::to_string(qm.highest_weight);
  w["nonzero_weights"] = qm.nonzero_weights.size();
  w["zero_multiplicity"] = qm.zero_multiplicity;
  w["dimension"] = qm.dimension;
  w["closed_form_dimension"] = closed;
  return ok ? passed(w) : failed(w);
}

RunOut run_weyl_order(const TypeId& t, const Options& opt) {
  RootSystem rs = rootsys::build_root_system(t.first, t.second);
  const long closed = weyl::weyl_order(t.first, t.second);
  const long counted = weyl::weyl_order_by_orbit(rs, opt.orbit_cap);
  ordered_json w;
  ordered_json deg = ordered_json::array();
  for (int d : weyl::weyl_degrees(t.first, t.second)) deg.push_back(d);
  w["degrees"] = deg;
  w["degree_product"] = closed;
  w["enumerated_order"] = counted;
  return closed == counted ? passed(w) : failed(w);
}

// ---------------------------------------------------------- transitivity

RunOut run_short_triples(const TypeId& t, const Options& opt) {
  RootSystem rs = rootsys::build_root_system(t.first, t.second);
  auto triples = rootsys::zero_sum_triples(rs.short_roots);
  std::vector<std::vector<WeightVec>> family;
  family.reserve(triples.size());
  for (const auto& tr : triples) family.push_back({tr[0], tr[1], tr[2]});
  auto gens = weyl::simple_reflections(rs);
  weyl::TransitivityReport rep = weyl::check_transitivity(gens, family, 0, opt.orbit_cap);
  ordered_json w;
  w["triples"] = rep.family_size;
  w["orbit_size"] = rep.orbit_size;
  if (rep.vacuous) return vacuous(w);
  return rep.transitive ? passed(w) : failed(w);
}

RunOut run_e6_lines(const TypeId&, const Options& opt) {
  RootSystem rs = rootsys::build_root_system(Family::E, 6);
  auto gens = weyl::simple_reflections(rs);
  const WeightVec varpi = WeightVec::fundamental(6, 0);
  weyl::OrbitResult orb = weyl::weight_orbit(gens, varpi, opt.orbit_cap);
  std::vector<WeightVec> weights;
  weights.reserve(orb.size());
  for (int k = 0; k < static_cast<int>(orb.size()); ++k) weights.push_back(orb.tuple_at(k)[0]);
  std::set<std::vector<long>> in_orbit;
  for (const WeightVec& mu : weights) in_orbit.insert(mu.c);
  // Weights whose line through varpi lies on the cubic surface: mu with
  // -varpi - mu again a weight of the 27.
  std::vector<WeightVec> meeting;
  for (const WeightVec& mu : weights) {
    if (mu == varpi) continue;
    WeightVec third = WeightVec::zero(6) - varpi - mu;
    if (in_orbit.count(third.c)) meeting.push_back(mu);
  }
  weyl::StabilizerData stab = weyl::stabilizer_of_weight(rs, varpi);
  std::vector<std::vector<WeightVec>> family;
  for (const WeightVec& mu : meeting) family.push_back({mu});
  weyl::TransitivityReport rep =
      weyl::check_transitivity(stab.generators, family, 0, opt.orbit_cap);
  ordered_json w;
  w["orbit_size"] = orb.size();
  w["meeting_weights"] = meeting.size();
  w["stabilizer_order"] = stab.order;
  w["stabilizer_orbit_size"] = rep.orbit_size;
  const bool ok = orb.size() == 27 && meeting.size() == 10 && rep.transitive;
  return ok ? passed(w) : failed(w);
}

std::vector<WeightVec> e7_weight_orbit(const RootSystem& rs,
                                       const std::vector<weyl::WeylElement>& gens,
                                       std::size_t cap) {
  reps::MinusculeCensus census = reps::minuscule_census(rs);
  const WeightVec varpi = WeightVec::fundamental(7, census.fundamental_indices.at(0));
  weyl::OrbitResult orb = weyl::weight_orbit(gens, varpi, cap);
  std::vector<WeightVec> weights;
  weights.reserve(orb.size());
  for (int k = 0; k < static_cast<int>(orb.size()); ++k) weights.push_back(orb.tuple_at(k)[0]);
  return weights;
}

RunOut run_e7_quadruples(const TypeId&, const Options& opt) {
  RootSystem rs = rootsys::build_root_system(Family::E, 7);
  auto gens = weyl::simple_reflections(rs);
  std::vector<WeightVec> weights = e7_weight_orbit(rs, gens, opt.orbit_cap);
  auto quads = correspond::e7_proper_quadruples(rs, weights);
  std::vector<std::vector<WeightVec>> marked;
  marked.reserve(quads.size() * 4);
  for (const auto& q : quads)
    for (int m = 0; m < 4; ++m) {
      std::vector<WeightVec> tup{q[static_cast<std::size_t>(m)]};
      for (int i = 0; i < 4; ++i)
        if (i != m) tup.push_back(q[static_cast<std::size_t>(i)]);
      marked.push_back(std::move(tup));
    }
  weyl::TransitivityReport rep = weyl::check_transitivity(gens, marked, 1, opt.orbit_cap);
  ordered_json w;
  w["weights"] = weights.size();
  w["proper_quadruples"] = quads.size();
  w["marked_pairs"] = rep.family_size;
  w["orbit_size"] = rep.orbit_size;
  const bool ok = weights.size() == 56 && quads.size() == 630 && rep.family_size == 2520 &&
                  rep.transitive;
  return ok ? passed(w) : failed(w);
}

RunOut run_e7_stabilizer(const TypeId&, const Options& opt) {
  RootSystem rs = rootsys::build_root_system(Family::E, 7);
  auto gens = weyl::simple_reflections(rs);
  std::vector<WeightVec> weights = e7_weight_orbit(rs, gens, opt.orbit_cap);
  reps::MinusculeCensus census = reps::minuscule_census(rs);
  const WeightVec varpi = WeightVec::fundamental(7, census.fundamental_indices.at(0));
  auto quads = correspond::e7_proper_quadruples(rs, weights);
  std::vector<WeightVec> base;
  for (const auto& q : quads) {
    auto it = std::find(q.begin(), q.end(), varpi);
    if (it == q.end()) continue;
    base = {varpi};
    for (const WeightVec& mu : q)
      if (!(mu == varpi)) base.push_back(mu);
    break;
  }
  ordered_json w;
  if (base.size() != 4) {
    w["error"] = "no proper quadruple through the chosen weight";
    return failed(w);
  }
  w["quadruple"] = weight_list(base);

  // Stabilizer of the marked weight itself, for context.
  weyl::StabilizerData stab = weyl::stabilizer_of_weight(rs, varpi);
  w["marked_weight_stabilizer_order"] = stab.order;
  w["marked_weight_annihilated_roots"] = stab.annihilated_roots.size();

  std::vector<WeightVec> rot_target{base[0], base[2], base[3], base[1]};
  std::vector<WeightVec> swap_target{base[1], base[0], base[2], base[3]};
  auto rot = weyl::transporter(gens, base, rot_target, weyl::kOrderedTuple, opt.orbit_cap);
  auto swp = weyl::transporter(gens, base, swap_target, 1, opt.orbit_cap);
  if (!rot || !swp) {
    w["error"] = "transporter not found";
    return failed(w);
  }
  auto perm_of = [&](const weyl::WeylElement& g) -> std::optional<std::array<int, 4>> {
    std::array<int, 4> p{};
    std::array<bool, 4> hit{};
    for (int i = 0; i < 4; ++i) {
      WeightVec img = g.apply(base[static_cast<std::size_t>(i)]);
      auto it = std::find(base.begin(), base.end(), img);
      if (it == base.end()) return std::nullopt;
      int j = static_cast<int>(it - base.begin());
      if (hit[static_cast<std::size_t>(j)]) return std::nullopt;
      hit[static_cast<std::size_t>(j)] = true;
      p[static_cast<std::size_t>(i)] = j;
    }
    return p;
  };
  auto rp = perm_of(*rot);
  auto sp = perm_of(*swp);
  if (!rp || !sp) {
    w["error"] = "transporter does not permute the quadruple";
    return failed(w);
  }
  w["rotation_permutation"] = *rp;
  w["mark_swap_permutation"] = *sp;
  // rot fixes the mark and leaves no unmarked weight in place; swp moves it.
  const bool rot_ok =
      (*rp)[0] == 0 && (*rp)[1] != 1 && (*rp)[2] != 2 && (*rp)[3] != 3;
  const bool swp_ok = (*sp)[0] != 0;

  // Character lattice of the common kernel: Z^4 on the four weights modulo
  // the diagonal. Basis e1, e2, e3 with e4 = -e1 - e2 - e3.
  auto quotient_action = [](const std::array<int, 4>& p) {
    intlat::IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) {
      int img = p[static_cast<std::size_t>(i)];
      if (img < 3)
        m.at(img, i) += 1;
      else
        for (int row = 0; row < 3; ++row) m.at(row, i) -= 1;
    }
    return m;
  };
  std::vector<intlat::IntMatrix> action{quotient_action(*rp), quotient_action(*sp)};
  intlat::Sublattice inv = intlat::invariant_sublattice(action, 3);
  w["character_lattice_rank"] = 3;
  w["invariant_rank"] = inv.rank();
  const bool ok = rot_ok && swp_ok && inv.rank() == 0;
  return ok ? passed(w) : failed(w);
}

// --------------------------------------------------------- correspondence

RunOut run_kernel_generation(const TypeId& t, const Options&) {
  RootSystem rs = rootsys::build_root_system(t.first, t.second);
  correspond::RelationSet rels = correspond::build_relation_set(rs);
  correspond::KernelGenerationReport rep = correspond::verify_kernel_generation(rs);
  ordered_json w;
  w["short_roots"] = rels.short_roots.size();
  w["type_i_relations"] = rels.type_i.size();
  w["type_ii_relations"] = rels.type_ii.size();
  w["kernel_rank"] = rep.kernel_rank;
  w["generated_rank"] = rep.generated_rank;
  w["index"] = rep.index.get_str();
  return rep.pass ? passed(w) : failed(w);
}

RunOut run_torus_recovery(const TypeId& t, const Options& opt) {
  RootSystem rs = rootsys::build_root_system(t.first, t.second);
  correspond::RelationSet rels = correspond::build_relation_set(rs);
  const int trials = trials_or(opt, 100);
  Rng rng(opt.seed);
  ordered_json w;
  w["trials"] = trials;
  for (int k = 0; k < trials; ++k) {
    correspond::TorusPoint x = correspond::random_nodal_point(rs, rng);
    correspond::FiberFunction f = correspond::character_fiber_function(rs, x);
    correspond::TorusSolve solve = correspond::solve_torus_point(rs, f);
    bool ok = solve.ok;
    if (ok)
      for (int j = 0; j < rs.rank(); ++j)
        ok = ok && solve.simple_values[static_cast<std::size_t>(j)] ==
                       correspond::evaluate(x, rs.simple_roots[static_cast<std::size_t>(j)]);
    if (!ok) {
      w["failed_trial"] = k;
      if (solve.violation) w["violation_kind"] = solve.violation->kind;
      if (solve.extension_failure)
        w["extension_failure"] = rootsys::to_string(*solve.extension_failure);
      return failed(w);
    }
  }
  // A corrupted fiber must be rejected with a named broken relation.
  correspond::TorusPoint x = correspond::random_nodal_point(rs, rng);
  correspond::FiberFunction f = correspond::character_fiber_function(rs, x);
  const WeightVec& bad = rels.short_roots.at(0);
  f.values[bad] *= 7;
  auto witness = correspond::find_violated_relation(f, rels);
  correspond::TorusSolve solve = correspond::solve_torus_point(rs, f);
  const bool rejected = witness.has_value() && !solve.ok && solve.violation.has_value();
  w["round_trips"] = trials;
  w["corrupted_weight"] = rootsys::to_string(bad);
  w["corrupted_rejected"] = rejected;
  if (witness) {
    w["violated_relation"] = ordered_json{{"kind", witness->kind},
                                          {"weights", weight_list(witness->weights)},
                                          {"product", ratmat::Rat(witness->product).get_str()}};
  }
  return rejected ? passed(w) : failed(w);
}

RunOut run_restriction(const TypeId& t, const Options&) {
  RootSystem rs = rootsys::build_root_system(t.first, t.second);
  const WeightVec varpi = rs.highest_short_root;
  weyl::StabilizerData stab = weyl::stabilizer_of_weight(rs, varpi);
  restriction::RestrictionReport rep =
      restriction::restriction_invariants_sequence(rs, varpi, stab.generators);
  ordered_json w;
  w["weight"] = rootsys::to_string(varpi);
  w["kernel_generator"] = rootsys::to_string(rep.kernel_generator);
  w["kernel_is_weight_line"] = rep.kernel_is_weight_line;
  w["surjective"] = rep.surjective;
  w["torsion_order"] = rep.torsion_order;
  w["ambient_invariant_rank"] = rep.ambient_invariant_rank;
  w["quotient_invariant_rank"] = rep.quotient_invariant_rank;
  return rep.exact() ? passed(w) : failed(w);
}

RunOut run_subscheme(const TypeId& t, const Options& opt) {
  RootSystem rs = rootsys::build_root_system(t.first, t.second);
  auto triples = rootsys::zero_sum_triples(rs.short_roots);
  ordered_json w;
  w["triples"] = triples.size();
  if (triples.empty()) return vacuous(w);
  const int trials = trials_or(opt, 100);
  Rng rng(opt.seed);
  const auto& tr = triples.front();
  w["checked_triple"] = weight_list({tr[0], tr[1], tr[2]});
  w["trials"] = trials;
  const bool ok = correspond::subscheme_vanishing_check(rs, tr, trials, rng);
  return ok ? passed(w) : failed(w);
}

// ----------------------------------------------------------------- slices

RunOut run_kostant_slice(const TypeId& t, const Options& opt) {
  sections::KostantSlice s =
      sections::build_kostant_slice(t.first, t.second, opt.max_matrix_size);
  sections::SliceStructure st = sections::check_slice_structure(s);
  Rng rng(opt.seed);
  sections::SliceCheck chk = sections::verify_kostant_slice(s, trials_or(opt, 50), rng);
  ordered_json w;
  w["algebra"] = st.algebra;
  w["matrix_size"] = s.n;
  w["dimension"] = st.dim_algebra;
  ordered_json exps = ordered_json::array();
  for (int e : s.exponents) exps.push_back(e);
  w["exponents"] = exps;
  w["membership"] = st.membership;
  w["sl2_relations"] = st.sl2_relations;
  w["complement"] = st.complement;
  w["grading_matches_degrees"] = st.grading_matches_degrees;
  w["samples"] = chk.samples;
  w["regular_at_samples"] = chk.regular_at_samples;
  w["odd_coefficients_vanish"] = chk.odd_coefficients_vanish;
  w["jacobian_nonsingular"] = chk.jacobian_nonsingular;
  w["jacobian_fd_consistent"] = chk.jacobian_fd_consistent;
  w["roundtrip_exact"] = chk.roundtrip_exact;
  if (!chk.witness.empty()) w["failure"] = chk.witness;
  return st.pass() && chk.pass() ? passed(w) : failed(w);
}

RunOut run_steinberg_slice(const TypeId& t, const Options& opt) {
  const int n = t.second + 1;
  sections::SteinbergSlice s = sections::build_steinberg_slice(n, opt.max_matrix_size);
  Rng rng(opt.seed);
  sections::GroupSliceCheck chk = sections::verify_steinberg_slice(s, trials_or(opt, 100), rng);
  ordered_json w;
  w["n"] = n;
  w["samples"] = chk.samples;
  w["det_one"] = chk.det_one;
  w["charpoly_roundtrip"] = chk.charpoly_roundtrip;
  w["commutant_dimension"] = chk.commutant_dimension;
  w["cyclic_vector"] = chk.cyclic_vector;
  if (!chk.witness.empty()) w["failure"] = chk.witness;
  return chk.pass() ? passed(w) : failed(w);
}

RunOut run_link(const TypeId& t, const Options&) {
  const int n = t.second + 1;
  sections::LinkReport rep = sections::kostant_steinberg_link(n);
  ordered_json w;
  w["n"] = n;
  w["log_nilpotent"] = rep.log_nilpotent;
  w["log_principal"] = rep.log_principal;
  w["exp_recovers"] = rep.exp_recovers;
  w["tangent_traceless"] = rep.tangent_traceless;
  w["complement"] = rep.complement;
  return rep.pass() ? passed(w) : failed(w);
}

// ------------------------------------------------------------- dispatch

struct LemmaSpec {
  const char* id;
  RunOut (*run)(const TypeId&, const Options&);
  std::vector<TypeId> (*defaults)(const Options&);
  bool (*applies)(const TypeId&, const Options&);
};

bool in_defaults(const char* id, const TypeId& t, const Options& opt);

const std::vector<LemmaSpec>& specs() {
  static const std::vector<LemmaSpec> table = {
      {"e6-line-transitivity", run_e6_lines,
       [](const Options&) { return std::vector<TypeId>{{Family::E, 6}}; },
       [](const TypeId& t, const Options&) { return t == TypeId{Family::E, 6}; }},
      {"e7-quadruple-transitivity", run_e7_quadruples,
       [](const Options&) { return std::vector<TypeId>{{Family::E, 7}}; },
       [](const TypeId& t, const Options&) { return t == TypeId{Family::E, 7}; }},
      {"e7-stabilizer-invariants", run_e7_stabilizer,
       [](const Options&) { return std::vector<TypeId>{{Family::E, 7}}; },
       [](const TypeId& t, const Options&) { return t == TypeId{Family::E, 7}; }},
      {"kernel-generation", run_kernel_generation,
       [](const Options& opt) {
         std::vector<TypeId> out = types_rank_le(6);
         out.push_back({Family::E, 7});
         if (opt.include_e8) out.push_back({Family::E, 8});
         return out;
       },
       [](const TypeId& t, const Options& opt) {
         return in_defaults("kernel-generation", t, opt);
       }},
      {"kostant-slice", run_kostant_slice,
       [](const Options&) {
         std::vector<TypeId> out = a_range(1, 5);
         out.insert(out.end(), {{Family::B, 2}, {Family::B, 3}, {Family::C, 2},
                                {Family::C, 3}, {Family::D, 4}});
         return out;
       },
       [](const TypeId& t, const Options& opt) {
         return in_defaults("kostant-slice", t, opt) || t == TypeId{Family::D, 3};
       }},
      {"kostant-steinberg-link", run_link,
       [](const Options&) { return a_range(1, 3); },
       [](const TypeId& t, const Options&) {
         return t.first == Family::A && t.second <= 7;
       }},
      {"minuscule-census", run_minuscule_census,
       [](const Options&) { return types_rank_le(8); },
       [](const TypeId& t, const Options& opt) {
         return in_defaults("minuscule-census", t, opt);
       }},
      {"quasi-minuscule-data", run_quasi_minuscule,
       [](const Options&) { return types_rank_le(8); },
       [](const TypeId& t, const Options& opt) {
         return in_defaults("quasi-minuscule-data", t, opt);
       }},
      {"restriction-sequence", run_restriction,
       [](const Options&) {
         return std::vector<TypeId>{{Family::A, 2}, {Family::B, 2}, {Family::B, 3},
                                    {Family::C, 3}, {Family::D, 4}, {Family::G, 2}};
       },
       [](const TypeId& t, const Options& opt) {
         return in_defaults("restriction-sequence", t, opt);
       }},
      {"short-triple-transitivity", run_short_triples,
       [](const Options&) {
         std::vector<TypeId> out = a_range(1, 5);
         out.insert(out.end(),
                    {{Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 2},
                     {Family::C, 3}, {Family::C, 4}, {Family::D, 4}, {Family::E, 6},
                     {Family::E, 7}, {Family::F, 4}, {Family::G, 2}});
         return out;
       },
       [](const TypeId& t, const Options&) { return t.second <= 8; }},
      {"steinberg-slice", run_steinberg_slice,
       [](const Options&) { return a_range(1, 5); },
       [](const TypeId& t, const Options&) {
         return t.first == Family::A && t.second <= 7;
       }},
      {"subscheme-vanishing", run_subscheme,
       [](const Options&) {
         return std::vector<TypeId>{{Family::A, 2}, {Family::C, 3}, {Family::D, 4},
                                    {Family::F, 4}, {Family::G, 2}};
       },
       [](const TypeId& t, const Options&) { return t.second <= 6; }},
      {"torus-recovery", run_torus_recovery,
       [](const Options&) { return types_rank_le(6); },
       [](const TypeId& t, const Options& opt) {
         return in_defaults("torus-recovery", t, opt);
       }},
      {"weyl-order", run_weyl_order,
       [](const Options&) { return types_rank_le(6); },
       [](const TypeId& t, const Options& opt) { return in_defaults("weyl-order", t, opt); }},
  };
  return table;
}

const LemmaSpec& spec_for(const std::string& id) {
  for (const LemmaSpec& s : specs())
    if (id == s.id) return s;
  throw UsageError("unknown lemma: " + id);
}

bool in_defaults(const char* id, const TypeId& t, const Options& opt) {
  const auto types = spec_for(id).defaults(opt);
  return std::find(types.begin(), types.end(), t) != types.end();
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const LemmaSpec& s : specs()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

bool is_lemma_id(const std::string& id) {
  const auto& ids = lemma_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string type_label(const TypeId& t) {
  return std::string(1, static_cast<char>(t.first)) + std::to_string(t.second);
}

std::vector<TypeId> default_types(const std::string& lemma, const Options& opt) {
  return spec_for(lemma).defaults(opt);
}

bool lemma_applies(const std::string& lemma, const TypeId& t, const Options& opt) {
  rootsys::cartan_datum(t.first, t.second);  // validates the type itself
  return spec_for(lemma).applies(t, opt);
}

Verdict run_lemma(const std::string& lemma, const TypeId& t, const Options& opt) {
  const LemmaSpec& s = spec_for(lemma);
  rootsys::cartan_datum(t.first, t.second);
  if (!s.applies(t, opt)) {
    if (lemma == "kernel-generation" && t == TypeId{Family::E, 8})
      throw UsageError("type E8 for kernel-generation sits behind the e8 opt-in flag");
    throw UsageError("lemma " + lemma + " does not cover type " + type_label(t));
  }
  const auto start = std::chrono::steady_clock::now();
  RunOut out = s.run(t, opt);
  const auto stop = std::chrono::steady_clock::now();
  Verdict v;
  v.lemma = lemma;
  v.type = type_label(t);
  v.status = std::move(out.status);
  v.witness = std::move(out.witness);
  v.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return v;
}

std::vector<Verdict> run_selection(const std::vector<std::string>& lemma_sel,
                                   const std::vector<TypeId>& type_sel, const Options& opt,
                                   const VerdictSink& sink) {
  std::vector<std::string> ids = lemma_sel.empty() ? lemma_ids() : lemma_sel;
  for (const std::string& id : ids)
    if (!is_lemma_id(id)) throw UsageError("unknown lemma: " + id);
  const bool explicit_lemma = !lemma_sel.empty();
  std::vector<std::pair<std::string, TypeId>> cells;
  for (const std::string& id : ids) {
    if (type_sel.empty()) {
      for (const TypeId& t : default_types(id, opt)) cells.push_back({id, t});
    } else {
      for (const TypeId& t : type_sel) {
        if (lemma_applies(id, t, opt)) {
          cells.push_back({id, t});
        } else if (explicit_lemma) {
          if (id == "kernel-generation" && t == TypeId{Family::E, 8})
            throw UsageError("type E8 for kernel-generation sits behind the e8 opt-in flag");
          throw UsageError("lemma " + id + " does not cover type " + type_label(t));
        }
      }
    }
  }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return type_label(a.second) < type_label(b.second);
  });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<Verdict> out;
  out.reserve(cells.size());
  for (const auto& [id, t] : cells) {
    Verdict v = run_lemma(id, t, opt);
    if (sink) sink(v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::string> evidence_lemmas(const TypeId& t, const Options& opt) {
  static const char* const pool[] = {
      "e6-line-transitivity",     "e7-quadruple-transitivity", "e7-stabilizer-invariants",
      "short-triple-transitivity", "kernel-generation",        "torus-recovery",
      "restriction-sequence"};
  std::vector<std::string> out;
  for (const char* id : pool)
    if (in_defaults(id, t, opt)) out.push_back(id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace adjq::lemmas
