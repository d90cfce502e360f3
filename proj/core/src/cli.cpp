#include "adjq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adjq/errors.hpp"
#include "adjq/registry.hpp"
#include "adjq/reps.hpp"
#include "adjq/rootsys.hpp"
#include "adjq/sections.hpp"
#include "adjq/weyl.hpp"

namespace adjq::cli {

namespace {

using lemmas::TypeId;
using nlohmann::ordered_json;
using rootsys::Family;

const char* kCaveat =
    "Torsion and free rank are assembled from verified finite data (center order, "
    "curve class, lattice verdicts). The companion vanishing statement for the first "
    "cohomology has no finite computational shadow and is NOT verified by this report.";

lemmas::Options to_options(const RunConfig& c) {
  lemmas::Options o;
  o.seed = c.seed;
  o.trials = c.trials;
  o.include_e8 = c.include_e8;
  o.orbit_cap = c.orbit_cap;
  o.max_matrix_size = c.max_matrix_size;
  return o;
}

std::string label(const TypeId& t) { return lemmas::type_label(t); }

void sort_types(std::vector<TypeId>& types) {
  std::sort(types.begin(), types.end(),
            [](const TypeId& a, const TypeId& b) { return label(a) < label(b); });
  types.erase(std::unique(types.begin(), types.end()), types.end());
}

// Every supported type up to the rank cutoff; the census domain is exactly
// that list.
std::vector<TypeId> all_types(int max_rank, const lemmas::Options& opt) {
  std::vector<TypeId> out;
  for (const TypeId& t : lemmas::default_types("minuscule-census", opt))
    if (t.second <= max_rank) out.push_back(t);
  sort_types(out);
  return out;
}

ordered_json mat_json(const ratmat::RatMat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string mat_text(const ordered_json& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? " " : "") << row[j].get<std::string>();
    os << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------- commands

int run_classify(const RunConfig& cfg, ordered_json& doc) {
  const lemmas::Options opt = to_options(cfg);
  std::vector<TypeId> types = cfg.types;
  if (types.empty())
    types = all_types(cfg.max_rank, opt);
  else
    sort_types(types);
  ordered_json rows = ordered_json::array();
  for (const TypeId& t : types) {
    rootsys::RootSystem rs = rootsys::build_root_system(t.first, t.second);
    reps::MinusculeCensus census = reps::minuscule_census(rs);
    auto gens = weyl::simple_reflections(rs);
    ordered_json row;
    row["type"] = label(t);
    row["center_order"] = census.center_order;
    row["minuscule_count"] = census.fundamental_indices.size();
    ordered_json idx = ordered_json::array();
    ordered_json dims = ordered_json::array();
    for (int i : census.fundamental_indices) {
      idx.push_back(i + 1);
      weyl::OrbitResult orb = weyl::weight_orbit(
          gens, rootsys::WeightVec::fundamental(rs.rank(), i), cfg.orbit_cap);
      dims.push_back(orb.size());
    }
    row["fundamental_weights"] = idx;
    row["dimensions"] = dims;
    rows.push_back(std::move(row));
  }
  doc["command"] = "classify";
  doc["rows"] = std::move(rows);
  return 0;
}

int run_verify(const RunConfig& cfg, ordered_json& doc, std::ostream& progress) {
  if (cfg.list_lemmas) {
    ordered_json regs = ordered_json::array();
    for (const registry::LemmaInfo& info : registry::all_lemmas()) {
      ordered_json r;
      r["id"] = info.id;
      r["statement"] = info.statement;
      r["domain"] = info.domain;
      regs.push_back(std::move(r));
    }
    doc["command"] = "verify";
    doc["registry"] = std::move(regs);
    return 0;
  }
  const lemmas::Options opt = to_options(cfg);
  auto sink = [&](const lemmas::Verdict& v) {
    progress << "[" << v.status << "] " << v.lemma << " " << v.type;
    if (cfg.timings) progress << " (" << v.runtime_ms << " ms)";
    progress << "\n";
  };
  std::vector<lemmas::Verdict> verdicts =
      lemmas::run_selection(cfg.lemma_sel, cfg.types, opt, sink);
  ordered_json arr = ordered_json::array();
  long pass = 0, fail = 0, vac = 0;
  for (const lemmas::Verdict& v : verdicts) {
    ordered_json j;
    j["lemma"] = v.lemma;
    j["type"] = v.type;
    j["status"] = v.status;
    if (cfg.timings) j["runtime_ms"] = v.runtime_ms;
    j["witness"] = v.witness;
    arr.push_back(std::move(j));
    (v.status == "pass" ? pass : v.status == "fail" ? fail : vac) += 1;
  }
  doc["command"] = "verify";
  doc["seed"] = cfg.seed;
  doc["verdicts"] = std::move(arr);
  doc["summary"] =
      ordered_json{{"total", verdicts.size()}, {"pass", pass}, {"fail", fail}, {"vacuous", vac}};
  return fail > 0 ? 1 : 0;
}

int run_section(const RunConfig& cfg, ordered_json& doc) {
  if (cfg.algebra.empty()) throw UsageError("section needs --algebra");
  const TypeId t = parse_type_arg(cfg.algebra);
  doc["command"] = "section";
  if (cfg.slice == "kostant") {
    sections::KostantSlice s =
        sections::build_kostant_slice(t.first, t.second, cfg.max_matrix_size);
    sections::SliceStructure st = sections::check_slice_structure(s);
    Rng rng(cfg.seed);
    sections::SliceCheck chk = sections::verify_kostant_slice(s, cfg.trials.value_or(50), rng);
    doc["slice"] = "kostant";
    doc["algebra"] = st.algebra;
    doc["type"] = label(t);
    doc["matrix_size"] = s.n;
    ordered_json exps = ordered_json::array();
    for (int e : s.exponents) exps.push_back(e);
    doc["exponents"] = std::move(exps);
    if (s.kind != sections::AlgebraKind::sl) doc["form"] = mat_json(s.j);
    doc["x"] = mat_json(s.x);
    doc["h"] = mat_json(s.h);
    doc["y"] = mat_json(s.y);
    ordered_json basis = ordered_json::array();
    for (const ratmat::RatMat& m : s.l_basis) basis.push_back(mat_json(m));
    doc["complement_basis"] = std::move(basis);
    doc["structure"] = ordered_json{{"membership", st.membership},
                                    {"sl2_relations", st.sl2_relations},
                                    {"complement", st.complement},
                                    {"grading_matches_degrees", st.grading_matches_degrees}};
    ordered_json ver;
    ver["seed"] = cfg.seed;
    ver["samples"] = chk.samples;
    ver["regular_at_samples"] = chk.regular_at_samples;
    ver["odd_coefficients_vanish"] = chk.odd_coefficients_vanish;
    ver["jacobian_nonsingular"] = chk.jacobian_nonsingular;
    ver["jacobian_fd_consistent"] = chk.jacobian_fd_consistent;
    ver["roundtrip_exact"] = chk.roundtrip_exact;
    if (!chk.witness.empty()) ver["failure"] = chk.witness;
    doc["verification"] = std::move(ver);
    return st.pass() && chk.pass() ? 0 : 1;
  }
  if (t.first != Family::A)
    throw UsageError("the " + cfg.slice + " slice lives in SL(n): pass an sl algebra");
  const int n = t.second + 1;
  if (cfg.slice == "steinberg") {
    sections::SteinbergSlice s = sections::build_steinberg_slice(n, cfg.max_matrix_size);
    Rng rng(cfg.seed);
    sections::GroupSliceCheck chk =
        sections::verify_steinberg_slice(s, cfg.trials.value_or(100), rng);
    doc["slice"] = "steinberg";
    doc["n"] = n;
    doc["base_point"] = mat_json(s.at(std::vector<ratmat::Rat>(n - 1, 0)));
    ordered_json tangent = ordered_json::array();
    for (const ratmat::RatMat& m : s.derivative()) tangent.push_back(mat_json(m));
    doc["tangent_basis"] = std::move(tangent);
    ordered_json ver;
    ver["seed"] = cfg.seed;
    ver["samples"] = chk.samples;
    ver["det_one"] = chk.det_one;
    ver["charpoly_roundtrip"] = chk.charpoly_roundtrip;
    ver["commutant_dimension"] = chk.commutant_dimension;
    ver["cyclic_vector"] = chk.cyclic_vector;
    if (!chk.witness.empty()) ver["failure"] = chk.witness;
    doc["verification"] = std::move(ver);
    return chk.pass() ? 0 : 1;
  }
  if (cfg.slice == "link") {
    sections::LinkReport rep = sections::kostant_steinberg_link(n);
    doc["slice"] = "link";
    doc["n"] = n;
    doc["log_nilpotent"] = rep.log_nilpotent;
    doc["log_principal"] = rep.log_principal;
    doc["exp_recovers"] = rep.exp_recovers;
    doc["tangent_traceless"] = rep.tangent_traceless;
    doc["complement"] = rep.complement;
    return rep.pass() ? 0 : 1;
  }
  throw UsageError("unknown slice kind: " + cfg.slice);
}

int run_report(const RunConfig& cfg, ordered_json& doc, std::ostream& progress) {
  if (cfg.curve != "both" && cfg.curve != "cuspidal" && cfg.curve != "nodal")
    throw UsageError("unknown curve kind: " + cfg.curve);
  const lemmas::Options opt = to_options(cfg);
  std::vector<TypeId> types = cfg.types;
  if (types.empty())
    types = all_types(cfg.max_rank, opt);
  else
    sort_types(types);
  ordered_json rows = ordered_json::array();
  bool all_ok = true;
  for (const TypeId& t : types) {
    const long center = rootsys::center_order(t.first, t.second);
    ordered_json evidence = ordered_json::array();
    bool row_ok = true;
    for (const std::string& id : lemmas::evidence_lemmas(t, opt)) {
      lemmas::Verdict v = lemmas::run_lemma(id, t, opt);
      progress << "[" << v.status << "] " << v.lemma << " " << v.type << "\n";
      row_ok = row_ok && v.ok();
      evidence.push_back(ordered_json{{"lemma", v.lemma}, {"status", v.status}});
    }
    ordered_json row;
    row["type"] = label(t);
    row["center_order"] = center;
    if (cfg.curve != "nodal")
      row["cuspidal"] = ordered_json{{"torsion_order", center}, {"free_rank", 0}};
    if (cfg.curve != "cuspidal")
      row["nodal"] = ordered_json{{"torsion_order", center}, {"free_rank", 1}};
    row["evidence"] = std::move(evidence);
    row["supported"] = row_ok;
    all_ok = all_ok && row_ok;
    rows.push_back(std::move(row));
  }
  doc["command"] = "report";
  doc["seed"] = cfg.seed;
  doc["rows"] = std::move(rows);
  doc["caveat"] = kCaveat;
  return all_ok ? 0 : 1;
}

// ------------------------------------------------------------- markdown

std::string json_cell(const ordered_json& j) { return "`" + j.dump() + "`"; }

std::string markdown_of(const ordered_json& doc) {
  std::ostringstream os;
  const std::string cmd = doc.at("command").get<std::string>();
  if (cmd == "classify") {
    os << "# Minuscule fundamental weights\n\n"
       << "| type | center order | count | fundamental weights | dimensions |\n"
       << "|---|---|---|---|---|\n";
    for (const auto& row : doc.at("rows"))
      os << "| " << row.at("type").get<std::string>() << " | " << row.at("center_order")
         << " | " << row.at("minuscule_count") << " | " << row.at("fundamental_weights").dump()
         << " | " << row.at("dimensions").dump() << " |\n";
    return os.str();
  }
  if (cmd == "verify") {
    if (doc.contains("registry")) {
      os << "# Lemma registry\n\n| id | statement | domain |\n|---|---|---|\n";
      for (const auto& r : doc.at("registry"))
        os << "| " << r.at("id").get<std::string>() << " | " << r.at("statement").get<std::string>()
           << " | " << r.at("domain").get<std::string>() << " |\n";
      return os.str();
    }
    os << "# Verdicts\n\nseed: " << doc.at("seed") << "\n\n"
       << "| lemma | type | status | witness |\n|---|---|---|---|\n";
    for (const auto& v : doc.at("verdicts"))
      os << "| " << v.at("lemma").get<std::string>() << " | " << v.at("type").get<std::string>()
         << " | " << v.at("status").get<std::string>() << " | " << json_cell(v.at("witness"))
         << " |\n";
    const auto& s = doc.at("summary");
    os << "\n" << s.at("total") << " verdicts: " << s.at("pass") << " pass, " << s.at("fail")
       << " fail, " << s.at("vacuous") << " vacuous.\n";
    return os.str();
  }
  if (cmd == "section") {
    const std::string slice = doc.at("slice").get<std::string>();
    if (slice == "kostant") {
      os << "# Slice through the principal nilpotent in " << doc.at("algebra").get<std::string>()
         << "\n\nexponents: " << doc.at("exponents").dump() << "\n";
      for (const char* key : {"x", "h", "y"})
        os << "\n" << key << ":\n\n```\n" << mat_text(doc.at(key)) << "```\n";
      os << "\ncomplement basis:\n";
      for (const auto& m : doc.at("complement_basis")) os << "\n```\n" << mat_text(m) << "```\n";
      os << "\nstructure: " << json_cell(doc.at("structure"))
         << "\n\nverification: " << json_cell(doc.at("verification")) << "\n";
      return os.str();
    }
    if (slice == "steinberg") {
      os << "# Companion-matrix slice in SL(" << doc.at("n") << ")\n\nbase point:\n\n```\n"
         << mat_text(doc.at("base_point")) << "```\n\ntangent basis:\n";
      for (const auto& m : doc.at("tangent_basis")) os << "\n```\n" << mat_text(m) << "```\n";
      os << "\nverification: " << json_cell(doc.at("verification")) << "\n";
      return os.str();
    }
    os << "# Slice link at the identity class, n = " << doc.at("n") << "\n\n";
    for (const char* key :
         {"log_nilpotent", "log_principal", "exp_recovers", "tangent_traceless", "complement"})
      os << "- " << key << ": " << doc.at(key) << "\n";
    return os.str();
  }
  // report
  bool cusp = false, nodal = false;
  for (const auto& row : doc.at("rows")) {
    cusp = cusp || row.contains("cuspidal");
    nodal = nodal || row.contains("nodal");
  }
  os << "# Global sections of the centralizer band\n\n|type | center order |";
  if (cusp) os << " cuspidal |";
  if (nodal) os << " nodal |";
  os << " evidence | supported |\n|---|---|";
  if (cusp) os << "---|";
  if (nodal) os << "---|";
  os << "---|---|\n";
  auto h0 = [](const ordered_json& c) {
    std::ostringstream cell;
    cell << "torsion " << c.at("torsion_order") << ", free rank " << c.at("free_rank");
    return cell.str();
  };
  for (const auto& row : doc.at("rows")) {
    os << "| " << row.at("type").get<std::string>() << " | " << row.at("center_order") << " |";
    if (cusp) os << " " << h0(row.at("cuspidal")) << " |";
    if (nodal) os << " " << h0(row.at("nodal")) << " |";
    std::ostringstream ev;
    for (const auto& e : row.at("evidence")) {
      if (ev.tellp() > 0) ev << "; ";
      ev << e.at("lemma").get<std::string>() << ": " << e.at("status").get<std::string>();
    }
    os << " " << (ev.tellp() > 0 ? ev.str() : "none") << " | "
       << (row.at("supported").get<bool>() ? "yes" : "NO") << " |\n";
  }
  os << "\n**Caveat.** " << doc.at("caveat").get<std::string>() << "\n";
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot open output file: " + cfg.output);
  f << text;
}

}  // namespace

lemmas::TypeId parse_type_arg(const std::string& s) {
  try {
    auto [f, r] = rootsys::parse_type(s);
    return {f, r};
  } catch (const Error&) {
  }
  try {
    rootsys::CartanDatum d = sections::parse_algebra_name(s);
    return {d.family, d.rank};
  } catch (const Error&) {
  }
  throw UsageError("invalid type: " + s);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& progress) {
  try {
    ordered_json doc;
    int code = 0;
    if (cfg.command == "classify")
      code = run_classify(cfg, doc);
    else if (cfg.command == "verify")
      code = run_verify(cfg, doc, progress);
    else if (cfg.command == "section")
      code = run_section(cfg, doc);
    else if (cfg.command == "report")
      code = run_report(cfg, doc, progress);
    else
      throw UsageError("unknown command: " + cfg.command);
    if (cfg.format == "json")
      emit(cfg, doc.dump(2) + "\n", out);
    else if (cfg.format == "markdown")
      emit(cfg, markdown_of(doc), out);
    else
      throw UsageError("unknown format: " + cfg.format);
    return code;
  } catch (const UsageError& e) {
    progress << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidTypeError& e) {
    progress << "invalid type: " << e.what() << "\n";
    return 2;
  } catch (const CapExceededError& e) {
    progress << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    progress << "error: " << e.what() << "\n";
    return 1;
  }
}

int main_entry(int argc, char** argv) {
  RunConfig cfg;
  std::vector<std::string> type_args;
  int trials = 0;

  CLI::App app{"adjoint quotient toolkit: root data, lattice lemmas, and slices"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "write the document to a file instead of stdout");
    sub->add_option("--format", cfg.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
  };
  auto add_types = [&](CLI::App* sub) {
    sub->add_option("--type", type_args,
                    "Cartan labels (B3) or algebra names (so7); 'all' selects every type");
  };
  auto add_seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed (default 0xC0FFEE)");
    sub->add_option("--trials", trials, "sample count for randomized checks")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* classify = app.add_subcommand("classify", "table of minuscule fundamental weights");
  add_types(classify);
  classify->add_option("--max-rank", cfg.max_rank, "rank cutoff (default 8)")
      ->check(CLI::Range(1, 8));
  add_output(classify);

  CLI::App* verify = app.add_subcommand("verify", "run lemma verdicts");
  verify->add_option("--lemma", cfg.lemma_sel, "lemma ids; default all (see --list)");
  add_types(verify);
  add_seeded(verify);
  verify->add_option("--orbit-cap", cfg.orbit_cap, "orbit enumeration cap");
  verify->add_option("--max-size", cfg.max_matrix_size, "matrix size cap for slices");
  verify->add_flag("--e8", cfg.include_e8, "admit E8 into kernel-generation");
  verify->add_flag("--timings", cfg.timings, "include runtime_ms fields in the output");
  verify->add_flag("--list", cfg.list_lemmas, "print the lemma registry instead of running");
  add_output(verify);

  CLI::App* section = app.add_subcommand("section", "emit a slice with verification transcript");
  section->add_option("--algebra", cfg.algebra, "target algebra, e.g. sl4, so7, sp6, or B3");
  section->add_option("--slice", cfg.slice, "kostant, steinberg, or link")
      ->check(CLI::IsMember({"kostant", "steinberg", "link"}));
  section->add_option("--max-size", cfg.max_matrix_size, "matrix size cap");
  add_seeded(section);
  add_output(section);

  CLI::App* report = app.add_subcommand("report", "global-sections table with evidence verdicts");
  add_types(report);
  report->add_option("--max-rank", cfg.max_rank, "rank cutoff (default 8)")
      ->check(CLI::Range(1, 8));
  report->add_option("--curve", cfg.curve, "cuspidal, nodal, or both")
      ->check(CLI::IsMember({"cuspidal", "nodal", "both"}));
  report->add_flag("--e8", cfg.include_e8, "include the flagged E8 evidence lemma");
  add_seeded(report);
  add_output(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().at(0)->get_name();
  if (trials > 0) cfg.trials = trials;
  try {
    for (const std::string& s : type_args) {
      if (s == "all") {
        cfg.types.clear();
        break;
      }
      cfg.types.push_back(parse_type_arg(s));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return run(cfg, std::cout, std::cerr);
}

}  // namespace adjq::cli
