#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>

#include "adjq/cli.hpp"

using namespace adjq;
using cli::RunConfig;
using nlohmann::json;
using rootsys::Family;

namespace {

struct RunOutput {
  int code = 0;
  std::string out;
  std::string progress;
  json doc;
};

RunOutput run_config(const RunConfig& config) {
  std::ostringstream out, progress;
  RunOutput r;
  r.code = cli::run(config, out, progress);
  r.out = out.str();
  r.progress = progress.str();
  if (!r.out.empty() && config.format == "json" && r.out.front() == '{')
    r.doc = json::parse(r.out);
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("type arguments accept labels and algebra names") {
    CHECK(cli::parse_type_arg("B3") == lemmas::TypeId{Family::B, 3});
    CHECK(cli::parse_type_arg("so7") == lemmas::TypeId{Family::B, 3});
    CHECK(cli::parse_type_arg("sl4") == lemmas::TypeId{Family::A, 3});
    CHECK(cli::parse_type_arg("E8") == lemmas::TypeId{Family::E, 8});
    CHECK_THROWS_AS(cli::parse_type_arg("Q5"), UsageError);
    CHECK_THROWS_AS(cli::parse_type_arg(""), UsageError);
  }

  TEST_CASE("classification table covers every type up to the rank cutoff") {
    RunConfig config;
    config.command = "classify";
    RunOutput r = run_config(config);
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("rows").size() == 33);
    for (const auto& row : r.doc.at("rows")) {
      long center = row.at("center_order").get<long>();
      CHECK(row.at("minuscule_count").get<long>() == center - 1);
      CHECK(row.at("fundamental_weights").size() == row.at("dimensions").size());
    }
    // Spot check one row: the 27 dimensional pair.
    bool saw_e6 = false;
    for (const auto& row : r.doc.at("rows")) {
      if (row.at("type") != "E6") continue;
      saw_e6 = true;
      CHECK(row.at("fundamental_weights") == json::array({1, 6}));
      CHECK(row.at("dimensions") == json::array({27, 27}));
    }
    CHECK(saw_e6);
  }

  TEST_CASE("verdict run on one cell with a structured witness") {
    RunConfig config;
    config.command = "verify";
    config.lemma_sel = {"kernel-generation"};
    config.types = {{Family::B, 2}};
    RunOutput r = run_config(config);
    REQUIRE(r.code == 0);
    CHECK(r.doc.at("summary").at("total").get<int>() == 1);
    CHECK(r.doc.at("summary").at("pass").get<int>() == 1);
    const auto& v = r.doc.at("verdicts").at(0);
    CHECK(v.at("lemma") == "kernel-generation");
    CHECK(v.at("type") == "B2");
    CHECK(v.at("status") == "pass");
    CHECK(v.at("witness").at("type_ii_relations").get<int>() == 0);
    CHECK(v.at("witness").at("index") == "1");
    // One progress line per verdict.
    CHECK(r.progress.find("kernel-generation") != std::string::npos);
    // Timing fields stay out of the document unless requested.
    CHECK(r.out.find("runtime_ms") == std::string::npos);
  }

  TEST_CASE("identical configurations emit identical bytes") {
    RunConfig config;
    config.command = "verify";
    config.lemma_sel = {"torus-recovery"};
    config.types = {{Family::C, 3}};
    config.trials = 7;
    RunOutput first = run_config(config);
    RunOutput second = run_config(config);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }

  TEST_CASE("registry listing") {
    RunConfig config;
    config.command = "verify";
    config.list_lemmas = true;
    RunOutput r = run_config(config);
    REQUIRE(r.code == 0);
    CHECK(r.doc.at("registry").size() == 14);
    CHECK(r.doc.at("registry").at(0).at("id") == "e6-line-transitivity");
    REQUIRE(!r.doc.at("registry").at(0).at("statement").get<std::string>().empty());

    config.format = "markdown";
    RunOutput md = run_config(config);
    CHECK(md.code == 0);
    CHECK(md.out.find("| id |") != std::string::npos);
    CHECK(md.out.find("e7-quadruple-transitivity") != std::string::npos);
  }

  TEST_CASE("usage failures exit with code two") {
    RunConfig config;
    config.command = "verify";
    config.lemma_sel = {"no-such-lemma"};
    CHECK(run_config(config).code == 2);

    RunConfig off_domain;
    off_domain.command = "verify";
    off_domain.lemma_sel = {"e6-line-transitivity"};
    off_domain.types = {{Family::A, 2}};
    CHECK(run_config(off_domain).code == 2);

    RunConfig e8;
    e8.command = "verify";
    e8.lemma_sel = {"kernel-generation"};
    e8.types = {{Family::E, 8}};
    RunOutput r = run_config(e8);
    CHECK(r.code == 2);
    CHECK(r.progress.find("opt-in") != std::string::npos);

    RunConfig bad_curve;
    bad_curve.command = "report";
    bad_curve.curve = "elliptic";
    CHECK(run_config(bad_curve).code == 2);

    RunConfig bad_slice;
    bad_slice.command = "section";
    bad_slice.slice = "spiral";
    bad_slice.algebra = "sl3";
    CHECK(run_config(bad_slice).code == 2);
  }

  TEST_CASE("slice document for a small orthogonal algebra") {
    RunConfig config;
    config.command = "section";
    config.algebra = "so5";
    config.trials = 5;
    RunOutput r = run_config(config);
    REQUIRE(r.code == 0);
    CHECK(r.doc.at("algebra") == "so5");
    CHECK(r.doc.at("matrix_size").get<int>() == 5);
    CHECK(r.doc.at("exponents") == json::array({1, 3}));
    CHECK(r.doc.at("x").size() == 5);
    CHECK(r.doc.at("complement_basis").size() == 2);
    CHECK(r.doc.at("verification").at("samples").get<int>() == 5);
    CHECK(r.doc.at("verification").at("roundtrip_exact").get<bool>());

    // The multiplicative slice needs a special linear target.
    RunConfig wrong;
    wrong.command = "section";
    wrong.slice = "steinberg";
    wrong.algebra = "so5";
    CHECK(run_config(wrong).code == 2);

    RunConfig link;
    link.command = "section";
    link.slice = "link";
    link.algebra = "sl3";
    RunOutput lr = run_config(link);
    REQUIRE(lr.code == 0);
    CHECK(lr.doc.at("exp_recovers").get<bool>());
  }

  TEST_CASE("cohomology report rows and the printed caveat") {
    RunConfig config;
    config.command = "report";
    config.types = {{Family::A, 3}, {Family::D, 4}, {Family::E, 8}};
    config.trials = 5;
    RunOutput r = run_config(config);
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("rows").size() == 3);

    const auto& a3 = r.doc.at("rows").at(0);
    CHECK(a3.at("type") == "A3");
    CHECK(a3.at("center_order").get<long>() == 4);
    CHECK(a3.at("cuspidal").at("torsion_order").get<long>() == 4);
    CHECK(a3.at("cuspidal").at("free_rank").get<int>() == 0);
    CHECK(a3.at("nodal").at("torsion_order").get<long>() == 4);
    CHECK(a3.at("nodal").at("free_rank").get<int>() == 1);
    CHECK(a3.at("supported").get<bool>());
    REQUIRE(!a3.at("evidence").empty());
    for (const auto& e : a3.at("evidence")) CHECK(e.at("status") == "pass");

    const auto& e8 = r.doc.at("rows").at(2);
    CHECK(e8.at("type") == "E8");
    CHECK(e8.at("cuspidal").at("torsion_order").get<long>() == 1);
    CHECK(e8.at("evidence").empty());

    std::string caveat = r.doc.at("caveat").get<std::string>();
    CHECK(caveat.find("first cohomology") != std::string::npos);
    CHECK(caveat.find("NOT verified") != std::string::npos);

    // The caveat survives into the rendered table.
    config.format = "markdown";
    RunOutput md = run_config(config);
    CHECK(md.code == 0);
    CHECK(md.out.find("**Caveat.**") != std::string::npos);
    CHECK(md.out.find("first cohomology") != std::string::npos);
  }

  TEST_CASE("report restricted to one degeneration drops the other column") {
    RunConfig config;
    config.command = "report";
    config.types = {{Family::G, 2}};
    config.curve = "nodal";
    config.trials = 5;
    RunOutput r = run_config(config);
    REQUIRE(r.code == 0);
    const auto& row = r.doc.at("rows").at(0);
    CHECK(row.contains("nodal"));
    CHECK_FALSE(row.contains("cuspidal"));
    CHECK(row.at("nodal").at("free_rank").get<int>() == 1);
  }
}
