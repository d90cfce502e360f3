#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "adjq/rng.hpp"
#include "adjq/rootsys.hpp"

// Executable verdicts for the registered lemmas. Each runner re-derives its
// claim from scratch on one Cartan type and reports pass, fail, or vacuous
// together with a structured witness. Identical options give identical
// verdict lists.
namespace adjq::lemmas {

using TypeId = std::pair<rootsys::Family, int>;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> trials;  // randomized lemmas; unset means the per-lemma default
  bool include_e8 = false;    // admits E8 into the kernel-generation domain
  std::size_t orbit_cap = 0;  // 0 keeps the library default
  int max_matrix_size = 12;   // cap for the slice constructions
};

struct Verdict {
  std::string lemma;
  std::string type;
  std::string status;  // "pass", "fail", or "vacuous"
  nlohmann::ordered_json witness;
  long runtime_ms = 0;

  bool ok() const { return status != "fail"; }
};

// Registered lemma identifiers, sorted. Matches the registry table.
const std::vector<std::string>& lemma_ids();
bool is_lemma_id(const std::string& id);

std::string type_label(const TypeId& t);

// Types a lemma runs on when none are requested. lemma_applies admits these
// plus any further types the runner supports on explicit request.
std::vector<TypeId> default_types(const std::string& lemma, const Options& opt);
bool lemma_applies(const std::string& lemma, const TypeId& t, const Options& opt);

// Runs one lemma on one type with a fresh generator seeded from opt.seed.
// Throws UsageError when the type lies outside the lemma's domain.
Verdict run_lemma(const std::string& lemma, const TypeId& t, const Options& opt);

// Expands a selection into (lemma, type) cells and runs them in sorted
// order. An empty lemma list selects every lemma; an empty type list selects
// each lemma's default domain. With explicit types, an explicitly named
// lemma rejects types outside its domain while an implicitly selected one
// skips them silently. The sink, when set, observes each verdict as it is
// produced.
using VerdictSink = std::function<void(const Verdict&)>;
std::vector<Verdict> run_selection(const std::vector<std::string>& lemma_sel,
                                   const std::vector<TypeId>& type_sel, const Options& opt,
                                   const VerdictSink& sink = {});

// Lemma ids whose verdicts back the cohomology table row of one type:
// the transitivity, kernel-generation, recovery, and restriction lemmas
// restricted to their default domains.
std::vector<std::string> evidence_lemmas(const TypeId& t, const Options& opt);

}  // namespace adjq::lemmas
