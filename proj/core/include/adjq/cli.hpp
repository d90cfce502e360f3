#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adjq/lemmas.hpp"

// Command-line front end: classification tables, lemma verdicts, slice
// emission, and the cohomology report. run() is the testable core; main_entry
// wraps argument parsing around it.
namespace adjq::cli {

struct RunConfig {
  std::string command;                 // classify | verify | section | report
  std::vector<lemmas::TypeId> types;   // empty means every applicable type
  std::vector<std::string> lemma_sel;  // empty means every lemma
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> trials;
  std::size_t orbit_cap = 0;  // 0 keeps the library default
  int max_matrix_size = 12;
  bool include_e8 = false;
  bool timings = false;       // adds runtime_ms fields; off by default so
                              // identical configurations emit identical bytes
  int max_rank = 8;           // classify / report row cutoff
  std::string curve = "both";     // report: cuspidal | nodal | both
  std::string slice = "kostant";  // section: kostant | steinberg | link
  std::string algebra;            // section target, e.g. "sl4" or "B3"
  bool list_lemmas = false;       // verify: print the registry instead
  std::string output;             // file path; empty writes to stdout
  std::string format = "json";    // json | markdown
};

// Parses a type argument: a Cartan label ("B3") or a classical algebra name
// ("so7"). Throws UsageError on anything else.
lemmas::TypeId parse_type_arg(const std::string& s);

// Executes the configured command, writing the document to `out` and one
// progress line per verdict to `progress`. Returns the exit code: 0 when
// every verdict passes or is vacuous, 1 on any falsification, 2 on usage
// errors (unknown lemma, invalid type, exceeded cap).
int run(const RunConfig& config, std::ostream& out, std::ostream& progress);

// argv front end around run(); writes to stdout/stderr.
int main_entry(int argc, char** argv);

}  // namespace adjq::cli
