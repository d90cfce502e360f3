#pragma once

#include <string>
#include <vector>

// Stable identifiers for the verifiable lemmas, each mapped to the
// mathematical statement it checks and the domain it runs over. CI output
// references these ids; docs/lemmas.md renders the same table.
namespace adjq::registry {

struct LemmaInfo {
  std::string id;
  std::string statement;
  std::string domain;
};

// All entries, sorted by id.
const std::vector<LemmaInfo>& all_lemmas();

// Null when the id is unknown.
const LemmaInfo* find_lemma(const std::string& id);

}  // namespace adjq::registry
