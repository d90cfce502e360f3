#include "adjq/registry.hpp"

#include <algorithm>

namespace adjq::registry {

const std::vector<LemmaInfo>& all_lemmas() {
  static const std::vector<LemmaInfo> table = {
      {"e6-line-transitivity",
       "In E6 the minuscule orbit has 27 weights; exactly 10 of them meet a fixed weight varpi, "
       "meaning -varpi-mu lies in the orbit, and the stabilizer of varpi acts transitively on "
       "those 10.",
       "E6"},
      {"e7-quadruple-transitivity",
       "In E7 the minuscule orbit has 56 weights, 630 proper zero-sum quadruples, and 2520 pairs "
       "of a quadruple with a marked member; the Weyl group acts transitively on those pairs.",
       "E7"},
      {"e7-stabilizer-invariants",
       "Elements stabilizing a quadruple through a fixed weight realize permutations of its four "
       "members including a 3-cycle, and the induced action on Z^4/(1,1,1,1) has invariant rank "
       "zero.",
       "E7"},
      {"kernel-generation",
       "The kernel of evaluation from the free abelian group on the short roots to the root "
       "lattice is generated by the opposite-pair and triple relations, with index one.",
       "simple types of rank <= 6, plus E7; E8 behind the e8 flag"},
      {"kostant-slice",
       "The slice X + centralizer(Y) in a classical matrix algebra consists of regular elements, "
       "and the invariant map restricted to it is a bijection with a degree-triangular exact "
       "inverse.",
       "sl2..sl6, sp4, sp6, so5, so7, so8 (A1..A5, C2, C3, B2, B3, D4)"},
      {"kostant-steinberg-link",
       "The companion matrix of (t-1)^n is exp(X') for a principal nilpotent X', and the tangent "
       "space of the companion slice there, moved into the Lie algebra, is a complement to the "
       "image of ad X'.",
       "A1..A3 (n = 2..4)"},
      {"minuscule-census",
       "The number of minuscule fundamental weights of a simple type equals det(Cartan) - 1, the "
       "order of the center minus one.",
       "all simple types of rank <= 8"},
      {"quasi-minuscule-data",
       "The nonzero weights of the quasi-minuscule representation are exactly the short roots and "
       "form a single Weyl orbit; the zero weight has multiplicity equal to the number of short "
       "simple roots.",
       "all simple types of rank <= 8"},
      {"restriction-sequence",
       "For the highest short root varpi, restricting characters to the subtorus cut out by the "
       "stabilizer of varpi is surjective with kernel exactly the line generated by varpi.",
       "A2, B2, B3, C3, G2, D4"},
      {"short-triple-transitivity",
       "The Weyl group acts transitively on unordered zero-sum triples of short roots; types "
       "with no such triples report a vacuous verdict.",
       "all simple types of rank <= 8; vacuous where no triples exist (A1, Bn, C2)"},
      {"steinberg-slice",
       "Companion matrices with prescribed characteristic coefficients and determinant one form "
       "a slice on which the invariant map reproduces the coordinates and every point is regular "
       "with cyclic vector e1.",
       "A1..A5 (n = 2..6)"},
      {"subscheme-vanishing",
       "On the subtorus where the three characters of a zero-sum short triple are trivial, every "
       "fiber function satisfying the relations has correspondence product one over the triple.",
       "simple types of rank <= 6; vacuous where no triples exist"},
      {"torus-recovery",
       "A multiplicative fiber function on the short roots satisfying the relations is the "
       "character of a unique adjoint torus point; corrupted functions are rejected with a "
       "violated relation as witness.",
       "simple types of rank <= 6"},
      {"weyl-order",
       "The Weyl group order counted by orbit enumeration equals the product of the invariant "
       "degrees.",
       "simple types of rank <= 6"},
  };
  return table;
}

const LemmaInfo* find_lemma(const std::string& id) {
  const auto& table = all_lemmas();
  auto it = std::lower_bound(table.begin(), table.end(), id,
                             [](const LemmaInfo& a, const std::string& b) { return a.id < b; });
  if (it == table.end() || it->id != id) return nullptr;
  return &*it;
}

}  // namespace adjq::registry
