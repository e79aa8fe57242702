#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "udlneg/conllu.hpp"

namespace udlneg {

// Closed-class cue inventory. The four classes must stay pairwise disjoint.
struct CueLexicon {
  std::set<std::string> universal_negatives{"no"};
  std::set<std::string> universal_determiners{"every", "all", "each"};
  std::map<std::string, std::string> lexical_cues{
      {"nobody", "person"}, {"nothing", "thing"}, {"nowhere", "location"}};
  std::set<std::string> plain_negators{"not", "never", "n't"};

  bool disjoint() const;
  static CueLexicon defaults() { return CueLexicon{}; }
  static CueLexicon from_file(const std::string& path);
};

// Rewrites edge labels so scope-bearing constructions compose correctly:
//   R4  nmod + case child        ->  nmod:<case-lemma>, case word vacuous
//   R1  neg + universal negative ->  neg:univ, governor argument edge :inv
//   R2  det + universal det      ->  det:univ, governor argument edge :inv
//   R3  lexicalized cue          ->  node flagged; argument edge :inv,
//                                    adjunct edges untouched
// Pure, idempotent; node set and edge topology are preserved.
DepGraph enhance(const DepGraph& g, const CueLexicon& cues,
                 std::vector<std::string>* warnings = nullptr);

}  // namespace udlneg
