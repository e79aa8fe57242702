#pragma once

#include <string>
#include <vector>

#include "udlneg/conllu.hpp"
#include "udlneg/enhancer.hpp"
#include "udlneg/term.hpp"

namespace udlneg {

// One lexicon record: edge-label pattern -> template + role predicate.
// Patterns ending in ":*" match any suffixed variant; the role "$case"
// resolves to the label's suffix (nmod:with -> with).
struct EdgeRule {
  std::string pattern;
  std::string template_id;
  std::string role;
};

struct EdgeLexicon {
  std::vector<EdgeRule> rules;  // first match wins

  static EdgeLexicon defaults();
  static EdgeLexicon from_file(const std::string& path);
  const EdgeRule* match(const std::string& label) const;
};

// Word semantics, resolved as cue override -> vacuous class -> POS default.
// Every result checks as ⟨vt,t⟩.
TermPtr word_term(const DepNode& n, const CueLexicon& cues);

// Edge semantics from the lexicon; unknown labels fall back to the
// head-preserving template with a warning. Every result checks as
// ⟨⟨vt,t⟩,⟨⟨vt,t⟩,⟨vt,t⟩⟩⟩.
TermPtr edge_term(const std::string& label, const EdgeLexicon& lex = EdgeLexicon::defaults(),
                  std::vector<std::string>* warnings = nullptr);

// The template bodies themselves, for tests and documentation.
TermPtr edge_template(const std::string& template_id, const std::string& role);

}  // namespace udlneg
