#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "udlneg/binarizer.hpp"
#include "udlneg/conllu.hpp"
#include "udlneg/enhancer.hpp"
#include "udlneg/lexicon.hpp"
#include "udlneg/scope.hpp"
#include "udlneg/term.hpp"

namespace udlneg {

struct PipelineConfig {
  CueLexicon cues = CueLexicon::defaults();
  EdgeLexicon edges = EdgeLexicon::defaults();
  ObliquenessHierarchy hierarchy = ObliquenessHierarchy::defaults();
  bool trace = false;

  // Built-in defaults, overridden by cues.json / edges.lex / hierarchy.txt
  // found in $UDLNEG_LEXICON_DIR when the variable is set.
  static PipelineConfig defaults();
};

struct SentenceResult {
  int id = 0;
  std::string text;
  DepGraph graph;  // enhanced
  SExprPtr sexpr;
  TermPtr formula;  // closed and β-normal
  std::vector<ScopeReport> scopes;
  Trace trace;
  std::vector<std::string> warnings;
  bool failed = false;
  std::string error;
};

// Leaf -> word term; (l h c) -> reduce(edge(l)(compose h)(compose c)).
// IllTyped errors are rethrown with the offending edge label attached.
TermPtr compose(const SExprPtr& s, const DepGraph& g, const PipelineConfig& cfg,
                Trace* trace = nullptr, std::vector<std::string>* warnings = nullptr);

// enhance -> binarize -> compose -> close -> extract scope. Failures are
// captured in the result, never thrown.
SentenceResult run_sentence(const DepGraph& g, const PipelineConfig& cfg, int id = 1);

// Sentences are independent; processing continues past failures and output
// order matches input order.
std::vector<SentenceResult> run_batch(const std::vector<DepGraph>& graphs,
                                      const PipelineConfig& cfg);

nlohmann::json result_to_json(const SentenceResult& r);

// Appendix-style derivation listing (one step per line).
std::string format_trace(const Trace& trace);

}  // namespace udlneg
