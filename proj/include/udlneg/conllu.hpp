#pragma once

#include <string>
#include <vector>

#include "udlneg/errors.hpp"

namespace udlneg {

struct DepNode {
  int index = 0;  // 1-based token position
  std::string form, lemma, upos;
  std::string xpos = "_", feats = "_", deps = "_", misc = "_";
  std::string ner;  // from MISC NER=..., empty when absent

  // Enhancer annotations.
  bool vacuous = false;        // case word folded into an nmod label
  std::string cue_pred;        // restrictor for lexicalized cues (person/thing/location)
};

struct DepEdge {
  int head = 0;   // node index (the root attachment is not stored as an edge)
  int child = 0;
  std::string label;  // lowercased UD relation, possibly enhanced
};

struct DepGraph {
  std::vector<DepNode> nodes;  // ascending index order
  std::vector<DepEdge> edges;
  int root = 0;
  std::string text;                    // "# text = ..." when present
  std::vector<std::string> comments;   // all comment lines, in order

  const DepNode& node(int index) const;
  DepNode& node(int index);
  // Incoming edge of `child`, or nullptr for the root.
  const DepEdge* incoming(int child) const;
};

// Parses CoNLL-U text: 10 tab-separated columns, blank-line sentence breaks,
// '#' comments. Multiword-token ranges (1-2) and empty nodes (1.1) are
// skipped. DEPREL is lowercased; NER is read from a MISC NER= attribute and
// defaults to PER for proper nouns downstream.
std::vector<DepGraph> parse_conllu(const std::string& text);

std::string write_conllu(const std::vector<DepGraph>& graphs);

}  // namespace udlneg
