#pragma once

#include <string>
#include <vector>

#include "udlneg/term.hpp"

namespace udlneg {

struct ScopeAtom {
  std::string pred;  // predicate name
  std::string repr;  // printed atom, e.g. thing(z_a)
  int token = 0;     // 1-based source token, 0 when untraceable
};

// All predicate atoms syntactically dominated by one ¬ operator.
struct ScopeReport {
  int negation_id = 0;  // preorder index among the formula's ¬ nodes
  std::vector<ScopeAtom> atoms;
  std::vector<int> token_indices;  // sorted, unique, traceable atoms only
};

// One report per ¬ node of a closed β-normal formula; nested negations give
// nested (overlapping) reports.
std::vector<ScopeReport> extract_scope(const TermPtr& formula);

}  // namespace udlneg
