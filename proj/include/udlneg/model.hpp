#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "udlneg/term.hpp"

namespace udlneg {

// Finite first-order model used as the test oracle for logical-equivalence
// claims. Event and individual projections both range over the one domain;
// tuples must be arity-consistent per predicate.
struct Model {
  std::vector<std::string> domain;
  std::map<std::string, std::set<std::vector<std::string>>> interp;
};

using Assignment = std::map<std::string, std::string>;

// Tarskian truth value of a formula whose free variables are all assigned.
// Throws UnknownPredicate when the interpretation lacks a predicate.
bool model_check(const TermPtr& formula, const Model& m, const Assignment& assignment = {});

}  // namespace udlneg
