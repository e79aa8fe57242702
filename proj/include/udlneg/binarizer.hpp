#pragma once

#include <memory>
#include <string>
#include <vector>

#include "udlneg/conllu.hpp"

namespace udlneg {

// Priority order over edge labels, highest first: a head's highest-priority
// modifier is composed first and so ends up innermost. Entries ending in
// ":*" match the bare prefix and any suffixed variant. Unknown labels rank
// last; ties break by child token index.
struct ObliquenessHierarchy {
  std::vector<std::string> priority;

  int rank(const std::string& label) const;
  static ObliquenessHierarchy defaults();
  static ObliquenessHierarchy from_file(const std::string& path);
};

struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

// Binarized composition plan: (label head child), head subtree first.
struct SExpr {
  bool leaf = true;
  int node = 0;  // leaf: token index
  std::string label;
  SExprPtr head, child;

  static SExprPtr make_leaf(int node);
  static SExprPtr make_comp(std::string label, SExprPtr head, SExprPtr child);
};

// Bottom-up plan covering every edge exactly once, deterministic.
// Throws DisconnectedGraph when not every node is reachable from the root.
SExprPtr binarize(const DepGraph& g, const ObliquenessHierarchy& h);

// Paper notation, e.g. (nsubj (aux (neg eat not) does) John).
std::string sexpr_to_text(const SExprPtr& s, const DepGraph& g);

}  // namespace udlneg
