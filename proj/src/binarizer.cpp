#include "udlneg/binarizer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

namespace udlneg {

int ObliquenessHierarchy::rank(const std::string& label) const {
  for (size_t i = 0; i < priority.size(); ++i) {
    const std::string& p = priority[i];
    if (p == label) return static_cast<int>(i);
    if (p.size() > 2 && p.compare(p.size() - 2, 2, ":*") == 0) {
      std::string prefix = p.substr(0, p.size() - 2);
      if (label == prefix || label.compare(0, prefix.size() + 1, prefix + ":") == 0)
        return static_cast<int>(i);
    }
  }
  return static_cast<int>(priority.size());
}

ObliquenessHierarchy ObliquenessHierarchy::defaults() {
  return ObliquenessHierarchy{{
      "det:univ", "det", "neg:univ", "neg", "aux", "advmod", "nmod:*",
      "dobj:inv", "dobj", "nsubjpass:inv", "nsubjpass", "nsubj:inv", "nsubj",
  }};
}

ObliquenessHierarchy ObliquenessHierarchy::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open hierarchy file: " + path);
  ObliquenessHierarchy h;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos || line[start] == '#') continue;
    h.priority.push_back(line.substr(start));
  }
  if (h.priority.empty()) throw Error("empty hierarchy file: " + path);
  return h;
}

SExprPtr SExpr::make_leaf(int node) {
  SExpr s;
  s.leaf = true;
  s.node = node;
  return std::make_shared<const SExpr>(std::move(s));
}

SExprPtr SExpr::make_comp(std::string label, SExprPtr head, SExprPtr child) {
  SExpr s;
  s.leaf = false;
  s.label = std::move(label);
  s.head = std::move(head);
  s.child = std::move(child);
  return std::make_shared<const SExpr>(std::move(s));
}

namespace {

SExprPtr build(const DepGraph& g, const ObliquenessHierarchy& h, int node,
               std::set<int>& visited) {
  if (!visited.insert(node).second)
    throw DisconnectedGraph("node " + std::to_string(node) + " reached twice");
  std::vector<const DepEdge*> mods;
  for (const auto& e : g.edges)
    if (e.head == node) mods.push_back(&e);
  std::stable_sort(mods.begin(), mods.end(), [&](const DepEdge* a, const DepEdge* b) {
    int ra = h.rank(a->label), rb = h.rank(b->label);
    if (ra != rb) return ra < rb;
    return a->child < b->child;
  });
  SExprPtr acc = SExpr::make_leaf(node);
  for (const DepEdge* e : mods)
    acc = SExpr::make_comp(e->label, acc, build(g, h, e->child, visited));
  return acc;
}

}  // namespace

SExprPtr binarize(const DepGraph& g, const ObliquenessHierarchy& h) {
  if (g.nodes.empty()) throw DisconnectedGraph("empty graph");
  if (g.root == 0) throw DisconnectedGraph("graph has no root");
  std::set<int> visited;
  SExprPtr s = build(g, h, g.root, visited);
  if (visited.size() != g.nodes.size())
    throw DisconnectedGraph("only " + std::to_string(visited.size()) + " of " +
                            std::to_string(g.nodes.size()) + " nodes reachable from the root");
  return s;
}

std::string sexpr_to_text(const SExprPtr& s, const DepGraph& g) {
  if (s->leaf) {
    // a form that only differs from its lemma by capitalization renders as
    // the lemma (the paper writes "no", "not"), inflected forms render as-is
    const DepNode& n = g.node(s->node);
    auto lower = [](std::string x) {
      for (auto& c : x) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      return x;
    };
    return lower(n.form) == lower(n.lemma) ? n.lemma : n.form;
  }
  return "(" + s->label + " " + sexpr_to_text(s->head, g) + " " +
         sexpr_to_text(s->child, g) + ")";
}

}  // namespace udlneg
