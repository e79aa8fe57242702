#include "udlneg/scope.hpp"

#include <algorithm>

namespace udlneg {

namespace {

std::string atom_repr(const TermPtr& p) {
  std::string s = p->name + "(";
  for (size_t i = 0; i < p->args.size(); ++i) {
    if (i) s += ", ";
    const auto& a = p->args[i];
    if (a.is_const)
      s += "\"" + a.name + "\"";
    else
      s += a.name + (a.sort == Sort::Event ? "_e" : "_a");
  }
  return s + ")";
}

void collect_atoms(const TermPtr& t, std::vector<ScopeAtom>& out) {
  switch (t->kind) {
    case TermKind::Pred:
      out.push_back({t->name, atom_repr(t), t->token});
      return;
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
    case TermKind::Not:
      collect_atoms(t->a, out);
      return;
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies:
      collect_atoms(t->a, out);
      collect_atoms(t->b, out);
      return;
    default:
      return;
  }
}

void walk(const TermPtr& t, std::vector<ScopeReport>& out) {
  switch (t->kind) {
    case TermKind::Not: {
      ScopeReport r;
      r.negation_id = static_cast<int>(out.size());
      collect_atoms(t->a, r.atoms);
      for (const auto& a : r.atoms)
        if (a.token) r.token_indices.push_back(a.token);
      std::sort(r.token_indices.begin(), r.token_indices.end());
      r.token_indices.erase(std::unique(r.token_indices.begin(), r.token_indices.end()),
                            r.token_indices.end());
      out.push_back(std::move(r));
      walk(t->a, out);
      return;
    }
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
      walk(t->a, out);
      return;
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies:
      walk(t->a, out);
      walk(t->b, out);
      return;
    default:
      return;
  }
}

}  // namespace

std::vector<ScopeReport> extract_scope(const TermPtr& formula) {
  std::vector<ScopeReport> out;
  walk(formula, out);
  return out;
}

}  // namespace udlneg
