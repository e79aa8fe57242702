#include "udlneg/model.hpp"

namespace udlneg {

namespace {

const std::string& lookup(const Assignment& a, const std::string& v) {
  auto it = a.find(v);
  if (it == a.end()) throw Error("unassigned variable in model check: " + v);
  return it->second;
}

bool eval(const TermPtr& t, const Model& m, Assignment& a) {
  switch (t->kind) {
    case TermKind::True:
      return true;
    case TermKind::Not:
      return !eval(t->a, m, a);
    case TermKind::And:
      return eval(t->a, m, a) && eval(t->b, m, a);
    case TermKind::Implies:
      return !eval(t->a, m, a) || eval(t->b, m, a);
    case TermKind::Exists:
    case TermKind::Forall: {
      bool is_exists = t->kind == TermKind::Exists;
      auto saved = a.find(t->name) != a.end() ? std::optional<std::string>(a[t->name])
                                              : std::nullopt;
      bool result = !is_exists;
      for (const auto& d : m.domain) {
        a[t->name] = d;
        bool v = eval(t->a, m, a);
        if (is_exists && v) {
          result = true;
          break;
        }
        if (!is_exists && !v) {
          result = false;
          break;
        }
      }
      if (saved) a[t->name] = *saved; else a.erase(t->name);
      return result;
    }
    case TermKind::Pred: {
      auto it = m.interp.find(t->name);
      if (it == m.interp.end()) throw UnknownPredicate(t->name);
      std::vector<std::string> tuple;
      tuple.reserve(t->args.size());
      for (const auto& arg : t->args)
        tuple.push_back(arg.is_const ? arg.name : lookup(a, arg.name));
      return it->second.count(tuple) != 0;
    }
    case TermKind::Eq:
      return lookup(a, t->eq_lhs) == lookup(a, t->eq_rhs);
    default:
      throw Error("model check reached a non-first-order construct");
  }
}

}  // namespace

bool model_check(const TermPtr& formula, const Model& m, const Assignment& assignment) {
  Assignment a = assignment;
  return eval(formula, m, a);
}

}  // namespace udlneg
