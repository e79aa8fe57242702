#include "udlneg/term.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace udlneg {

bool operator==(const PredArg& a, const PredArg& b) {
  if (a.is_const != b.is_const) return false;
  if (a.is_const) return a.name == b.name;
  return a.name == b.name && a.sort == b.sort;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::Var:
    case TermKind::Proj:
      return a.name == b.name && (a.kind == TermKind::Var || a.sort == b.sort);
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
      return a.name == b.name && *a.a == *b.a;
    case TermKind::Not:
      return *a.a == *b.a;
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies:
      return *a.a == *b.a && *a.b == *b.b;
    case TermKind::Pred:
      return a.name == b.name && a.args == b.args;
    case TermKind::Eq:
      return a.eq_lhs == b.eq_lhs && a.eq_rhs == b.eq_rhs;
    case TermKind::True:
      return true;
  }
  return false;
}

namespace mk {

static TermPtr node(Term t) { return std::make_shared<const Term>(std::move(t)); }

TermPtr var(std::string name) {
  Term t;
  t.kind = TermKind::Var;
  t.name = std::move(name);
  return node(std::move(t));
}

TermPtr proj(std::string v, Sort s) {
  Term t;
  t.kind = TermKind::Proj;
  t.name = std::move(v);
  t.sort = s;
  return node(std::move(t));
}

static TermPtr unary(TermKind k, std::string v, TermPtr body) {
  Term t;
  t.kind = k;
  t.name = std::move(v);
  t.a = std::move(body);
  return node(std::move(t));
}

static TermPtr binary(TermKind k, TermPtr a, TermPtr b) {
  Term t;
  t.kind = k;
  t.a = std::move(a);
  t.b = std::move(b);
  return node(std::move(t));
}

TermPtr lam(std::string v, TermPtr body) { return unary(TermKind::Lam, std::move(v), std::move(body)); }
TermPtr exists(std::string v, TermPtr body) { return unary(TermKind::Exists, std::move(v), std::move(body)); }
TermPtr forall(std::string v, TermPtr body) { return unary(TermKind::Forall, std::move(v), std::move(body)); }
TermPtr app(TermPtr fn, TermPtr arg) { return binary(TermKind::App, std::move(fn), std::move(arg)); }
TermPtr conj(TermPtr l, TermPtr r) { return binary(TermKind::And, std::move(l), std::move(r)); }
TermPtr implies(TermPtr l, TermPtr r) { return binary(TermKind::Implies, std::move(l), std::move(r)); }

TermPtr neg(TermPtr t) {
  Term n;
  n.kind = TermKind::Not;
  n.a = std::move(t);
  return node(std::move(n));
}

TermPtr pred(std::string name, std::vector<PredArg> args, int token) {
  Term t;
  t.kind = TermKind::Pred;
  t.name = std::move(name);
  t.args = std::move(args);
  t.token = token;
  return node(std::move(t));
}

TermPtr eq(std::string lhs, std::string rhs) {
  Term t;
  t.kind = TermKind::Eq;
  t.eq_lhs = std::move(lhs);
  t.eq_rhs = std::move(rhs);
  return node(std::move(t));
}

TermPtr tru() {
  static const TermPtr k = node(Term{});
  return k;
}

PredArg ev(std::string v) { return PredArg{false, std::move(v), Sort::Event}; }
PredArg ind(std::string v) { return PredArg{false, std::move(v), Sort::Individual}; }
PredArg cst(std::string text) { return PredArg{true, std::move(text), Sort::Individual}; }

}  // namespace mk

using mk::proj;

// ---------------------------------------------------------------------------
// Types.

SemTypePtr SemType::v() {
  static const SemTypePtr k = std::make_shared<const SemType>(SemType{K::V, nullptr, nullptr});
  return k;
}
SemTypePtr SemType::t() {
  static const SemTypePtr k = std::make_shared<const SemType>(SemType{K::T, nullptr, nullptr});
  return k;
}
SemTypePtr SemType::fn(SemTypePtr a, SemTypePtr b) {
  return std::make_shared<const SemType>(SemType{K::Fn, std::move(a), std::move(b)});
}
SemTypePtr SemType::vt() {
  static const SemTypePtr k = fn(v(), t());
  return k;
}
SemTypePtr SemType::vt_t() {
  static const SemTypePtr k = fn(vt(), t());
  return k;
}
SemTypePtr SemType::edge() {
  static const SemTypePtr k = fn(vt_t(), fn(vt_t(), vt_t()));
  return k;
}

bool operator==(const SemType& a, const SemType& b) {
  if (a.k != b.k) return false;
  if (a.k != SemType::K::Fn) return true;
  return *a.arg == *b.arg && *a.res == *b.res;
}

std::string type_to_string(const SemTypePtr& t) {
  switch (t->k) {
    case SemType::K::V: return "v";
    case SemType::K::T: return "t";
    case SemType::K::Fn:
      return "<" + type_to_string(t->arg) + "," + type_to_string(t->res) + ">";
  }
  return "?";
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why && why->empty()) *why = msg;
  return false;
}

bool check_rec(const TermPtr& t, const SemTypePtr& expected, TypeEnv& env, std::string* why);

// Infers the type of a variable-headed application spine (or a bare
// variable); anything else is uninferable without annotations.
SemTypePtr infer_rec(const TermPtr& t, TypeEnv& env, std::string* why) {
  if (t->kind == TermKind::Var) {
    auto it = env.find(t->name);
    if (it == env.end()) {
      fail(why, "unbound variable " + t->name);
      return nullptr;
    }
    return it->second;
  }
  if (t->kind == TermKind::App) {
    SemTypePtr tf = infer_rec(t->a, env, why);
    if (!tf) return nullptr;
    if (tf->k != SemType::K::Fn) {
      fail(why, "application of non-function of type " + type_to_string(tf));
      return nullptr;
    }
    if (!check_rec(t->b, tf->arg, env, why)) return nullptr;
    return tf->res;
  }
  fail(why, "cannot infer type of non-variable application head");
  return nullptr;
}

bool check_var_is_paired(const std::string& v, TypeEnv& env, std::string* why) {
  auto it = env.find(v);
  if (it == env.end()) return fail(why, "unbound variable " + v);
  if (it->second->k != SemType::K::V)
    return fail(why, v + " is not a paired variable");
  return true;
}

bool check_rec(const TermPtr& t, const SemTypePtr& expected, TypeEnv& env, std::string* why) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::App: {
      SemTypePtr got = infer_rec(t, env, why);
      if (!got) return false;
      if (!(*got == *expected))
        return fail(why, "expected " + type_to_string(expected) + ", got " + type_to_string(got));
      return true;
    }
    case TermKind::Lam: {
      if (expected->k != SemType::K::Fn)
        return fail(why, "abstraction where " + type_to_string(expected) + " expected");
      auto saved = env.find(t->name) != env.end()
                       ? std::optional<SemTypePtr>(env[t->name])
                       : std::nullopt;
      env[t->name] = expected->arg;
      bool ok = check_rec(t->a, expected->res, env, why);
      if (saved) env[t->name] = *saved; else env.erase(t->name);
      return ok;
    }
    case TermKind::Exists:
    case TermKind::Forall: {
      if (expected->k != SemType::K::T) return fail(why, "quantifier is not a formula position");
      auto saved = env.find(t->name) != env.end()
                       ? std::optional<SemTypePtr>(env[t->name])
                       : std::nullopt;
      env[t->name] = SemType::v();
      bool ok = check_rec(t->a, SemType::t(), env, why);
      if (saved) env[t->name] = *saved; else env.erase(t->name);
      return ok;
    }
    case TermKind::And:
    case TermKind::Implies:
      if (expected->k != SemType::K::T) return fail(why, "connective is not a formula position");
      return check_rec(t->a, SemType::t(), env, why) && check_rec(t->b, SemType::t(), env, why);
    case TermKind::Not:
      if (expected->k != SemType::K::T) return fail(why, "negation is not a formula position");
      return check_rec(t->a, SemType::t(), env, why);
    case TermKind::Pred:
      if (expected->k != SemType::K::T) return fail(why, "predicate is not a formula position");
      for (const auto& a : t->args)
        if (!a.is_const && !check_var_is_paired(a.name, env, why)) return false;
      return true;
    case TermKind::Eq:
      if (expected->k != SemType::K::T) return fail(why, "EQ is not a formula position");
      return check_var_is_paired(t->eq_lhs, env, why) &&
             check_var_is_paired(t->eq_rhs, env, why);
    case TermKind::True:
      if (expected->k != SemType::K::T) return fail(why, "TRUE is not a formula position");
      return true;
    case TermKind::Proj:
      return fail(why, "projection outside a predicate argument");
  }
  return false;
}

}  // namespace

bool check_type(const TermPtr& t, const SemTypePtr& expected, const TypeEnv& env, std::string* why) {
  TypeEnv scratch = env;
  if (why) why->clear();
  return check_rec(t, expected, scratch, why);
}

// ---------------------------------------------------------------------------
// Variable bookkeeping.

namespace {

void collect_names(const TermPtr& t, std::set<std::string>* free,
                   std::set<std::string>* bound, std::vector<std::string>& scope) {
  auto in_scope = [&](const std::string& n) {
    return std::find(scope.begin(), scope.end(), n) != scope.end();
  };
  auto see = [&](const std::string& n) {
    if (free && !in_scope(n)) free->insert(n);
  };
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Proj:
      see(t->name);
      return;
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
      if (bound) bound->insert(t->name);
      scope.push_back(t->name);
      collect_names(t->a, free, bound, scope);
      scope.pop_back();
      return;
    case TermKind::Not:
      collect_names(t->a, free, bound, scope);
      return;
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies:
      collect_names(t->a, free, bound, scope);
      collect_names(t->b, free, bound, scope);
      return;
    case TermKind::Pred:
      for (const auto& a : t->args)
        if (!a.is_const) see(a.name);
      return;
    case TermKind::Eq:
      see(t->eq_lhs);
      see(t->eq_rhs);
      return;
    case TermKind::True:
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> fv;
  std::vector<std::string> scope;
  collect_names(t, &fv, nullptr, scope);
  return fv;
}

std::set<std::string> bound_vars(const TermPtr& t) {
  std::set<std::string> bv;
  std::vector<std::string> scope;
  collect_names(t, nullptr, &bv, scope);
  return bv;
}

std::set<std::string> all_names(const TermPtr& t) {
  std::set<std::string> fv, bv;
  std::vector<std::string> scope;
  collect_names(t, &fv, &bv, scope);
  fv.insert(bv.begin(), bv.end());
  return fv;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  std::string core = base;
  while (!core.empty() && (core.back() == '\'' || (core.back() >= '0' && core.back() <= '9')))
    core.pop_back();
  if (core.empty()) core = "v";
  for (int primes = 1; primes <= 3; ++primes) {
    std::string cand = core + std::string(primes, '\'');
    if (!used.count(cand)) return cand;
  }
  for (int n = 4;; ++n) {
    std::string cand = core + std::to_string(n);
    if (!used.count(cand)) return cand;
  }
}

// ---------------------------------------------------------------------------
// Renaming and substitution.

namespace {

struct Renamer {
  std::set<std::string> taken;  // names the new bound names must avoid
  std::set<std::string> pool;   // wider pool check, keeps output readable
  std::map<std::string, std::vector<std::string>> env;  // old -> rename stack

  TermPtr walk(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var:
      case TermKind::Proj: {
        const std::string n = mapped(t->name);
        if (n == t->name) return t;
        return t->kind == TermKind::Var ? mk::var(n) : proj(n, t->sort);
      }
      case TermKind::Lam:
      case TermKind::Exists:
      case TermKind::Forall: {
        std::string v = t->name;
        if (taken.count(v)) {
          std::set<std::string> avoid = pool;
          avoid.insert(taken.begin(), taken.end());
          v = fresh_name(t->name, avoid);
        }
        taken.insert(v);
        env[t->name].push_back(v);
        TermPtr body = walk(t->a);
        env[t->name].pop_back();
        if (v == t->name && body == t->a) return t;
        Term n;
        n.kind = t->kind;
        n.name = v;
        n.a = body;
        return std::make_shared<const Term>(std::move(n));
      }
      case TermKind::Not: {
        TermPtr a = walk(t->a);
        return a == t->a ? t : mk::neg(a);
      }
      case TermKind::App:
      case TermKind::And:
      case TermKind::Implies: {
        TermPtr a = walk(t->a), b = walk(t->b);
        if (a == t->a && b == t->b) return t;
        Term n;
        n.kind = t->kind;
        n.a = a;
        n.b = b;
        return std::make_shared<const Term>(std::move(n));
      }
      case TermKind::Pred: {
        bool changed = false;
        std::vector<PredArg> args = t->args;
        for (auto& a : args) {
          if (a.is_const) continue;
          std::string n = mapped(a.name);
          if (n != a.name) {
            a.name = n;
            changed = true;
          }
        }
        return changed ? mk::pred(t->name, std::move(args), t->token) : t;
      }
      case TermKind::Eq: {
        std::string l = mapped(t->eq_lhs), r = mapped(t->eq_rhs);
        if (l == t->eq_lhs && r == t->eq_rhs) return t;
        return mk::eq(l, r);
      }
      case TermKind::True:
        return t;
    }
    return t;
  }

  std::string mapped(const std::string& n) const {
    auto it = env.find(n);
    if (it == env.end() || it->second.empty()) return n;
    return it->second.back();
  }
};

}  // namespace

TermPtr alpha_rename(const TermPtr& t, const std::set<std::string>& avoid) {
  Renamer r;
  r.taken = avoid;
  for (const auto& v : free_vars(t)) r.taken.insert(v);
  r.pool = all_names(t);
  return r.walk(t);
}

namespace {

TermPtr subst_rec(const TermPtr& t, const std::string& var, const TermPtr& repl,
                  const std::set<std::string>& repl_free) {
  auto subst_var_slot = [&](const std::string& n) -> std::string {
    if (n != var) return n;
    if (repl->kind != TermKind::Var)
      throw IllTyped("non-variable substituted into a first-order position");
    return repl->name;
  };
  switch (t->kind) {
    case TermKind::Var:
      return t->name == var ? repl : t;
    case TermKind::Proj: {
      std::string n = subst_var_slot(t->name);
      return n == t->name ? t : proj(n, t->sort);
    }
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall: {
      if (t->name == var) return t;  // shadowed
      TermPtr body = t->a;
      std::string v = t->name;
      if (repl_free.count(v) && free_vars(body).count(var)) {
        // the binder would capture a free variable of the replacement
        std::set<std::string> used = all_names(body);
        used.insert(repl_free.begin(), repl_free.end());
        used.insert(var);
        v = fresh_name(t->name, used);
        body = subst_rec(body, t->name, mk::var(v), {v});
      }
      TermPtr nb = subst_rec(body, var, repl, repl_free);
      if (v == t->name && nb == t->a) return t;
      Term n;
      n.kind = t->kind;
      n.name = v;
      n.a = nb;
      return std::make_shared<const Term>(std::move(n));
    }
    case TermKind::Not: {
      TermPtr a = subst_rec(t->a, var, repl, repl_free);
      return a == t->a ? t : mk::neg(a);
    }
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies: {
      TermPtr a = subst_rec(t->a, var, repl, repl_free);
      TermPtr b = subst_rec(t->b, var, repl, repl_free);
      if (a == t->a && b == t->b) return t;
      Term n;
      n.kind = t->kind;
      n.a = a;
      n.b = b;
      return std::make_shared<const Term>(std::move(n));
    }
    case TermKind::Pred: {
      bool changed = false;
      std::vector<PredArg> args = t->args;
      for (auto& a : args) {
        if (a.is_const) continue;
        std::string n = subst_var_slot(a.name);
        if (n != a.name) {
          a.name = n;
          changed = true;
        }
      }
      return changed ? mk::pred(t->name, std::move(args), t->token) : t;
    }
    case TermKind::Eq: {
      std::string l = subst_var_slot(t->eq_lhs);
      std::string r = subst_var_slot(t->eq_rhs);
      if (l == t->eq_lhs && r == t->eq_rhs) return t;
      return mk::eq(l, r);
    }
    case TermKind::True:
      return t;
  }
  return t;
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& repl) {
  return subst_rec(t, var, repl, free_vars(repl));
}

// ---------------------------------------------------------------------------
// Simplification: TRUE-conjunct removal and floating existentials out of
// conjunctions (the paper's linear notation treats φ ∧ ∃z.ψ and ∃z.(φ ∧ ψ)
// as the same formula; we normalize toward the prenexed reading).

namespace {

TermPtr rebuild2(const TermPtr& t, TermPtr a, TermPtr b) {
  if (a == t->a && b == t->b) return t;
  Term n;
  n.kind = t->kind;
  n.a = std::move(a);
  n.b = std::move(b);
  return std::make_shared<const Term>(std::move(n));
}

TermPtr rebuild1(const TermPtr& t, TermPtr a) {
  if (a == t->a) return t;
  Term n;
  n.kind = t->kind;
  n.name = t->name;
  n.a = std::move(a);
  return std::make_shared<const Term>(std::move(n));
}

TermPtr simplify(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::And: {
      TermPtr l = simplify(t->a);
      TermPtr r = simplify(t->b);
      if (l->kind == TermKind::True) return r;
      if (r->kind == TermKind::True) return l;
      if (l->kind == TermKind::Exists) {
        std::string v = l->name;
        TermPtr body = l->a;
        if (free_vars(r).count(v)) {
          std::set<std::string> used = all_names(r);
          auto more = all_names(body);
          used.insert(more.begin(), more.end());
          used.insert(v);
          std::string nv = fresh_name(v, used);
          body = substitute(body, v, mk::var(nv));
          v = nv;
        }
        return mk::exists(v, simplify(mk::conj(body, r)));
      }
      if (r->kind == TermKind::Exists) {
        std::string v = r->name;
        TermPtr body = r->a;
        if (free_vars(l).count(v)) {
          std::set<std::string> used = all_names(l);
          auto more = all_names(body);
          used.insert(more.begin(), more.end());
          used.insert(v);
          std::string nv = fresh_name(v, used);
          body = substitute(body, v, mk::var(nv));
          v = nv;
        }
        return mk::exists(v, simplify(mk::conj(l, body)));
      }
      return rebuild2(t, l, r);
    }
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
      return rebuild1(t, simplify(t->a));
    case TermKind::Not: {
      TermPtr a = simplify(t->a);
      return a == t->a ? t : mk::neg(a);
    }
    case TermKind::App:
    case TermKind::Implies:
      return rebuild2(t, simplify(t->a), simplify(t->b));
    default:
      return t;
  }
}

// ---------------------------------------------------------------------------
// EQ-elimination.

void flatten_and(const TermPtr& t, std::vector<TermPtr>& out) {
  if (t->kind == TermKind::And) {
    flatten_and(t->a, out);
    flatten_and(t->b, out);
  } else {
    out.push_back(t);
  }
}

TermPtr rebuild_and(const std::vector<TermPtr>& conjs) {
  if (conjs.empty()) return mk::tru();
  TermPtr acc = conjs.back();
  for (auto it = conjs.rbegin() + 1; it != conjs.rend(); ++it)
    acc = mk::conj(*it, acc);
  return acc;
}

// One leftmost-outermost EQ-discharge, or nullptr when no pattern matches.
TermPtr eq_once(const TermPtr& t) {
  if (t->kind == TermKind::Exists) {
    std::vector<TermPtr> conjs;
    flatten_and(t->a, conjs);
    for (size_t i = 0; i < conjs.size(); ++i) {
      const TermPtr& c = conjs[i];
      if (c->kind != TermKind::Eq) continue;
      const std::string& z = t->name;
      bool lhs_is_z = c->eq_lhs == z, rhs_is_z = c->eq_rhs == z;
      if (lhs_is_z == rhs_is_z) continue;  // need exactly one side bound here
      const std::string& other = lhs_is_z ? c->eq_rhs : c->eq_lhs;
      std::vector<TermPtr> rest;
      for (size_t j = 0; j < conjs.size(); ++j)
        if (j != i) rest.push_back(conjs[j]);
      return substitute(rebuild_and(rest), z, mk::var(other));
    }
  }
  switch (t->kind) {
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
    case TermKind::Not: {
      TermPtr a = eq_once(t->a);
      if (!a) return nullptr;
      return t->kind == TermKind::Not ? mk::neg(a) : rebuild1(t, a);
    }
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies: {
      if (TermPtr a = eq_once(t->a)) return rebuild2(t, a, t->b);
      if (TermPtr b = eq_once(t->b)) return rebuild2(t, t->a, b);
      return nullptr;
    }
    default:
      return nullptr;
  }
}

// ---------------------------------------------------------------------------
// One small reduction step: an α-preparation of a redex argument, or the
// leftmost-outermost β-contraction. Returns nothing at normal form.

struct StepResult {
  TermPtr term;
  Rule rule;
};

bool var_headed(const TermPtr& t) {
  const Term* p = t.get();
  while (p->kind == TermKind::App) p = p->a.get();
  return p->kind == TermKind::Var;
}

std::optional<StepResult> step(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::App: {
      if (t->a->kind == TermKind::Lam) {
        const TermPtr& fn = t->a;
        const TermPtr& arg = t->b;
        // rename the argument's bound variables away from names already in
        // play, the appendix's explicit →_α steps
        std::set<std::string> in_play = all_names(fn);
        auto af = free_vars(arg);
        in_play.insert(af.begin(), af.end());
        std::set<std::string> ab = bound_vars(arg);
        bool clash = false;
        for (const auto& n : ab)
          if (in_play.count(n)) { clash = true; break; }
        if (clash)
          return StepResult{mk::app(fn, alpha_rename(arg, in_play)), Rule::Alpha};
        return StepResult{substitute(fn->a, fn->name, arg), Rule::Beta};
      }
      if (auto s = step(t->a)) return StepResult{rebuild2(t, s->term, t->b), s->rule};
      if (auto s = step(t->b)) return StepResult{rebuild2(t, t->a, s->term), s->rule};
      if (!var_headed(t))
        throw IllTyped("application of a non-function");
      return std::nullopt;
    }
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall: {
      if (auto s = step(t->a)) return StepResult{rebuild1(t, s->term), s->rule};
      return std::nullopt;
    }
    case TermKind::Not: {
      if (auto s = step(t->a)) return StepResult{mk::neg(s->term), s->rule};
      return std::nullopt;
    }
    case TermKind::And:
    case TermKind::Implies: {
      if (auto s = step(t->a)) return StepResult{rebuild2(t, s->term, t->b), s->rule};
      if (auto s = step(t->b)) return StepResult{rebuild2(t, t->a, s->term), s->rule};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

TermPtr beta_reduce(const TermPtr& t, Trace* trace) {
  TermPtr cur = simplify(t);
  for (;;) {
    if (TermPtr e = eq_once(cur)) {
      TermPtr next = simplify(e);
      if (trace) trace->push_back({Rule::EqElim, "", cur, next});
      cur = next;
      continue;
    }
    auto s = step(cur);
    if (!s) break;
    TermPtr next = s->rule == Rule::Beta ? simplify(s->term) : s->term;
    if (trace) trace->push_back({s->rule, "", cur, next});
    cur = next;
  }
  // restore the Barendregt convention: bound names pairwise distinct
  TermPtr clean = alpha_rename(cur, {});
  if (!(clean == cur)) {
    if (trace) trace->push_back({Rule::Alpha, "", cur, clean});
    cur = clean;
  }
  return cur;
}

TermPtr eq_eliminate(const TermPtr& t) {
  TermPtr cur = t;
  while (TermPtr next = eq_once(cur)) cur = next;
  return cur;
}

namespace {

bool is_formula_only(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Lam:
    case TermKind::App:
    case TermKind::Eq:
      return false;
    case TermKind::Var:
      return false;  // a stray variable in formula position is not closed
    case TermKind::Not:
    case TermKind::Exists:
    case TermKind::Forall:
      return is_formula_only(t->a);
    case TermKind::And:
    case TermKind::Implies:
      return is_formula_only(t->a) && is_formula_only(t->b);
    default:
      return true;
  }
}

}  // namespace

TermPtr existential_closure(const TermPtr& t, Trace* trace) {
  if (t->kind != TermKind::Lam)
    throw NotClosable("existential closure needs a one-handle abstraction");
  TermPtr closed = beta_reduce(mk::app(t, mk::lam("x", mk::tru())));
  if (!free_vars(closed).empty() || !is_formula_only(closed))
    throw NotClosable("term did not close to a sentence formula");
  if (trace) trace->push_back({Rule::ExClose, "", t, closed});
  return closed;
}

std::string rule_tag(const TraceStep& s) {
  switch (s.rule) {
    case Rule::Alpha: return "\xce\xb1";       // α
    case Rule::Beta: return "\xce\xb2";        // β
    case Rule::EqElim: return "EQ";
    case Rule::ExClose: return "ex-clos";
    case Rule::Compose: return "compose(" + s.label + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Comparison keys. Bound variables are numbered by binder depth, so the key
// is invariant under α-renaming; conjunctions are flattened and sorted, so
// it is also invariant under conjunct order (when `sort_conjuncts`).

namespace {

void key_rec(const TermPtr& t, std::vector<std::string>& scope, bool sort_conjuncts,
             std::string& out) {
  auto var_key = [&](const std::string& n) {
    for (size_t i = scope.size(); i-- > 0;)
      if (scope[i] == n) return "$" + std::to_string(i);
    return "!" + n;
  };
  switch (t->kind) {
    case TermKind::Var:
      out += var_key(t->name);
      return;
    case TermKind::Proj:
      out += var_key(t->name);
      out += t->sort == Sort::Event ? "_e" : "_a";
      return;
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
      out += t->kind == TermKind::Lam ? "(L " : (t->kind == TermKind::Exists ? "(E " : "(A ");
      scope.push_back(t->name);
      key_rec(t->a, scope, sort_conjuncts, out);
      scope.pop_back();
      out += ")";
      return;
    case TermKind::App:
      out += "(@ ";
      key_rec(t->a, scope, sort_conjuncts, out);
      out += " ";
      key_rec(t->b, scope, sort_conjuncts, out);
      out += ")";
      return;
    case TermKind::And: {
      std::vector<TermPtr> conjs;
      flatten_and(t, conjs);
      std::vector<std::string> keys;
      keys.reserve(conjs.size());
      for (const auto& c : conjs) {
        std::string k;
        key_rec(c, scope, sort_conjuncts, k);
        keys.push_back(std::move(k));
      }
      if (sort_conjuncts) std::sort(keys.begin(), keys.end());
      out += "(& ";
      for (const auto& k : keys) {
        out += k;
        out += " ";
      }
      out += ")";
      return;
    }
    case TermKind::Not:
      out += "(~ ";
      key_rec(t->a, scope, sort_conjuncts, out);
      out += ")";
      return;
    case TermKind::Implies:
      out += "(-> ";
      key_rec(t->a, scope, sort_conjuncts, out);
      out += " ";
      key_rec(t->b, scope, sort_conjuncts, out);
      out += ")";
      return;
    case TermKind::Pred:
      out += "(p " + t->name;
      for (const auto& a : t->args) {
        out += " ";
        if (a.is_const) {
          out += "\"" + a.name + "\"";
        } else {
          out += var_key(a.name);
          out += a.sort == Sort::Event ? "_e" : "_a";
        }
      }
      out += ")";
      return;
    case TermKind::Eq: {
      std::string l = var_key(t->eq_lhs), r = var_key(t->eq_rhs);
      if (sort_conjuncts && r < l) std::swap(l, r);  // EQ is symmetric
      out += "(= " + l + " " + r + ")";
      return;
    }
    case TermKind::True:
      out += "T";
      return;
  }
}

std::string make_key(const TermPtr& t, bool sort_conjuncts) {
  std::string out;
  std::vector<std::string> scope;
  key_rec(t, scope, sort_conjuncts, out);
  return out;
}

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  return make_key(a, false) == make_key(b, false);
}

bool alpha_and_equal(const TermPtr& a, const TermPtr& b) {
  return make_key(a, true) == make_key(b, true);
}

std::string comparison_key(const TermPtr& t) { return make_key(t, true); }

}  // namespace udlneg
