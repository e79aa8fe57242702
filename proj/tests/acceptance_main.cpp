// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run directly or through ctest.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "support.hpp"
#include "udlneg/model.hpp"
#include "udlneg/pipeline.hpp"
#include "udlneg/term_io.hpp"

using namespace udlneg;
using testsupport::all_models;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

void report(int id, const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << "\n";
  if (!ok) {
    ++failures;
    for (const auto& n : notes) std::cout << "     " << n << "\n";
  }
  notes.clear();
}

double run_timed(const std::function<bool()>& f, bool* ok) {
  auto start = std::chrono::steady_clock::now();
  *ok = f();
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

SentenceResult run_one(const std::string& conllu, bool trace = false) {
  auto graphs = parse_conllu(conllu);
  PipelineConfig cfg;
  cfg.trace = trace;
  return run_sentence(graphs.at(0), cfg);
}

bool formula_matches(const std::string& conllu, const char* golden) {
  SentenceResult r = run_one(conllu);
  if (r.failed) {
    note("pipeline failed: " + r.error);
    return false;
  }
  TermPtr expected = parse_term(golden);
  if (!alpha_and_equal(r.formula, expected)) {
    note("got:      " + to_text(display_rename(r.formula)));
    note("expected: " + std::string(golden));
    return false;
  }
  return true;
}

std::set<std::string> scope_preds(const ScopeReport& s) {
  std::set<std::string> out;
  for (const auto& a : s.atoms) out.insert(a.pred);
  return out;
}

std::set<std::string> formula_preds(const TermPtr& t) {
  std::set<std::string> out;
  auto reports = extract_scope(mk::neg(t));
  for (const auto& a : reports.at(0).atoms) out.insert(a.pred);
  return out;
}

// --------------------------------------------------------------------------

bool criterion1_golden_derivations() {
  return formula_matches(testsupport::conllu_john_does_not_eat(),
                         testsupport::golden_john_does_not_eat()) &&
         formula_matches(testsupport::conllu_no_man_came(), testsupport::golden_no_man_came()) &&
         formula_matches(testsupport::conllu_not_every_man_came(),
                         testsupport::golden_not_every_man_came()) &&
         formula_matches(testsupport::conllu_nobody_came(), testsupport::golden_nobody_came()) &&
         formula_matches(testsupport::conllu_john_came_with_nothing(),
                         testsupport::golden_john_came_with_nothing());
}

bool criterion2_malta() {
  SentenceResult r = run_one(testsupport::conllu_malta_borders_no_country());
  if (r.failed) {
    note("pipeline failed: " + r.error);
    return false;
  }
  if (!alpha_and_equal(r.formula, parse_term(testsupport::golden_malta()))) {
    note("formula mismatch: " + to_text(display_rename(r.formula)));
    return false;
  }
  // quantifier nesting: ∀ over → whose consequent is ¬ over ∃∃
  const TermPtr& f = r.formula;
  bool shape = f->kind == TermKind::Forall && f->a->kind == TermKind::Implies &&
               f->a->a->kind == TermKind::Pred && f->a->a->name == "country" &&
               f->a->b->kind == TermKind::Not && f->a->b->a->kind == TermKind::Exists &&
               f->a->b->a->a->kind == TermKind::Exists;
  if (!shape) {
    note("quantifier nesting is not forall > not > exists/exists");
    return false;
  }
  if (r.scopes.size() != 1) {
    note("expected exactly one negation scope");
    return false;
  }
  std::set<std::string> inside = scope_preds(r.scopes[0]);
  if (inside != std::set<std::string>{"named", "borders", "Theme", "Actor"}) {
    note("scope atoms differ");
    return false;
  }
  if (inside.count("country")) {
    note("country leaked into the negation scope");
    return false;
  }
  return true;
}

bool criterion3_enhancement() {
  auto labels = [](const DepGraph& g) {
    std::map<std::pair<int, int>, std::string> m;
    for (const auto& e : g.edges) m[{e.head, e.child}] = e.label;
    return m;
  };
  DepGraph fig3 = enhance(parse_conllu(testsupport::conllu_no_man_came()).at(0),
                          CueLexicon::defaults());
  auto m3 = labels(fig3);
  bool ok3 = m3[{2, 1}] == "neg:univ" && m3[{3, 2}] == "nsubj:inv";
  if (!ok3) note("Fig. 3 rewrite wrong: " + m3[{2, 1}] + ", " + m3[{3, 2}]);

  DepGraph fig4 = enhance(parse_conllu(testsupport::conllu_not_every_man_came()).at(0),
                          CueLexicon::defaults());
  auto m4 = labels(fig4);
  bool ok4 =
      m4[{3, 2}] == "det:univ" && m4[{4, 3}] == "nsubj:inv" && m4[{3, 1}] == "neg";
  if (!ok4) note("Fig. 4 rewrite wrong: " + m4[{3, 2}] + ", " + m4[{4, 3}] + ", " + m4[{3, 1}]);
  return ok3 && ok4;
}

// An EQ step discharging ∃z.(man(z) ∧ EQ(x,z)) into man(x).
bool has_eq_discharge_subterm(const TermPtr& t) {
  if (t->kind == TermKind::Exists && t->a->kind == TermKind::And) {
    const TermPtr& l = t->a->a;
    const TermPtr& r = t->a->b;
    auto is_man = [&](const TermPtr& p) {
      return p->kind == TermKind::Pred && p->name == "man" && p->args.size() == 1 &&
             !p->args[0].is_const && p->args[0].name == t->name;
    };
    auto is_eq = [&](const TermPtr& p) {
      return p->kind == TermKind::Eq &&
             ((p->eq_lhs == t->name) != (p->eq_rhs == t->name));
    };
    if ((is_man(l) && is_eq(r)) || (is_man(r) && is_eq(l))) return true;
  }
  switch (t->kind) {
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
    case TermKind::Not:
      return has_eq_discharge_subterm(t->a);
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies:
      return has_eq_discharge_subterm(t->a) || has_eq_discharge_subterm(t->b);
    default:
      return false;
  }
}

int count_eq(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Eq:
      return 1;
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
    case TermKind::Not:
      return count_eq(t->a);
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies:
      return count_eq(t->a) + count_eq(t->b);
    default:
      return 0;
  }
}

bool has_pred_on(const TermPtr& t, const std::string& name) {
  switch (t->kind) {
    case TermKind::Pred:
      return t->name == name;
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
    case TermKind::Not:
      return has_pred_on(t->a, name);
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies:
      return has_pred_on(t->a, name) || has_pred_on(t->b, name);
    default:
      return false;
  }
}

bool criterion4_trace() {
  SentenceResult r = run_one(testsupport::conllu_no_man_came(), /*trace=*/true);
  if (r.failed) {
    note("pipeline failed: " + r.error);
    return false;
  }
  for (const auto& s : r.trace) {
    if (s.rule != Rule::EqElim) continue;
    if (!has_eq_discharge_subterm(s.before)) continue;
    if (count_eq(s.after) != count_eq(s.before) - 1) continue;
    if (!alpha_and_equal(s.after, eq_eliminate(s.before))) continue;
    if (!has_pred_on(s.after, "man")) continue;
    return true;
  }
  note("no EQ step discharging exists z . man(z) & EQ(x, z) found in the trace");
  return false;
}

bool criterion5_oracle() {
  TermPtr lhs = parse_term("forall x . (P(x_a) -> not Q(x_a))");
  TermPtr rhs = parse_term("not exists x . P(x_a) & Q(x_a)");
  int checked = 0;
  for (const auto& m : all_models({{"P", 1}, {"Q", 1}}, 3)) {
    if (model_check(lhs, m) != model_check(rhs, m)) {
      note("counter-model with |D| = " + std::to_string(m.domain.size()));
      return false;
    }
    ++checked;
  }
  if (checked != 4 + 16 + 64) {
    note("enumeration produced " + std::to_string(checked) + " models");
    return false;
  }
  return true;
}

bool criterion6_property_suites() {
  // 500 well-typed terms: capture-freedom of one substitution step and
  // idempotence of full reduction
  for (unsigned seed = 0; seed < 500; ++seed) {
    testsupport::TermGen gen(seed);
    auto env = testsupport::TermGen::seeded_env();
    auto parts = gen.redex_parts(env, 5);
    TermPtr after = substitute(parts.lam_body, parts.var, parts.arg);
    std::set<std::string> expected = free_vars(parts.lam_body);
    bool occurs = expected.erase(parts.var) > 0;
    if (occurs) {
      auto af = free_vars(parts.arg);
      expected.insert(af.begin(), af.end());
    }
    if (free_vars(after) != expected) {
      note("capture violation at seed " + std::to_string(seed));
      return false;
    }

    auto env2 = testsupport::TermGen::seeded_env();
    TermPtr t = gen.formula(env2, 6);
    TermPtr nf;
    try {
      nf = beta_reduce(t);
    } catch (const Error& e) {
      note("reduction threw at seed " + std::to_string(seed) + ": " + e.what());
      return false;
    }
    if (!(*beta_reduce(nf) == *nf)) {
      note("reduction not idempotent at seed " + std::to_string(seed));
      return false;
    }
    auto before = free_vars(t);
    for (const auto& v : free_vars(nf)) {
      if (!before.count(v)) {
        note("free variable appeared from nowhere at seed " + std::to_string(seed));
        return false;
      }
    }
  }

  // 100 random trees: edge coverage and priority depth
  std::mt19937 rng(99);
  auto h = ObliquenessHierarchy::defaults();
  for (int i = 0; i < 100; ++i) {
    DepGraph g = testsupport::random_tree(rng);
    SExprPtr s = binarize(g, h);
    struct Row {
      int head, child, depth;
      std::string label;
    };
    std::vector<Row> rows;
    std::function<int(const SExprPtr&)> head_leaf = [&](const SExprPtr& e) {
      return e->leaf ? e->node : head_leaf(e->head);
    };
    std::function<void(const SExprPtr&, int)> walk = [&](const SExprPtr& e, int depth) {
      if (e->leaf) return;
      rows.push_back({head_leaf(e), head_leaf(e->child), depth, e->label});
      walk(e->head, depth + 1);
      walk(e->child, depth + 1);
    };
    walk(s, 0);
    if (rows.size() != g.edges.size()) {
      note("edge coverage failed at tree " + std::to_string(i));
      return false;
    }
    std::multiset<std::string> want, got;
    for (const auto& e : g.edges) want.insert(e.label);
    for (const auto& r : rows) got.insert(r.label);
    if (want != got) {
      note("label multiset mismatch at tree " + std::to_string(i));
      return false;
    }
    std::map<std::pair<int, int>, int> depth_of;
    for (const auto& r : rows) depth_of[{r.head, r.child}] = r.depth;
    for (const auto& a : g.edges)
      for (const auto& b : g.edges)
        if (a.head == b.head && h.rank(a.label) < h.rank(b.label) &&
            depth_of[{a.head, a.child}] <= depth_of[{b.head, b.child}]) {
          note("priority depth violated at tree " + std::to_string(i));
          return false;
        }
  }
  return true;
}

bool criterion7_scope_polarity() {
  SentenceResult a5 = run_one(testsupport::conllu_john_came_with_nothing());
  if (a5.failed || a5.scopes.size() != 1) {
    note("A.5 produced no usable scope report");
    return false;
  }
  if (scope_preds(a5.scopes[0]) != std::set<std::string>{"thing", "with"}) {
    note("A.5 scope atoms wrong");
    return false;
  }
  auto all5 = formula_preds(a5.formula);
  for (std::string outside : {"came", "named", "Actor"}) {
    if (!all5.count(outside) || scope_preds(a5.scopes[0]).count(outside)) {
      note("A.5 expected " + outside + " outside the negation");
      return false;
    }
  }

  SentenceResult a4 = run_one(testsupport::conllu_nobody_came());
  if (a4.failed || a4.scopes.size() != 1) {
    note("A.4 produced no usable scope report");
    return false;
  }
  if (scope_preds(a4.scopes[0]) != formula_preds(a4.formula)) {
    note("A.4 expected every predicate inside the negation");
    return false;
  }
  return true;
}

}  // namespace

int main() {
  bool ok;
  double secs;

  secs = run_timed(criterion1_golden_derivations, &ok);
  if (secs >= 1.0) {
    note("took " + std::to_string(secs) + "s, limit 1s");
    ok = false;
  }
  report(1, "golden derivations for the five appendix sentences (< 1 s)", ok);

  report(2, "Malta example: formula, quantifier nesting and scope atoms",
         criterion2_malta());

  report(3, "enhancement goldens for Fig. 3 and Fig. 4", criterion3_enhancement());

  report(4, "trace contains the EQ step for 'No man came'", criterion4_trace());

  secs = run_timed(criterion5_oracle, &ok);
  if (secs >= 1.0) {
    note("took " + std::to_string(secs) + "s, limit 1s");
    ok = false;
  }
  report(5, "universal/negated-existential equivalence on all small models (< 1 s)", ok);

  secs = run_timed(criterion6_property_suites, &ok);
  if (secs >= 30.0) {
    note("took " + std::to_string(secs) + "s, limit 30s");
    ok = false;
  }
  report(6, "property suites: 500 terms, 100 graphs (< 30 s)", ok);

  report(7, "scope polarity for 'John came with nothing' and 'Nobody came'",
         criterion7_scope_polarity());

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
