#include "udlneg/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace udlneg {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

using namespace mk;

// λP.λQ.λf. P(λx. f(x) ∧ Q(λy. role(x_e, y_a)))
TermPtr scoped_modifier(const std::string& role) {
  return lam("P", lam("Q", lam("f",
      app(var("P"),
          lam("x", conj(app(var("f"), var("x")),
                        app(var("Q"),
                            lam("y", pred(role, {ev("x"), ind("y")})))))))));
}

// λP.λQ.λf. Q(λy. P(λx. role(x_e, y_a) ∧ f(x)))
TermPtr inverted_argument(const std::string& role) {
  return lam("P", lam("Q", lam("f",
      app(var("Q"),
          lam("y", app(var("P"),
                       lam("x", conj(pred(role, {ev("x"), ind("y")}),
                                     app(var("f"), var("x"))))))))));
}

// λP.λQ.λf. ¬P(λx. f(x))
TermPtr negation() {
  return lam("P", lam("Q", lam("f",
      neg(app(var("P"), lam("x", app(var("f"), var("x"))))))));
}

// λP.λQ.λf. ∀x.(P(λy. EQ(x,y)) → ¬f(x))
TermPtr universal_negation() {
  return lam("P", lam("Q", lam("f",
      forall("x", implies(app(var("P"), lam("y", eq("x", "y"))),
                          neg(app(var("f"), var("x"))))))));
}

// λP.λQ.λf. ∀x.(P(λy. EQ(x,y)) → f(x))
TermPtr universal() {
  return lam("P", lam("Q", lam("f",
      forall("x", implies(app(var("P"), lam("y", eq("x", "y"))),
                          app(var("f"), var("x")))))));
}

// λP.λQ.λf. P(λx. f(x)) — keeps the head, ignores the child
TermPtr head_only() {
  return lam("P", lam("Q", lam("f",
      app(var("P"), lam("x", app(var("f"), var("x")))))));
}

}  // namespace

TermPtr edge_template(const std::string& template_id, const std::string& role) {
  if (template_id == "scoped_modifier") return scoped_modifier(role);
  if (template_id == "inverted_argument") return inverted_argument(role);
  if (template_id == "negation") return negation();
  if (template_id == "universal_negation") return universal_negation();
  if (template_id == "universal") return universal();
  if (template_id == "head_only") return head_only();
  throw Error("unknown edge template: " + template_id);
}

EdgeLexicon EdgeLexicon::defaults() {
  return EdgeLexicon{{
      {"nsubj", "scoped_modifier", "Actor"},
      {"nsubj:inv", "inverted_argument", "Actor"},
      {"dobj", "scoped_modifier", "Theme"},
      {"dobj:inv", "inverted_argument", "Theme"},
      {"nsubjpass", "scoped_modifier", "Theme"},
      {"nsubjpass:inv", "inverted_argument", "Theme"},
      {"nmod:*", "scoped_modifier", "$case"},
      {"advmod", "scoped_modifier", "Manner"},
      {"neg", "negation", "-"},
      {"neg:univ", "universal_negation", "-"},
      {"det:univ", "universal", "-"},
      {"det", "head_only", "-"},
      {"aux", "head_only", "-"},
      {"auxpass", "head_only", "-"},
      {"cop", "head_only", "-"},
      {"case", "head_only", "-"},
      {"mark", "head_only", "-"},
      {"punct", "head_only", "-"},
  }};
}

EdgeLexicon EdgeLexicon::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open edge lexicon: " + path);
  EdgeLexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream row(line);
    EdgeRule r;
    if (!(row >> r.pattern)) continue;
    if (!(row >> r.template_id >> r.role))
      throw Error(path + ":" + std::to_string(line_no) +
                  ": expected 'label template role'");
    lex.rules.push_back(std::move(r));
  }
  if (lex.rules.empty()) throw Error("empty edge lexicon: " + path);
  return lex;
}

const EdgeRule* EdgeLexicon::match(const std::string& label) const {
  for (const auto& r : rules) {
    if (r.pattern == label) return &r;
    if (r.pattern.size() > 2 && r.pattern.compare(r.pattern.size() - 2, 2, ":*") == 0) {
      std::string prefix = r.pattern.substr(0, r.pattern.size() - 2);
      if (label.compare(0, prefix.size() + 1, prefix + ":") == 0) return &r;
    }
  }
  return nullptr;
}

TermPtr edge_term(const std::string& label, const EdgeLexicon& lex,
                  std::vector<std::string>* warnings) {
  const EdgeRule* r = lex.match(label);
  if (!r) {
    if (warnings)
      warnings->push_back("no semantics for edge label '" + label +
                          "', using the head-preserving fallback");
    return head_only();
  }
  std::string role = r->role;
  if (role == "$case") {
    size_t colon = label.rfind(':');
    role = colon == std::string::npos ? label : label.substr(colon + 1);
  }
  return edge_template(r->template_id, role);
}

TermPtr word_term(const DepNode& n, const CueLexicon& cues) {
  using namespace mk;
  const std::string lemma = lower(n.lemma);

  // λf.¬∃x. R(x_a) ∧ f(x)
  auto cue_it = cues.lexical_cues.find(lemma);
  if (!n.cue_pred.empty() || cue_it != cues.lexical_cues.end()) {
    const std::string& restrictor = n.cue_pred.empty() ? cue_it->second : n.cue_pred;
    return lam("f", neg(exists("x", conj(pred(restrictor, {ind("x")}, n.index),
                                         app(var("f"), var("x"))))));
  }

  bool vacuous_class = n.vacuous || cues.plain_negators.count(lemma) ||
                       cues.universal_negatives.count(lemma) ||
                       cues.universal_determiners.count(lemma) || n.upos == "AUX" ||
                       n.upos == "DET" || n.upos == "ADP" || n.upos == "PART";
  if (vacuous_class) return lam("f", tru());

  if (n.upos == "PROPN") {
    std::string ner = n.ner.empty() ? "PER" : n.ner;
    return lam("f", exists("x", conj(pred("named", {ind("x"), cst(n.form), cst(ner)}, n.index),
                                     app(var("f"), var("x")))));
  }
  Sort s = n.upos == "VERB" ? Sort::Event : Sort::Individual;
  PredArg arg = s == Sort::Event ? ev("x") : ind("x");
  return lam("f", exists("x", conj(pred(n.lemma, {arg}, n.index), app(var("f"), var("x")))));
}

}  // namespace udlneg
