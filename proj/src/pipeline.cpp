#include "udlneg/pipeline.hpp"

#include <cstdlib>
#include <filesystem>

#include "udlneg/term_io.hpp"

namespace udlneg {

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig cfg;
  const char* dir = std::getenv("UDLNEG_LEXICON_DIR");
  if (dir && *dir) {
    namespace fs = std::filesystem;
    fs::path base(dir);
    if (fs::exists(base / "cues.json")) cfg.cues = CueLexicon::from_file((base / "cues.json").string());
    if (fs::exists(base / "edges.lex")) cfg.edges = EdgeLexicon::from_file((base / "edges.lex").string());
    if (fs::exists(base / "hierarchy.txt"))
      cfg.hierarchy = ObliquenessHierarchy::from_file((base / "hierarchy.txt").string());
  }
  return cfg;
}

TermPtr compose(const SExprPtr& s, const DepGraph& g, const PipelineConfig& cfg,
                Trace* trace, std::vector<std::string>* warnings) {
  if (s->leaf) return word_term(g.node(s->node), cfg.cues);
  TermPtr head = compose(s->head, g, cfg, trace, warnings);
  TermPtr child = compose(s->child, g, cfg, trace, warnings);
  TermPtr assembled = mk::app(mk::app(edge_term(s->label, cfg.edges, warnings), head), child);
  if (trace) trace->push_back({Rule::Compose, s->label, assembled, assembled});
  try {
    return beta_reduce(assembled, trace);
  } catch (const IllTyped& e) {
    throw IllTyped("edge '" + s->label + "': " + e.what());
  }
}

SentenceResult run_sentence(const DepGraph& g, const PipelineConfig& cfg, int id) {
  SentenceResult r;
  r.id = id;
  r.text = g.text;
  try {
    r.graph = enhance(g, cfg.cues, &r.warnings);
    r.sexpr = binarize(r.graph, cfg.hierarchy);
    Trace* tr = cfg.trace ? &r.trace : nullptr;
    TermPtr open = compose(r.sexpr, r.graph, cfg, tr, &r.warnings);
    r.formula = existential_closure(open, tr);
    r.scopes = extract_scope(r.formula);
  } catch (const Error& e) {
    r.failed = true;
    r.error = e.what();
  }
  return r;
}

std::vector<SentenceResult> run_batch(const std::vector<DepGraph>& graphs,
                                      const PipelineConfig& cfg) {
  std::vector<SentenceResult> out;
  out.reserve(graphs.size());
  int id = 1;
  for (const auto& g : graphs) out.push_back(run_sentence(g, cfg, id++));
  return out;
}

nlohmann::json result_to_json(const SentenceResult& r) {
  using nlohmann::json;
  json j;
  j["id"] = r.id;
  if (!r.text.empty()) j["text"] = r.text;
  if (r.failed) {
    j["error"] = r.error;
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    return j;
  }
  json edges = json::array();
  for (const auto& e : r.graph.edges)
    edges.push_back(json{{"head", e.head}, {"child", e.child}, {"label", e.label}});
  j["edges"] = edges;
  j["sexpr"] = sexpr_to_text(r.sexpr, r.graph);
  TermPtr shown = display_rename(r.formula);
  j["fol"] = to_text(shown);
  j["formula"] = term_to_json(shown);
  // report scopes against the display names the formula is printed with
  std::vector<ScopeReport> shown_scopes = extract_scope(shown);
  json scopes = json::array();
  for (const auto& s : shown_scopes) {
    json atoms = json::array();
    for (const auto& a : s.atoms) {
      json atom{{"pred", a.pred}, {"repr", a.repr}};
      if (a.token) atom["token"] = a.token;
      atoms.push_back(atom);
    }
    scopes.push_back(json{
        {"negation", s.negation_id}, {"atoms", atoms}, {"tokens", s.token_indices}});
  }
  j["scopes"] = scopes;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  if (!r.trace.empty()) {
    json steps = json::array();
    for (const auto& st : r.trace)
      steps.push_back(json{{"rule", rule_tag(st)}, {"after", pretty(st.after)}});
    j["trace"] = steps;
  }
  return j;
}

std::string format_trace(const Trace& trace) {
  std::string out;
  for (const auto& s : trace) {
    if (s.rule == Rule::Compose) {
      out += "compose(" + s.label + "): " + pretty(s.after) + "\n";
    } else {
      out += "  \xe2\x86\x92_" + rule_tag(s) + " " + pretty(s.after) + "\n";
    }
  }
  return out;
}

}  // namespace udlneg
