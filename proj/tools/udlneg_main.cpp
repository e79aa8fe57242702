#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "udlneg/pipeline.hpp"
#include "udlneg/term_io.hpp"

using namespace udlneg;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open input: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_result(const SentenceResult& r, const std::string& format, bool trace) {
  if (format == "json") {
    std::cout << result_to_json(r).dump() << "\n";
    return;
  }
  if (r.failed) return;  // already reported on stderr
  if (trace && !r.trace.empty()) {
    std::cout << "# sentence " << r.id;
    if (!r.text.empty()) std::cout << ": " << r.text;
    std::cout << "\n" << format_trace(r.trace);
  }
  if (format == "sexpr") {
    std::cout << sexpr_to_text(r.sexpr, r.graph) << "\n";
  } else if (format == "scope") {
    if (r.scopes.empty()) {
      std::cout << "sentence " << r.id << ": no negation\n";
    } else {
      for (const auto& s : r.scopes) {
        std::cout << "sentence " << r.id << " not[" << s.negation_id << "]:";
        for (const auto& a : s.atoms) {
          std::cout << " " << a.pred;
          if (a.token) std::cout << "@" << a.token;
        }
        std::cout << "\n";
      }
    }
  } else {  // fol
    std::cout << to_text(display_rename(r.formula)) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"udlneg - universal dependencies to first-order logic with negation scope"};

  std::string format = "fol";
  bool trace = false;
  std::string lexicon_file, cues_file, hierarchy_file, input;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"fol", "sexpr", "json", "scope"}))
      ->capture_default_str();
  app.add_flag("--trace", trace, "Record and print the derivation");
  app.add_option("--lexicon", lexicon_file, "Edge lexicon file (label template role)");
  app.add_option("--cues", cues_file, "Cue lexicon JSON file");
  app.add_option("--hierarchy", hierarchy_file, "Obliqueness hierarchy file (one label per line)");
  app.add_option("input", input, "CoNLL-U input file, or - for stdin");

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineConfig cfg = PipelineConfig::defaults();
    cfg.trace = trace;
    if (!lexicon_file.empty()) cfg.edges = EdgeLexicon::from_file(lexicon_file);
    if (!cues_file.empty()) cfg.cues = CueLexicon::from_file(cues_file);
    if (!hierarchy_file.empty()) cfg.hierarchy = ObliquenessHierarchy::from_file(hierarchy_file);

    std::vector<DepGraph> graphs = parse_conllu(read_input(input));
    std::vector<SentenceResult> results = run_batch(graphs, cfg);

    bool any_failed = false;
    for (const auto& r : results) {
      for (const auto& w : r.warnings)
        std::cerr << "warning: sentence " << r.id << ": " << w << "\n";
      if (r.failed) {
        any_failed = true;
        std::cerr << "error: sentence " << r.id << ": " << r.error << "\n";
      }
      print_result(r, format, trace);
    }
    return any_failed ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
