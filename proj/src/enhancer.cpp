#include "udlneg/enhancer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace udlneg {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_argument_label(const std::string& l) {
  return l == "nsubj" || l == "dobj" || l == "nsubjpass";
}

bool is_adjunct_label(const std::string& l) {
  return l == "advmod" || l == "nmod" || l.rfind("nmod:", 0) == 0;
}

void warn(std::vector<std::string>* warnings, const std::string& msg) {
  if (warnings) warnings->push_back(msg);
}

}  // namespace

bool CueLexicon::disjoint() const {
  std::set<std::string> seen;
  auto add = [&](const std::string& s) { return seen.insert(s).second; };
  for (const auto& s : universal_negatives)
    if (!add(s)) return false;
  for (const auto& s : universal_determiners)
    if (!add(s)) return false;
  for (const auto& [k, v] : lexical_cues)
    if (!add(k)) return false;
  for (const auto& s : plain_negators)
    if (!add(s)) return false;
  return true;
}

CueLexicon CueLexicon::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open cue lexicon: " + path);
  nlohmann::json j;
  in >> j;
  CueLexicon c;
  if (j.contains("universal_negatives"))
    c.universal_negatives = std::set<std::string>(j["universal_negatives"].begin(),
                                                  j["universal_negatives"].end());
  if (j.contains("universal_determiners"))
    c.universal_determiners = std::set<std::string>(j["universal_determiners"].begin(),
                                                    j["universal_determiners"].end());
  if (j.contains("plain_negators"))
    c.plain_negators =
        std::set<std::string>(j["plain_negators"].begin(), j["plain_negators"].end());
  if (j.contains("lexical_cues")) {
    c.lexical_cues.clear();
    for (auto it = j["lexical_cues"].begin(); it != j["lexical_cues"].end(); ++it)
      c.lexical_cues[it.key()] = it.value().get<std::string>();
  }
  if (!c.disjoint()) throw Error("cue classes overlap in " + path);
  return c;
}

DepGraph enhance(const DepGraph& g, const CueLexicon& cues,
                 std::vector<std::string>* warnings) {
  DepGraph out = g;

  auto edge_index_of_child = [&](int child) -> int {
    for (size_t i = 0; i < out.edges.size(); ++i)
      if (out.edges[i].child == child) return static_cast<int>(i);
    return -1;
  };

  // one base relabel per edge per pass; a second distinct relabel is a bug
  std::vector<std::string> relabeled(out.edges.size());
  auto relabel = [&](int ei, const std::string& to) {
    if (!relabeled[ei].empty() && relabeled[ei] != to)
      throw ConflictingRules("edge " + std::to_string(out.edges[ei].head) + "->" +
                             std::to_string(out.edges[ei].child) + ": " + relabeled[ei] +
                             " vs " + to);
    relabeled[ei] = to;
    out.edges[ei].label = to;
  };

  std::set<int> inv_marks;
  auto request_inv = [&](int head, const std::string& what) {
    int gi = edge_index_of_child(head);
    if (gi < 0) {
      // head is the sentence root: nothing to invert, cue composes directly
      return;
    }
    if (!is_argument_label(out.edges[gi].label)) {
      if (out.edges[gi].label.size() < 4 ||
          out.edges[gi].label.substr(out.edges[gi].label.size() - 4) != ":inv")
        warn(warnings, "UnsupportedCueAttachment: " + what + " under edge '" +
                           out.edges[gi].label + "'");
      return;
    }
    inv_marks.insert(gi);
  };

  // R4: fold case dependents into the nmod label
  for (size_t i = 0; i < out.edges.size(); ++i) {
    if (out.edges[i].label != "nmod") continue;
    for (const auto& c : out.edges) {
      if (c.head == out.edges[i].child && c.label == "case") {
        relabel(static_cast<int>(i), "nmod:" + lower(out.node(c.child).lemma));
        out.node(c.child).vacuous = true;
        break;
      }
    }
  }

  // R1: neg whose child is a universal negative
  for (size_t i = 0; i < out.edges.size(); ++i) {
    if (out.edges[i].label != "neg") continue;
    if (!cues.universal_negatives.count(lower(out.node(out.edges[i].child).lemma))) continue;
    relabel(static_cast<int>(i), "neg:univ");
    request_inv(out.edges[i].head, "universal negative");
  }

  // R2: det whose child is a universal determiner
  for (size_t i = 0; i < out.edges.size(); ++i) {
    if (out.edges[i].label != "det") continue;
    if (!cues.universal_determiners.count(lower(out.node(out.edges[i].child).lemma))) continue;
    relabel(static_cast<int>(i), "det:univ");
    request_inv(out.edges[i].head, "universal determiner");
  }

  // R3: lexicalized cues
  for (auto& n : out.nodes) {
    auto it = cues.lexical_cues.find(lower(n.lemma));
    if (it == cues.lexical_cues.end()) continue;
    n.cue_pred = it->second;
    int ii = edge_index_of_child(n.index);
    if (ii < 0) continue;  // cue is the root, composes directly
    const std::string& l = out.edges[ii].label;
    if (is_argument_label(l)) {
      inv_marks.insert(ii);
    } else if (!is_adjunct_label(l) && l.substr(l.size() >= 4 ? l.size() - 4 : 0) != ":inv") {
      warn(warnings, "UnsupportedCueAttachment: cue '" + n.lemma + "' under edge '" + l + "'");
    }
  }

  for (int ei : inv_marks) out.edges[ei].label += ":inv";
  return out;
}

}  // namespace udlneg
