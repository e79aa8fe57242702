#include "udlneg/conllu.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace udlneg {

const DepNode& DepGraph::node(int index) const {
  for (const auto& n : nodes)
    if (n.index == index) return n;
  throw Error("no node with index " + std::to_string(index));
}

DepNode& DepGraph::node(int index) {
  for (auto& n : nodes)
    if (n.index == index) return n;
  throw Error("no node with index " + std::to_string(index));
}

const DepEdge* DepGraph::incoming(int child) const {
  for (const auto& e : edges)
    if (e.child == child) return &e;
  return nullptr;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

std::string misc_attr(const std::string& misc, const std::string& key) {
  for (const auto& part : split(misc, '|')) {
    if (part.size() > key.size() + 1 && part.compare(0, key.size(), key) == 0 &&
        part[key.size()] == '=')
      return part.substr(key.size() + 1);
  }
  return "";
}

struct PendingToken {
  DepNode node;
  int head;
  std::string deprel;
  int line_no;
};

DepGraph finish_sentence(std::vector<PendingToken>& toks, std::vector<std::string>& comments,
                         int sentence_no) {
  DepGraph g;
  g.comments = std::move(comments);
  comments.clear();
  for (const auto& c : g.comments) {
    const std::string prefix = "# text =";
    if (c.compare(0, prefix.size(), prefix) == 0) {
      std::string v = c.substr(prefix.size());
      if (!v.empty() && v.front() == ' ') v.erase(v.begin());
      g.text = v;
    }
  }

  std::map<int, int> head_of;
  for (auto& t : toks) {
    g.nodes.push_back(t.node);
    head_of[t.node.index] = t.head;
  }
  for (auto& t : toks) {
    if (t.head != 0 && !head_of.count(t.head))
      throw MalformedLine(t.line_no, "head " + std::to_string(t.head) + " is not a token id");
    if (t.head == 0) {
      if (g.root != 0) throw MultipleRoots(sentence_no);
      g.root = t.node.index;
    } else {
      g.edges.push_back({t.head, t.node.index, t.deprel});
    }
  }
  // follow head links; revisiting a token in one chain means a cycle
  for (const auto& t : toks) {
    int at = t.node.index;
    std::set<int> seen;
    while (at != 0) {
      if (!seen.insert(at).second) throw CyclicTree(sentence_no);
      at = head_of[at];
    }
  }
  if (g.root == 0 && !g.nodes.empty()) throw CyclicTree(sentence_no);
  toks.clear();
  return g;
}

}  // namespace

std::vector<DepGraph> parse_conllu(const std::string& text) {
  std::vector<DepGraph> out;
  std::vector<PendingToken> toks;
  std::vector<std::string> comments;
  int line_no = 0;
  int sentence_no = 1;

  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    if (toks.empty() && comments.empty()) return;
    if (toks.empty()) {
      comments.clear();  // comment-only block, nothing to attach it to
      return;
    }
    out.push_back(finish_sentence(toks, comments, sentence_no));
    ++sentence_no;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      comments.push_back(line);
      continue;
    }
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10)
      throw MalformedLine(line_no, "expected 10 columns, got " + std::to_string(cols.size()));
    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos)
      continue;  // multiword-token range or empty node
    if (!all_digits(id)) throw MalformedLine(line_no, "bad token id '" + id + "'");

    PendingToken t;
    t.line_no = line_no;
    t.node.index = std::stoi(id);
    t.node.form = cols[1];
    t.node.lemma = cols[2];
    t.node.upos = cols[3];
    t.node.xpos = cols[4];
    t.node.feats = cols[5];
    if (!all_digits(cols[6])) throw MalformedLine(line_no, "bad head '" + cols[6] + "'");
    t.head = std::stoi(cols[6]);
    t.deprel = lower(cols[7]);
    t.node.deps = cols[8];
    t.node.misc = cols[9];
    t.node.ner = misc_attr(cols[9], "NER");
    if (t.node.lemma.empty() || t.node.lemma == "_")
      throw MalformedLine(line_no, "empty lemma");
    if (t.head == t.node.index) throw CyclicTree(sentence_no);
    for (const auto& prev : toks)
      if (prev.node.index == t.node.index)
        throw MalformedLine(line_no, "duplicate token id " + id);
    toks.push_back(std::move(t));
  }
  flush();
  return out;
}

std::string write_conllu(const std::vector<DepGraph>& graphs) {
  std::ostringstream out;
  for (const auto& g : graphs) {
    for (const auto& c : g.comments) out << c << "\n";
    for (const auto& n : g.nodes) {
      int head = 0;
      std::string deprel = "root";
      if (const DepEdge* e = g.incoming(n.index)) {
        head = e->head;
        deprel = e->label;
      }
      out << n.index << '\t' << n.form << '\t' << n.lemma << '\t' << n.upos << '\t' << n.xpos
          << '\t' << n.feats << '\t' << head << '\t' << deprel << '\t' << n.deps << '\t'
          << n.misc << "\n";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace udlneg
