#include "udlneg/term_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace udlneg {

namespace {

// A term is "right-open" when its textual form keeps absorbing material to
// the right (quantifier and lambda bodies), so it needs parentheses in
// non-final operand positions.
bool right_open(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
      return true;
    case TermKind::Not:
      return right_open(t->a);
    case TermKind::And:
    case TermKind::Implies:
      return right_open(t->b);
    default:
      return false;
  }
}

void flatten_conj(const TermPtr& t, std::vector<TermPtr>& out) {
  if (t->kind == TermKind::And) {
    flatten_conj(t->a, out);
    flatten_conj(t->b, out);
  } else {
    out.push_back(t);
  }
}

std::string canon(const TermPtr& t);

std::string canon_arg(const PredArg& a) {
  if (a.is_const) return "\"" + a.name + "\"";
  return a.name + (a.sort == Sort::Event ? "_e" : "_a");
}

std::string canon(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::True:
      return "true";
    case TermKind::Var:
      return t->name;
    case TermKind::Proj:
      return t->name + (t->sort == Sort::Event ? "_e" : "_a");
    case TermKind::Pred: {
      std::string s = t->name + "(";
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (i) s += ", ";
        s += canon_arg(t->args[i]);
      }
      return s + ")";
    }
    case TermKind::Eq:
      return "EQ(" + t->eq_lhs + ", " + t->eq_rhs + ")";
    case TermKind::Not: {
      const TermPtr& a = t->a;
      if (a->kind == TermKind::And || a->kind == TermKind::Implies)
        return "not (" + canon(a) + ")";
      return "not " + canon(a);
    }
    case TermKind::And: {
      std::vector<TermPtr> cs;
      flatten_conj(t, cs);
      std::string s;
      for (size_t i = 0; i < cs.size(); ++i) {
        bool last = i + 1 == cs.size();
        bool parens = cs[i]->kind == TermKind::Implies || (!last && right_open(cs[i]));
        if (i) s += " & ";
        s += parens ? "(" + canon(cs[i]) + ")" : canon(cs[i]);
      }
      return s;
    }
    case TermKind::Implies: {
      bool lp = t->a->kind == TermKind::Implies || right_open(t->a);
      std::string l = lp ? "(" + canon(t->a) + ")" : canon(t->a);
      return l + " -> " + canon(t->b);
    }
    case TermKind::Exists:
    case TermKind::Forall:
    case TermKind::Lam: {
      const char* kw = t->kind == TermKind::Exists ? "exists"
                       : t->kind == TermKind::Forall ? "forall"
                                                     : "lam";
      std::string body = t->a->kind == TermKind::Implies ? "(" + canon(t->a) + ")" : canon(t->a);
      return std::string(kw) + " " + t->name + " . " + body;
    }
    case TermKind::App: {
      std::string fn;
      if (t->a->kind == TermKind::Var || t->a->kind == TermKind::App)
        fn = canon(t->a);
      else
        fn = "(" + canon(t->a) + ")";
      return fn + "(" + canon(t->b) + ")";
    }
  }
  return "?";
}

}  // namespace

std::string to_text(const TermPtr& t) { return canon(t); }

// ---------------------------------------------------------------------------
// Parsing.

namespace {

struct Token {
  enum Kind { Ident, Str, LParen, RParen, Comma, Dot, Amp, Arrow, End } kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == '"') {
      size_t j = i + 1;
      std::string text;
      while (j < s.size() && s[j] != '"') text += s[j++];
      if (j >= s.size()) throw TermParseError("unterminated string constant");
      out.push_back({Token::Str, text, i});
      i = j + 1;
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Arrow, "->", i});
      i += 2;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      case ',': k = Token::Comma; break;
      case '.': k = Token::Dot; break;
      case '&': k = Token::Amp; break;
      default:
        throw TermParseError(std::string("unexpected character '") + c + "' at " +
                             std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

// Identifiers ending in _e/_a denote projections in term positions.
bool split_proj(const std::string& ident, std::string* base, Sort* sort) {
  if (ident.size() > 2 && ident[ident.size() - 2] == '_') {
    char c = ident.back();
    if (c == 'e' || c == 'a') {
      *base = ident.substr(0, ident.size() - 2);
      *sort = c == 'e' ? Sort::Event : Sort::Individual;
      return true;
    }
  }
  return false;
}

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;

  const Token& peek() const { return toks[at]; }
  Token next() { return toks[at++]; }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw TermParseError(std::string("expected ") + what + " near position " +
                           std::to_string(peek().pos));
    ++at;
  }
  bool ident_is(const char* kw) const {
    return peek().kind == Token::Ident && peek().text == kw;
  }

  TermPtr term() { return implies(); }

  TermPtr implies() {
    TermPtr l = conj();
    if (peek().kind == Token::Arrow) {
      next();
      return mk::implies(l, implies());
    }
    return l;
  }

  TermPtr conj() {
    TermPtr l = unary();
    while (peek().kind == Token::Amp) {
      next();
      l = mk::conj(l, unary());
    }
    return l;
  }

  TermPtr unary() {
    if (ident_is("not")) {
      next();
      return mk::neg(unary());
    }
    if (ident_is("forall") || ident_is("exists") || ident_is("lam")) {
      std::string kw = next().text;
      if (peek().kind != Token::Ident) throw TermParseError("expected a variable after " + kw);
      std::string v = next().text;
      expect(Token::Dot, "'.'");
      TermPtr body = implies();
      if (kw == "forall") return mk::forall(v, body);
      if (kw == "exists") return mk::exists(v, body);
      return mk::lam(v, body);
    }
    return postfix();
  }

  // An argument list is a predicate when every argument is a projection or a
  // quoted constant; otherwise it is (curried) application.
  TermPtr postfix() {
    TermPtr base;
    bool base_is_name = false;
    std::string name;
    if (ident_is("true")) {
      next();
      base = mk::tru();
    } else if (peek().kind == Token::LParen) {
      next();
      base = implies();
      expect(Token::RParen, "')'");
    } else if (peek().kind == Token::Ident) {
      name = next().text;
      base_is_name = true;
    } else {
      throw TermParseError("expected a term near position " + std::to_string(peek().pos));
    }

    bool first_group = true;
    while (peek().kind == Token::LParen) {
      next();
      struct Arg {
        TermPtr term;     // null for constants
        std::string cst;  // constant text
      };
      std::vector<Arg> args;
      if (peek().kind != Token::RParen) {
        for (;;) {
          if (peek().kind == Token::Str) {
            args.push_back({nullptr, next().text});
          } else {
            args.push_back({implies(), ""});
          }
          if (peek().kind != Token::Comma) break;
          next();
        }
      }
      expect(Token::RParen, "')'");
      if (args.empty()) throw TermParseError("empty argument list");

      if (first_group && base_is_name && name == "EQ") {
        if (args.size() != 2 || !args[0].term || !args[1].term ||
            args[0].term->kind != TermKind::Var || args[1].term->kind != TermKind::Var)
          throw TermParseError("EQ takes two variables");
        base = mk::eq(args[0].term->name, args[1].term->name);
        base_is_name = false;
        first_group = false;
        continue;
      }

      bool predicational =
          std::all_of(args.begin(), args.end(), [](const Arg& a) {
            return !a.term || a.term->kind == TermKind::Proj;
          });
      if (first_group && base_is_name && predicational) {
        std::vector<PredArg> pargs;
        for (const auto& a : args) {
          if (!a.term)
            pargs.push_back(mk::cst(a.cst));
          else
            pargs.push_back(a.term->sort == Sort::Event ? mk::ev(a.term->name)
                                                        : mk::ind(a.term->name));
        }
        base = mk::pred(name, std::move(pargs));
        base_is_name = false;
        first_group = false;
        continue;
      }

      if (base_is_name) {
        base = ident_term(name);
        base_is_name = false;
      }
      if (base->kind == TermKind::Pred)
        throw TermParseError("a predicate cannot be applied further");
      for (const auto& a : args) {
        if (!a.term) throw TermParseError("string constant outside a predicate");
        base = mk::app(base, a.term);
      }
      first_group = false;
    }

    if (base_is_name) base = ident_term(name);
    return base;
  }

  static TermPtr ident_term(const std::string& ident) {
    std::string v;
    Sort s;
    if (split_proj(ident, &v, &s)) return mk::proj(v, s);
    return mk::var(ident);
  }
};

}  // namespace

TermPtr parse_term(const std::string& text) {
  Parser p{tokenize(text)};
  TermPtr t = p.term();
  if (p.peek().kind != Token::End)
    throw TermParseError("trailing input at position " + std::to_string(p.peek().pos));
  return t;
}

// ---------------------------------------------------------------------------
// Display form.

namespace {

struct SortEvidence {
  bool event = false;
  bool individual = false;
  bool fn_position = false;
};

// Evidence for `name` inside `t`, stopping at shadowing binders.
void gather_evidence(const TermPtr& t, const std::string& name, SortEvidence* ev) {
  switch (t->kind) {
    case TermKind::Lam:
    case TermKind::Exists:
    case TermKind::Forall:
      if (t->name == name) return;
      gather_evidence(t->a, name, ev);
      return;
    case TermKind::App:
      if (t->a->kind == TermKind::Var && t->a->name == name) ev->fn_position = true;
      gather_evidence(t->a, name, ev);
      gather_evidence(t->b, name, ev);
      return;
    case TermKind::Not:
      gather_evidence(t->a, name, ev);
      return;
    case TermKind::And:
    case TermKind::Implies:
      gather_evidence(t->a, name, ev);
      gather_evidence(t->b, name, ev);
      return;
    case TermKind::Proj:
      if (t->name == name)
        (t->sort == Sort::Event ? ev->event : ev->individual) = true;
      return;
    case TermKind::Pred:
      for (const auto& a : t->args)
        if (!a.is_const && a.name == name)
          (a.sort == Sort::Event ? ev->event : ev->individual) = true;
      return;
    default:
      return;
  }
}

bool single_sorted(const TermPtr& binder_body, const std::string& name) {
  SortEvidence ev;
  gather_evidence(binder_body, name, &ev);
  return !(ev.event && ev.individual);
}

std::string pretty_rec(const TermPtr& t, std::vector<std::string>& bare);

std::string pretty_var(const std::string& n) { return n; }

std::string pretty_proj(const std::string& n, Sort s, const std::vector<std::string>& bare) {
  if (std::find(bare.begin(), bare.end(), n) != bare.end()) return n;
  return n + (s == Sort::Event ? "_e" : "_a");
}

std::string pretty_rec(const TermPtr& t, std::vector<std::string>& bare) {
  switch (t->kind) {
    case TermKind::True:
      return "TRUE";
    case TermKind::Var:
      return pretty_var(t->name);
    case TermKind::Proj:
      return pretty_proj(t->name, t->sort, bare);
    case TermKind::Pred: {
      std::string s = t->name + "(";
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (i) s += ",";
        const auto& a = t->args[i];
        s += a.is_const ? a.name : pretty_proj(a.name, a.sort, bare);
      }
      return s + ")";
    }
    case TermKind::Eq:
      return "EQ(" + t->eq_lhs + "," + t->eq_rhs + ")";
    case TermKind::Not: {
      const TermPtr& a = t->a;
      if (a->kind == TermKind::And || a->kind == TermKind::Implies)
        return "\xc2\xac(" + pretty_rec(a, bare) + ")";
      return "\xc2\xac" + pretty_rec(a, bare);
    }
    case TermKind::And: {
      std::vector<TermPtr> cs;
      flatten_conj(t, cs);
      std::string s;
      for (size_t i = 0; i < cs.size(); ++i) {
        bool last = i + 1 == cs.size();
        bool parens = cs[i]->kind == TermKind::Implies || (!last && right_open(cs[i]));
        if (i) s += " \xe2\x88\xa7 ";
        s += parens ? "(" + pretty_rec(cs[i], bare) + ")" : pretty_rec(cs[i], bare);
      }
      return s;
    }
    case TermKind::Implies: {
      bool lp = t->a->kind == TermKind::Implies || right_open(t->a);
      std::string l = lp ? "(" + pretty_rec(t->a, bare) + ")" : pretty_rec(t->a, bare);
      return l + " \xe2\x86\x92 " + pretty_rec(t->b, bare);
    }
    case TermKind::Exists:
    case TermKind::Forall:
    case TermKind::Lam: {
      const char* kw = t->kind == TermKind::Exists ? "\xe2\x88\x83"
                       : t->kind == TermKind::Forall ? "\xe2\x88\x80"
                                                     : "\xce\xbb";
      bool drop = single_sorted(t->a, t->name);
      size_t mark = bare.size();
      if (drop) bare.push_back(t->name);
      std::string body = pretty_rec(t->a, bare);
      bare.resize(mark);
      std::string sep;
      if (t->a->kind == TermKind::Implies)
        body = "(" + body + ")";
      else if (t->a->kind != TermKind::Exists && t->a->kind != TermKind::Forall &&
               t->a->kind != TermKind::Lam)
        sep = " ";
      return std::string(kw) + t->name + "." + sep + body;
    }
    case TermKind::App: {
      std::string fn;
      if (t->a->kind == TermKind::Var || t->a->kind == TermKind::App)
        fn = pretty_rec(t->a, bare);
      else
        fn = "(" + pretty_rec(t->a, bare) + ")";
      return fn + "(" + pretty_rec(t->b, bare) + ")";
    }
  }
  return "?";
}

}  // namespace

std::string pretty(const TermPtr& t) {
  std::vector<std::string> bare;
  return pretty_rec(t, bare);
}

// ---------------------------------------------------------------------------
// Display renaming.

namespace {

struct PoolState {
  std::set<std::string> reserved;
  int next_event = 0;
  int next_individual = 0;

  static std::string variant(const std::string& stem, int primes) {
    if (primes <= 3) return stem + std::string(primes, '\'');
    return stem + std::to_string(primes + 1);
  }

  std::string take_event() {
    for (;;) {
      std::string c = variant("e", next_event++);
      if (!reserved.count(c)) {
        reserved.insert(c);
        return c;
      }
    }
  }

  std::string take_individual() {
    static const char* stems[3] = {"x", "y", "z"};
    for (;;) {
      int i = next_individual++;
      std::string c = variant(stems[i % 3], i / 3);
      if (!reserved.count(c)) {
        reserved.insert(c);
        return c;
      }
    }
  }
};

void collect_kept(const TermPtr& t, std::set<std::string>& kept) {
  switch (t->kind) {
    case TermKind::Exists:
    case TermKind::Forall: {
      SortEvidence ev;
      gather_evidence(t->a, t->name, &ev);
      bool renameable = !ev.fn_position && !(ev.event && ev.individual);
      if (!renameable) kept.insert(t->name);
      collect_kept(t->a, kept);
      return;
    }
    case TermKind::Lam:
      kept.insert(t->name);
      collect_kept(t->a, kept);
      return;
    case TermKind::Not:
      collect_kept(t->a, kept);
      return;
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies:
      collect_kept(t->a, kept);
      collect_kept(t->b, kept);
      return;
    default:
      return;
  }
}

TermPtr rename_walk(const TermPtr& t, PoolState& pool,
                    std::map<std::string, std::vector<std::string>>& env) {
  auto mapped = [&](const std::string& n) {
    auto it = env.find(n);
    if (it == env.end() || it->second.empty()) return n;
    return it->second.back();
  };
  switch (t->kind) {
    case TermKind::Var:
      return mapped(t->name) == t->name ? t : mk::var(mapped(t->name));
    case TermKind::Proj: {
      std::string n = mapped(t->name);
      return n == t->name ? t : mk::proj(n, t->sort);
    }
    case TermKind::Exists:
    case TermKind::Forall: {
      SortEvidence ev;
      gather_evidence(t->a, t->name, &ev);
      bool renameable = !ev.fn_position && !(ev.event && ev.individual);
      std::string v = t->name;
      if (renameable)
        v = ev.event ? pool.take_event() : pool.take_individual();
      env[t->name].push_back(v);
      TermPtr body = rename_walk(t->a, pool, env);
      env[t->name].pop_back();
      if (v == t->name && body == t->a) return t;
      return t->kind == TermKind::Exists ? mk::exists(v, body) : mk::forall(v, body);
    }
    case TermKind::Lam: {
      env[t->name].push_back(t->name);
      TermPtr body = rename_walk(t->a, pool, env);
      env[t->name].pop_back();
      return body == t->a ? t : mk::lam(t->name, body);
    }
    case TermKind::Not: {
      TermPtr a = rename_walk(t->a, pool, env);
      return a == t->a ? t : mk::neg(a);
    }
    case TermKind::App:
    case TermKind::And:
    case TermKind::Implies: {
      TermPtr a = rename_walk(t->a, pool, env);
      TermPtr b = rename_walk(t->b, pool, env);
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

}  // namespace

TermPtr display_rename(const TermPtr& t) {
  PoolState pool;
  pool.reserved = free_vars(t);
  std::set<std::string> kept;
  collect_kept(t, kept);
  pool.reserved.insert(kept.begin(), kept.end());
  std::map<std::string, std::vector<std::string>> env;
  return rename_walk(t, pool, env);
}

// ---------------------------------------------------------------------------
// JSON form.

nlohmann::json term_to_json(const TermPtr& t) {
  using nlohmann::json;
  switch (t->kind) {
    case TermKind::True:
      return json{{"true", true}};
    case TermKind::Var:
      return json{{"var", t->name}};
    case TermKind::Proj:
      return json{{"proj", t->name}, {"sort", t->sort == Sort::Event ? "e" : "a"}};
    case TermKind::Lam:
      return json{{"lam", t->name}, {"body", term_to_json(t->a)}};
    case TermKind::Exists:
      return json{{"exists", t->name}, {"body", term_to_json(t->a)}};
    case TermKind::Forall:
      return json{{"forall", t->name}, {"body", term_to_json(t->a)}};
    case TermKind::App:
      return json{{"app", json::array({term_to_json(t->a), term_to_json(t->b)})}};
    case TermKind::And:
      return json{{"and", json::array({term_to_json(t->a), term_to_json(t->b)})}};
    case TermKind::Implies:
      return json{{"implies", json::array({term_to_json(t->a), term_to_json(t->b)})}};
    case TermKind::Not:
      return json{{"not", term_to_json(t->a)}};
    case TermKind::Pred: {
      json args = json::array();
      for (const auto& a : t->args) {
        if (a.is_const)
          args.push_back(json{{"const", a.name}});
        else
          args.push_back(json{{"proj", a.name}, {"sort", a.sort == Sort::Event ? "e" : "a"}});
      }
      json j{{"pred", t->name}, {"args", args}};
      if (t->token) j["token"] = t->token;
      return j;
    }
    case TermKind::Eq:
      return json{{"eq", json::array({t->eq_lhs, t->eq_rhs})}};
  }
  return nullptr;
}

TermPtr term_from_json(const nlohmann::json& j) {
  using nlohmann::json;
  if (!j.is_object()) throw TermParseError("term JSON must be an object");
  auto pair = [&](const char* key) {
    const json& arr = j.at(key);
    if (!arr.is_array() || arr.size() != 2) throw TermParseError("bad binary node");
    return std::pair<TermPtr, TermPtr>{term_from_json(arr[0]), term_from_json(arr[1])};
  };
  if (j.contains("true")) return mk::tru();
  if (j.contains("var")) return mk::var(j.at("var").get<std::string>());
  if (j.contains("proj")) {
    Sort s = j.at("sort").get<std::string>() == "e" ? Sort::Event : Sort::Individual;
    return mk::proj(j.at("proj").get<std::string>(), s);
  }
  if (j.contains("lam")) return mk::lam(j.at("lam").get<std::string>(), term_from_json(j.at("body")));
  if (j.contains("exists"))
    return mk::exists(j.at("exists").get<std::string>(), term_from_json(j.at("body")));
  if (j.contains("forall"))
    return mk::forall(j.at("forall").get<std::string>(), term_from_json(j.at("body")));
  if (j.contains("app")) {
    auto [a, b] = pair("app");
    return mk::app(a, b);
  }
  if (j.contains("and")) {
    auto [a, b] = pair("and");
    return mk::conj(a, b);
  }
  if (j.contains("implies")) {
    auto [a, b] = pair("implies");
    return mk::implies(a, b);
  }
  if (j.contains("not")) return mk::neg(term_from_json(j.at("not")));
  if (j.contains("pred")) {
    std::vector<PredArg> args;
    for (const auto& a : j.at("args")) {
      if (a.contains("const"))
        args.push_back(mk::cst(a.at("const").get<std::string>()));
      else
        args.push_back(a.at("sort").get<std::string>() == "e"
                           ? mk::ev(a.at("proj").get<std::string>())
                           : mk::ind(a.at("proj").get<std::string>()));
    }
    return mk::pred(j.at("pred").get<std::string>(), std::move(args),
                    j.value("token", 0));
  }
  if (j.contains("eq")) {
    const json& arr = j.at("eq");
    return mk::eq(arr.at(0).get<std::string>(), arr.at(1).get<std::string>());
  }
  throw TermParseError("unrecognized term JSON node");
}

}  // namespace udlneg
