#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "udlneg/errors.hpp"

namespace udlneg {

// Paired variables carry an event component and an individual component;
// a projection picks one of them.
enum class Sort : unsigned char { Event, Individual };

enum class TermKind : unsigned char {
  Var,      // variable of any type (paired or higher order)
  Proj,     // x_e / x_a
  Lam,      // λv. body
  App,      // f(a)
  And,      // l ∧ r
  Not,      // ¬t
  Implies,  // l → r
  Exists,   // ∃v. body
  Forall,   // ∀v. body
  Pred,     // p(x_e, "John", ...)
  Eq,       // EQ(x, y)
  True,     // TRUE
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Argument of a predicate atom: either a sorted projection of a paired
// variable or a string constant such as "John".
struct PredArg {
  bool is_const = false;
  std::string name;              // variable name, or the constant text
  Sort sort = Sort::Individual;  // meaningful for projections only
};

bool operator==(const PredArg& a, const PredArg& b);

struct Term {
  TermKind kind = TermKind::True;
  std::string name;            // Var/Proj: variable; Lam/Exists/Forall: bound
                               // variable; Pred: predicate name
  Sort sort = Sort::Event;     // Proj only
  TermPtr a, b;                // Lam/Not/Exists/Forall: a = body;
                               // App: a = fn, b = arg; And/Implies: a, b
  std::vector<PredArg> args;   // Pred only
  std::string eq_lhs, eq_rhs;  // Eq only
  int token = 0;               // Pred: 1-based source token, 0 if untraceable
};

// Structural equality, variable names included (use alpha_equal for
// name-insensitive comparison). Pred tokens are ignored.
bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

namespace mk {
TermPtr var(std::string name);
TermPtr proj(std::string var, Sort sort);
TermPtr lam(std::string v, TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr conj(TermPtr l, TermPtr r);
TermPtr neg(TermPtr t);
TermPtr implies(TermPtr l, TermPtr r);
TermPtr exists(std::string v, TermPtr body);
TermPtr forall(std::string v, TermPtr body);
TermPtr pred(std::string name, std::vector<PredArg> args, int token = 0);
TermPtr eq(std::string lhs, std::string rhs);
TermPtr tru();
PredArg ev(std::string var);     // x_e
PredArg ind(std::string var);    // x_a
PredArg cst(std::string text);   // "John"
}  // namespace mk

// ---------------------------------------------------------------------------
// Semantic types. V is the paired-variable type; words check as ⟨vt,t⟩ and
// edges as ⟨⟨vt,t⟩,⟨⟨vt,t⟩,⟨vt,t⟩⟩⟩.

struct SemType;
using SemTypePtr = std::shared_ptr<const SemType>;

struct SemType {
  enum class K : unsigned char { V, T, Fn };
  K k = K::T;
  SemTypePtr arg, res;  // Fn only

  static SemTypePtr v();
  static SemTypePtr t();
  static SemTypePtr fn(SemTypePtr a, SemTypePtr b);
  static SemTypePtr vt();      // ⟨v,t⟩
  static SemTypePtr vt_t();    // ⟨vt,t⟩ — word type
  static SemTypePtr edge();    // ⟨⟨vt,t⟩,⟨⟨vt,t⟩,⟨vt,t⟩⟩⟩ — edge type
};

bool operator==(const SemType& a, const SemType& b);
inline bool operator!=(const SemType& a, const SemType& b) { return !(a == b); }
std::string type_to_string(const SemTypePtr& t);

using TypeEnv = std::map<std::string, SemTypePtr>;

// Bidirectional check: lambdas check against an expected arrow type,
// application spines headed by variables are inferred. Sufficient for every
// lexicon template and for the terms the composer builds from them.
bool check_type(const TermPtr& t, const SemTypePtr& expected,
                const TypeEnv& env = {}, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Variable bookkeeping.

std::set<std::string> free_vars(const TermPtr& t);
std::set<std::string> bound_vars(const TermPtr& t);
std::set<std::string> all_names(const TermPtr& t);

// Next unused variant of `base`: primes first (x', x'', x'''), numeric
// suffixes after that.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

// ---------------------------------------------------------------------------
// Reduction.

enum class Rule : unsigned char { Alpha, Beta, EqElim, ExClose, Compose };

struct TraceStep {
  Rule rule;
  std::string label;  // edge label for Compose steps
  TermPtr before, after;
};
using Trace = std::vector<TraceStep>;

std::string rule_tag(const TraceStep& s);  // "α" | "β" | "EQ" | "ex-clos" | "compose(l)"

// α-equivalent copy whose bound names avoid `avoid` and are pairwise
// distinct. Free variables are never touched.
TermPtr alpha_rename(const TermPtr& t, const std::set<std::string>& avoid);

// Capture-avoiding substitution of `repl` for free occurrences of `var`.
// Throws IllTyped when a non-variable lands in a projection/EQ/predicate
// slot, which only a mis-typed term can cause.
TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& repl);

// β-normal form. TRUE-conjunct removal, existential flattening over ∧ and
// EQ-elimination are interleaved after every β step; the trace, when given,
// records one line per α/β/EQ step.
TermPtr beta_reduce(const TermPtr& t, Trace* trace = nullptr);

// ∃z.(φ ∧ EQ(x,z)) → φ[z := x], any conjunct order, either EQ argument
// order. Idempotent, identity on EQ-free terms.
TermPtr eq_eliminate(const TermPtr& t);

// Applies a one-handle abstraction to λx.TRUE and reduces. Throws
// NotClosable when `t` is not such an abstraction (detected by a non-closed
// or non-formula result).
TermPtr existential_closure(const TermPtr& t, Trace* trace = nullptr);

// ---------------------------------------------------------------------------
// Comparison.

// α-equivalence (bound names abstracted away).
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// The golden-test comparator: α-equivalence plus commutative-∧
// normalization (conjuncts sorted canonically; EQ treated as symmetric).
bool alpha_and_equal(const TermPtr& a, const TermPtr& b);

// Canonical key underlying alpha_and_equal; equal keys iff equivalent.
std::string comparison_key(const TermPtr& t);

}  // namespace udlneg
