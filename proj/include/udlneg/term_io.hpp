#pragma once

#include <string>

#include <json.hpp>

#include "udlneg/term.hpp"

namespace udlneg {

// Canonical ASCII form, e.g.
//   forall x . (man(x_a) -> not exists e . came(e_e) & Actor(e_e, x_a))
// Round-trips through parse_term (predicate tokens live in the JSON form
// only). Constants are quoted, projections keep their sort suffix.
std::string to_text(const TermPtr& t);
TermPtr parse_term(const std::string& text);

// Display form with λ/∀/∃/¬/∧/→ and the sort subscript dropped for
// variables that only ever project one sort; used for traces.
std::string pretty(const TermPtr& t);

// Renames paired variables that use a single sort to the conventional
// letters (events: e, e', …; individuals: x, y, z, x', …). Higher-order and
// mixed-sort variables keep their names. Printing-pass normalization only;
// the result is α-equivalent to the input.
TermPtr display_rename(const TermPtr& t);

nlohmann::json term_to_json(const TermPtr& t);
TermPtr term_from_json(const nlohmann::json& j);

}  // namespace udlneg
