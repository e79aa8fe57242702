#pragma once

#include <string>
#include <vector>

#include "udlneg/model.hpp"
#include "udlneg/term.hpp"

namespace testsupport {

// Every model over domains of size 1..max_domain with all interpretations of
// the given predicates (name, arity). Exhaustive, so only usable for a
// couple of predicates at tiny arities.
inline std::vector<udlneg::Model> all_models(
    const std::vector<std::pair<std::string, int>>& preds, int max_domain) {
  static const char* labels[] = {"d1", "d2", "d3", "d4"};
  std::vector<udlneg::Model> out;
  for (int n = 1; n <= max_domain; ++n) {
    std::vector<std::string> domain(labels, labels + n);
    // enumerate all tuples per predicate
    std::vector<std::vector<std::vector<std::string>>> tuples(preds.size());
    for (size_t p = 0; p < preds.size(); ++p) {
      int arity = preds[p].second;
      int count = 1;
      for (int k = 0; k < arity; ++k) count *= n;
      for (int t = 0; t < count; ++t) {
        std::vector<std::string> tuple;
        int rest = t;
        for (int k = 0; k < arity; ++k) {
          tuple.push_back(domain[rest % n]);
          rest /= n;
        }
        tuples[p].push_back(tuple);
      }
    }
    // enumerate all subsets of each predicate's tuple space
    std::vector<size_t> subset_count(preds.size());
    size_t total = 1;
    for (size_t p = 0; p < preds.size(); ++p) {
      subset_count[p] = size_t{1} << tuples[p].size();
      total *= subset_count[p];
    }
    for (size_t idx = 0; idx < total; ++idx) {
      udlneg::Model m;
      m.domain = domain;
      size_t rest = idx;
      for (size_t p = 0; p < preds.size(); ++p) {
        size_t mask = rest % subset_count[p];
        rest /= subset_count[p];
        auto& set = m.interp[preds[p].first];
        for (size_t b = 0; b < tuples[p].size(); ++b)
          if (mask & (size_t{1} << b)) set.insert(tuples[p][b]);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

// CoNLL-U fixtures for the worked sentences. Lemmas match the predicate
// names the derivations use.
inline std::string conllu_john_does_not_eat() {
  return
      "# text = John does not eat\n"
      "1\tJohn\tJohn\tPROPN\tNNP\t_\t4\tnsubj\t_\t_\n"
      "2\tdoes\tdo\tAUX\tVBZ\t_\t4\taux\t_\t_\n"
      "3\tnot\tnot\tPART\tRB\t_\t4\tneg\t_\t_\n"
      "4\teat\teat\tVERB\tVB\t_\t0\troot\t_\t_\n";
}

inline std::string conllu_no_man_came() {
  return
      "# text = No man came\n"
      "1\tNo\tno\tDET\tDT\t_\t2\tneg\t_\t_\n"
      "2\tman\tman\tNOUN\tNN\t_\t3\tnsubj\t_\t_\n"
      "3\tcame\tcame\tVERB\tVBD\t_\t0\troot\t_\t_\n";
}

inline std::string conllu_not_every_man_came() {
  return
      "# text = Not every man came\n"
      "1\tNot\tnot\tPART\tRB\t_\t3\tneg\t_\t_\n"
      "2\tevery\tevery\tDET\tDT\t_\t3\tdet\t_\t_\n"
      "3\tman\tman\tNOUN\tNN\t_\t4\tnsubj\t_\t_\n"
      "4\tcame\tcame\tVERB\tVBD\t_\t0\troot\t_\t_\n";
}

inline std::string conllu_nobody_came() {
  return
      "# text = Nobody came\n"
      "1\tNobody\tnobody\tPRON\tNN\t_\t2\tnsubj\t_\t_\n"
      "2\tcame\tcame\tVERB\tVBD\t_\t0\troot\t_\t_\n";
}

inline std::string conllu_john_came_with_nothing() {
  return
      "# text = John came with nothing\n"
      "1\tJohn\tJohn\tPROPN\tNNP\t_\t2\tnsubj\t_\t_\n"
      "2\tcame\tcame\tVERB\tVBD\t_\t0\troot\t_\t_\n"
      "3\twith\twith\tADP\tIN\t_\t4\tcase\t_\t_\n"
      "4\tnothing\tnothing\tPRON\tNN\t_\t2\tnmod\t_\t_\n";
}

inline std::string conllu_malta_borders_no_country() {
  return
      "# text = Malta borders no country\n"
      "1\tMalta\tMalta\tPROPN\tNNP\t_\t2\tnsubj\t_\t_\n"
      "2\tborders\tborders\tVERB\tVBZ\t_\t0\troot\t_\t_\n"
      "3\tno\tno\tDET\tDT\t_\t4\tneg\t_\t_\n"
      "4\tcountry\tcountry\tNOUN\tNN\t_\t2\tdobj\t_\t_\n";
}

// The appendix's bolded final formulas, in canonical text form.
inline const char* golden_john_does_not_eat() {
  return "not exists e . exists z . eat(e_e) & named(z_a, \"John\", \"PER\") & Actor(e_e, z_a)";
}
inline const char* golden_no_man_came() {
  return "forall x . (man(x_a) -> not exists e . came(e_e) & Actor(e_e, x_a))";
}
inline const char* golden_not_every_man_came() {
  return "not forall z . (man(z_a) -> exists e . came(e_e) & Actor(e_e, z_a))";
}
inline const char* golden_nobody_came() {
  return "not exists z . exists e . person(z_a) & Actor(e_e, z_a) & came(e_e)";
}
inline const char* golden_john_came_with_nothing() {
  return "exists e . exists y . came(e_e) & named(y_a, \"John\", \"PER\") & Actor(e_e, y_a) & "
         "not exists z . thing(z_a) & with(e_e, z_a)";
}
inline const char* golden_malta() {
  return "forall y . (country(y_a) -> not exists x . exists z . named(z_a, \"Malta\", \"PER\") & "
         "borders(x_e) & Theme(x_e, y_a) & Actor(x_e, z_a))";
}

}  // namespace testsupport
