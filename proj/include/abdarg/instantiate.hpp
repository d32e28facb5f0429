#pragma once

#include <compare>
#include <string>
#include <vector>

#include "abdarg/af.hpp"
#include "abdarg/lp.hpp"

namespace abdarg {

// A derivation packaged as an argument: the derived atom, the exact rule set
// the derivation uses, and the atoms that must stay underivable for every
// negated premise along the way.
struct InstantiatedArgument {
  Atom conclusion;
  std::vector<Rule> rules_used;            // sorted, unique
  std::vector<Atom> required_underivable;  // union of negated bodies, sorted
  auto operator<=>(const InstantiatedArgument&) const = default;
};

// Saturates to a fixpoint: a rule with an empty positive body yields an
// argument directly; a rule whose positive body atoms each have an argument
// not already using that rule combines them.  Result is sorted and unique.
std::vector<InstantiatedArgument> generate_arguments(const LogicProgram& program);

// Index pairs (attacker, target): an argument attacks another when its
// conclusion is among the target's required-underivable atoms.
std::vector<std::pair<std::size_t, std::size_t>> generate_attacks(
    const std::vector<InstantiatedArgument>& args);

// Argument graph plus the table tying each generated name to its triple.
struct InstantiatedAF {
  ArgumentationFramework af;
  std::vector<ArgumentId> names;           // names[i] labels table[i]
  std::vector<InstantiatedArgument> table;  // canonical order
};

// Names the generated arguments arg_0, arg_1, ... in table order.
InstantiatedAF instantiate(const LogicProgram& program);

// "head :- b1, ..., not c1, ..." without the trailing period.
std::string render_rule(const Rule& rule);

// One "name: (conclusion, {rules}, {atoms})" line per argument.
std::string render_triple_table(const InstantiatedAF& inst);

}  // namespace abdarg
