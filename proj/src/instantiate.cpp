#include "abdarg/instantiate.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace abdarg {

std::vector<InstantiatedArgument> generate_arguments(const LogicProgram& program) {
  std::set<InstantiatedArgument> found;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Rule& r : program.rules()) {
      // sub-argument candidates per positive body atom; the rule itself must
      // be absent from each candidate's rule set
      std::vector<std::vector<const InstantiatedArgument*>> cands;
      bool feasible = true;
      for (const Atom& b : r.pos) {
        std::vector<const InstantiatedArgument*> c;
        for (const auto& a : found) {
          if (a.conclusion == b &&
              !std::binary_search(a.rules_used.begin(), a.rules_used.end(), r)) {
            c.push_back(&a);
          }
        }
        if (c.empty()) { feasible = false; break; }
        cands.push_back(std::move(c));
      }
      if (!feasible) continue;
      std::vector<std::size_t> pick(cands.size(), 0);
      for (;;) {  // one choice of sub-argument per body atom
        std::set<Rule> rules{r};
        std::set<Atom> under(r.neg.begin(), r.neg.end());
        for (std::size_t i = 0; i < cands.size(); ++i) {
          const InstantiatedArgument& sub = *cands[i][pick[i]];
          rules.insert(sub.rules_used.begin(), sub.rules_used.end());
          under.insert(sub.required_underivable.begin(),
                       sub.required_underivable.end());
        }
        InstantiatedArgument arg{r.head,
                                 {rules.begin(), rules.end()},
                                 {under.begin(), under.end()}};
        if (found.insert(std::move(arg)).second) grew = true;
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < cands[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::pair<std::size_t, std::size_t>> generate_attacks(
    const std::vector<InstantiatedArgument>& args) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (std::size_t j = 0; j < args.size(); ++j) {
      if (std::binary_search(args[j].required_underivable.begin(),
                             args[j].required_underivable.end(),
                             args[i].conclusion)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::string render_rule(const Rule& rule) {
  if (rule.is_fact()) return rule.head;
  std::string out = rule.head + " :- ";
  bool first = true;
  for (const Atom& a : rule.pos) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  for (const Atom& a : rule.neg) {
    if (!first) out += ", ";
    out += "not " + a;
    first = false;
  }
  return out;
}

namespace {

std::string render_rule_set(const std::vector<Rule>& rules) {
  std::string out = "{";
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i) out += "; ";
    out += render_rule(rules[i]);
  }
  return out + "}";
}

std::string render_atom_set(const std::vector<Atom>& atoms) {
  std::string out = "{";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i];
  }
  return out + "}";
}

}  // namespace

InstantiatedAF instantiate(const LogicProgram& program) {
  InstantiatedAF out;
  out.table = generate_arguments(program);
  // names follow the rendered form of each triple, so the arg_<k> indices are
  // stable across runs and auditable against the emitted table
  std::stable_sort(out.table.begin(), out.table.end(),
                   [](const InstantiatedArgument& a, const InstantiatedArgument& b) {
                     return std::make_tuple(a.conclusion, render_rule_set(a.rules_used),
                                            render_atom_set(a.required_underivable)) <
                            std::make_tuple(b.conclusion, render_rule_set(b.rules_used),
                                            render_atom_set(b.required_underivable));
                   });
  out.names.reserve(out.table.size());
  for (std::size_t i = 0; i < out.table.size(); ++i) {
    out.names.push_back("arg_" + std::to_string(i));
  }
  std::vector<std::pair<ArgumentId, ArgumentId>> attacks;
  for (auto [a, t] : generate_attacks(out.table)) {
    attacks.emplace_back(out.names[a], out.names[t]);
  }
  out.af = ArgumentationFramework(out.names, attacks);
  return out;
}

std::string render_triple_table(const InstantiatedAF& inst) {
  std::string out;
  for (std::size_t i = 0; i < inst.table.size(); ++i) {
    const InstantiatedArgument& a = inst.table[i];
    out += inst.names[i] + ": (" + a.conclusion + ", " +
           render_rule_set(a.rules_used) + ", " +
           render_atom_set(a.required_underivable) + ")\n";
  }
  return out;
}

}  // namespace abdarg
