#include "abdarg/alp.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace abdarg {

Alp make_alp(LogicProgram program, std::vector<Atom> abducibles) {
  std::sort(abducibles.begin(), abducibles.end());
  abducibles.erase(std::unique(abducibles.begin(), abducibles.end()),
                   abducibles.end());
  for (const Atom& a : abducibles) {
    if (!std::binary_search(program.atoms().begin(), program.atoms().end(), a)) {
      throw Error(ErrorCode::AbducibleNotInProgram,
                  "abducible '" + a + "' does not occur in the program");
    }
  }
  return Alp{std::move(program), std::move(abducibles)};
}

std::vector<Hypothesis> hypotheses(const Alp& alp, int max_abducibles) {
  const std::size_t n = alp.abducibles.size();
  if (max_abducibles < 0 || n > static_cast<std::size_t>(max_abducibles)) {
    throw Error(ErrorCode::TooManyAbducibles,
                std::to_string(n) + " abducibles exceed the enumeration cap of " +
                    std::to_string(max_abducibles));
  }
  std::vector<Hypothesis> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Hypothesis h;
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      switch (rest % 3) {
        case 1: h.added.push_back(alp.abducibles[i]); break;
        case 2: h.removed.push_back(alp.abducibles[i]); break;
        default: break;
      }
      rest /= 3;
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LogicProgram apply(const LogicProgram& program, const Hypothesis& h) {
  std::vector<Rule> rules;
  for (const Rule& r : program.rules()) {
    if (r.is_fact() &&
        std::binary_search(h.removed.begin(), h.removed.end(), r.head)) {
      continue;  // withdraw the fact; rules merely mentioning the atom stay
    }
    rules.push_back(r);
  }
  for (const Atom& a : h.added) rules.push_back(make_rule(a));
  return LogicProgram(std::move(rules));
}

bool explains_query(const Alp& alp, const Hypothesis& h, const Atom& query,
                    AcceptanceMode mode) {
  const LogicProgram adjusted = apply(alp.program, h);
  // withdrawing a fact can erase the query atom entirely; that is a plain
  // "no", not a vocabulary error
  if (!std::binary_search(adjusted.atoms().begin(), adjusted.atoms().end(), query)) {
    return false;
  }
  return is_consequence(adjusted, query, mode);
}

AbducibleName hypothesis_label(const Hypothesis& h) {
  AbducibleName label = "H{";
  for (std::size_t i = 0; i < h.added.size(); ++i) {
    if (i) label += ",";
    label += h.added[i];
  }
  label += ";";
  for (std::size_t i = 0; i < h.removed.size(); ++i) {
    if (i) label += ",";
    label += h.removed[i];
  }
  return label + "}";
}

namespace {

// Rendered sort key matching the one instantiate() names arguments by.
std::tuple<Atom, std::string, std::string> naming_key(const InstantiatedArgument& a) {
  std::string rules = "{";
  for (std::size_t i = 0; i < a.rules_used.size(); ++i) {
    if (i) rules += "; ";
    rules += render_rule(a.rules_used[i]);
  }
  rules += "}";
  std::string atoms = "{";
  for (std::size_t i = 0; i < a.required_underivable.size(); ++i) {
    if (i) atoms += ", ";
    atoms += a.required_underivable[i];
  }
  atoms += "}";
  return {a.conclusion, std::move(rules), std::move(atoms)};
}

}  // namespace

AlpFamily build_aaf(const Alp& alp, int max_abducibles) {
  const std::vector<Hypothesis> hyps = hypotheses(alp, max_abducibles);

  // arguments of every adjusted program, named over the pooled table so a
  // triple keeps its name in every member it appears in
  std::vector<std::vector<InstantiatedArgument>> member_args;
  member_args.reserve(hyps.size());
  std::set<InstantiatedArgument> pooled;
  for (const Hypothesis& h : hyps) {
    member_args.push_back(generate_arguments(apply(alp.program, h)));
    pooled.insert(member_args.back().begin(), member_args.back().end());
  }

  AlpFamily fam;
  fam.argument_table.assign(pooled.begin(), pooled.end());
  std::stable_sort(fam.argument_table.begin(), fam.argument_table.end(),
                   [](const InstantiatedArgument& a, const InstantiatedArgument& b) {
                     return naming_key(a) < naming_key(b);
                   });
  fam.argument_names.reserve(fam.argument_table.size());
  for (std::size_t i = 0; i < fam.argument_table.size(); ++i) {
    fam.argument_names.push_back("arg_" + std::to_string(i));
  }
  auto name_of = [&](const InstantiatedArgument& a) {
    auto it = std::find(fam.argument_table.begin(), fam.argument_table.end(), a);
    return fam.argument_names[it - fam.argument_table.begin()];
  };

  std::vector<std::pair<AbducibleName, ArgumentationFramework>> members;
  members.reserve(hyps.size());
  for (std::size_t k = 0; k < hyps.size(); ++k) {
    std::vector<ArgumentId> names;
    names.reserve(member_args[k].size());
    for (const InstantiatedArgument& a : member_args[k]) names.push_back(name_of(a));
    std::vector<std::pair<ArgumentId, ArgumentId>> attacks;
    for (auto [i, j] : generate_attacks(member_args[k])) {
      attacks.emplace_back(names[i], names[j]);
    }
    members.emplace_back(hypothesis_label(hyps[k]),
                         ArgumentationFramework(names, attacks));
  }
  fam.aaf = AbductiveAF(hypothesis_label(Hypothesis{}), std::move(members));

  for (const Hypothesis& h : hyps) {
    fam.provenance[fam.aaf.aliases().at(hypothesis_label(h))].push_back(h);
  }
  for (auto& [name, list] : fam.provenance) std::sort(list.begin(), list.end());

  const std::vector<InstantiatedArgument> base_args =
      generate_arguments(alp.program);
  for (std::size_t i = 0; i < fam.argument_table.size(); ++i) {
    if (std::binary_search(base_args.begin(), base_args.end(),
                           fam.argument_table[i])) {
      fam.base_table_indices_.push_back(i);
    }
  }
  return fam;
}

std::vector<ArgumentId> AlpFamily::base_observation(const Atom& query) const {
  std::vector<ArgumentId> out;
  for (std::size_t i : base_table_indices_) {
    if (argument_table[i].conclusion == query) out.push_back(argument_names[i]);
  }
  return out;
}

std::vector<ArgumentId> AlpFamily::anywhere_observation(const Atom& query) const {
  std::vector<ArgumentId> out;
  for (std::size_t i = 0; i < argument_table.size(); ++i) {
    if (argument_table[i].conclusion == query) out.push_back(argument_names[i]);
  }
  return out;
}

std::vector<ArgumentId> query_observation(const Alp& alp, const Atom& query) {
  return build_aaf(alp).base_observation(query);
}

std::vector<Hypothesis> explain_query(const Alp& alp, const Atom& query,
                                      AcceptanceMode mode, ExplainRoute route,
                                      int max_abducibles) {
  std::vector<Hypothesis> out;
  if (route == ExplainRoute::Direct) {
    for (const Hypothesis& h : hypotheses(alp, max_abducibles)) {
      if (explains_query(alp, h, query, mode)) out.push_back(h);
    }
    return out;  // enumeration order is already canonical
  }

  AlpFamily fam = build_aaf(alp, max_abducibles);
  // observe every query-concluding argument in the pool: a hypothesis whose
  // own derivations conclude the query must count even when the base has none
  const Observation obs = fam.anywhere_observation(query);
  const std::vector<ExplanationWitness> witnesses =
      mode == AcceptanceMode::Skeptical ? search_skeptical(fam.aaf, obs)
                                        : search_credulous(fam.aaf, obs);
  std::set<AbducibleName> explained;
  for (const ExplanationWitness& w : witnesses) {
    explained.insert(w.explained.begin(), w.explained.end());
  }
  for (const AbducibleName& name : explained) {
    const auto& sources = fam.provenance.at(name);
    out.insert(out.end(), sources.begin(), sources.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace abdarg
