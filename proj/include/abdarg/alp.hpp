#pragma once

#include <map>
#include <string>
#include <vector>

#include "abdarg/aaf.hpp"
#include "abdarg/dialogue.hpp"
#include "abdarg/instantiate.hpp"
#include "abdarg/lp.hpp"

namespace abdarg {

// Ground program plus the atoms whose facts may be added or withdrawn.
struct Alp {
  LogicProgram program;
  std::vector<Atom> abducibles;  // sorted, subset of program.atoms()
};

// Validates abducibles against the program vocabulary (AbducibleNotInProgram).
Alp make_alp(LogicProgram program, std::vector<Atom> abducibles);

// Disjoint (added, removed) pair over the abducibles.
struct Hypothesis {
  std::vector<Atom> added;    // sorted
  std::vector<Atom> removed;  // sorted
  auto operator<=>(const Hypothesis&) const = default;
};

// Hypothesis enumeration refuses larger abducible sets by default.
inline constexpr int kDefaultAbducibleCap = 10;

// All 3^|abducibles| disjoint pairs, canonically ordered.
// Throws TooManyAbducibles above the cap.
std::vector<Hypothesis> hypotheses(const Alp& alp,
                                   int max_abducibles = kDefaultAbducibleCap);

// Adds a fact per added atom; withdrawing an atom deletes only its fact rule,
// never rules that merely mention it.
LogicProgram apply(const LogicProgram& program, const Hypothesis& h);

// Whether `query` follows from the adjusted program in the given mode.
bool explains_query(const Alp& alp, const Hypothesis& h, const Atom& query,
                    AcceptanceMode mode);

// Generated member label, e.g. "H{s;}" for adding s, "H{;r}" for removing r.
AbducibleName hypothesis_label(const Hypothesis& h);

// The candidate family induced by an abductive program: one instantiated
// framework per hypothesis, merged structurally, with argument names assigned
// over the union table so equal triples share their name in every member.
struct AlpFamily {
  AbductiveAF aaf;
  // surviving member name -> the hypotheses that produced it, sorted
  std::map<AbducibleName, std::vector<Hypothesis>> provenance;
  std::vector<ArgumentId> argument_names;           // parallel to argument_table
  std::vector<InstantiatedArgument> argument_table;  // union triples, canonical

  // Names of base-framework arguments concluding `query`.
  std::vector<ArgumentId> base_observation(const Atom& query) const;
  // Names of arguments concluding `query` in any member.
  std::vector<ArgumentId> anywhere_observation(const Atom& query) const;

 private:
  friend AlpFamily build_aaf(const Alp&, int);
  std::vector<std::size_t> base_table_indices_;  // rows present in the base
};

AlpFamily build_aaf(const Alp& alp, int max_abducibles = kDefaultAbducibleCap);

// The observation tied to a query: the base framework's arguments concluding
// it.  Convenience wrapper over build_aaf().base_observation().
std::vector<ArgumentId> query_observation(const Alp& alp, const Atom& query);

enum class ExplainRoute { Direct, ViaAaf };

// Hypotheses whose adjusted program yields the query in the given mode.
// Direct evaluates each adjusted program; ViaAaf runs the dialogue search
// over build_aaf() and maps the explaining members back through provenance.
// Both routes return the same canonically ordered set.
std::vector<Hypothesis> explain_query(const Alp& alp, const Atom& query,
                                      AcceptanceMode mode, ExplainRoute route,
                                      int max_abducibles = kDefaultAbducibleCap);

}  // namespace abdarg
