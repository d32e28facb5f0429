#pragma once

#include <compare>
#include <string>
#include <vector>

#include "abdarg/af.hpp"
#include "abdarg/errors.hpp"

namespace abdarg {

using Atom = std::string;

// Ground rule  head :- pos..., not neg...  Body atom lists are sorted sets.
struct Rule {
  Atom head;
  std::vector<Atom> pos;
  std::vector<Atom> neg;

  bool is_fact() const { return pos.empty() && neg.empty(); }
  auto operator<=>(const Rule&) const = default;
};

// Sorts and deduplicates the body lists.
Rule make_rule(Atom head, std::vector<Atom> pos = {}, std::vector<Atom> neg = {});

// Finite set of ground rules.  Duplicate rules collapse; the vocabulary is
// every atom occurring in a head or body.
class LogicProgram {
 public:
  LogicProgram() = default;
  explicit LogicProgram(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool operator==(const LogicProgram&) const = default;

 private:
  std::vector<Rule> rules_;  // sorted, unique
  std::vector<Atom> atoms_;  // sorted, unique
};

// Three-valued interpretation: disjoint true/false sets, everything else
// undecided.  Both lists stay sorted.
struct Interpretation {
  std::vector<Atom> true_atoms;
  std::vector<Atom> false_atoms;
  auto operator<=>(const Interpretation&) const = default;
};

// Sorts, deduplicates, and rejects overlapping truth assignments.
Interpretation make_interpretation(std::vector<Atom> true_atoms,
                                   std::vector<Atom> false_atoms);

// Truth constants a reduct substitutes for negated body atoms.
enum class TruthConstant { False, Undecided, True };  // written 0, 1/2, 1

struct TransformedBodyTerm {
  bool is_constant = false;
  Atom atom;                // meaningful when !is_constant
  TruthConstant constant = TruthConstant::False;  // meaningful when is_constant
  auto operator<=>(const TransformedBodyTerm&) const = default;
};

TransformedBodyTerm body_atom(Atom atom);
TransformedBodyTerm body_constant(TruthConstant value);

// Negation-free rule over atoms and truth constants.  The body keeps the
// positive atoms first, then one constant per negated atom of the source
// rule, each group in sorted order.
struct TransformedRule {
  Atom head;
  std::vector<TransformedBodyTerm> body;
  auto operator<=>(const TransformedRule&) const = default;
};

// Replaces every negated body atom by the truth constant of its complement
// under `interp`: a true atom yields 0, an undecided one 1/2, a false one 1.
// Throws InterpretationOutOfVocabulary when `interp` mentions foreign atoms.
std::vector<TransformedRule> gl_transform(const LogicProgram& program,
                                          const Interpretation& interp);

// Least three-valued model of a negation-free rule set: true atoms from the
// least derivability fixpoint, false atoms as the vocabulary minus the least
// "possibly not false" fixpoint.  Throws InterpretationOutOfVocabulary when a
// rule mentions atoms outside `vocabulary`.
Interpretation least_model(const std::vector<TransformedRule>& rules,
                           const std::vector<Atom>& vocabulary);

// One reduct-then-least-model step.
Interpretation gamma(const LogicProgram& program, const Interpretation& interp);

// Model enumeration refuses programs above this many atoms by default.
inline constexpr int kDefaultModelEnumerationCap = 12;

// All fixed points of the step operator among the 3^n disjoint (true, false)
// pairs, canonically ordered.  Never empty.  Throws VocabularyTooLarge when
// the program has more than `max_atoms` atoms.
std::vector<Interpretation> partial_stable_models(
    const LogicProgram& program, int max_atoms = kDefaultModelEnumerationCap);

// Skeptical: true in every model above; credulous: true in at least one.
// Throws UnknownAtom when the query is outside the program vocabulary.
bool is_consequence(const LogicProgram& program, const Atom& query,
                    AcceptanceMode mode,
                    int max_atoms = kDefaultModelEnumerationCap);

}  // namespace abdarg
