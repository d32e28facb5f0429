#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "abdarg/aaf.hpp"

namespace abdarg {

// The two players exchange five move shapes.  An OPP attack puts a union
// attack against the argument under discussion on the table; PRO answers it
// either by counter-attacking the attacker (defence) or by claiming the
// attack is absent from the intended framework (negation).  "ok" closes an
// OPP enumeration, "win" closes the dialogue.
enum class MoveKind { OppAttack, ProDefence, ProNegation, OppOk, ProWin };

struct Move {
  MoveKind kind = MoveKind::OppOk;
  ArgumentId attacker;  // empty for OppOk / ProWin
  ArgumentId target;    // empty for OppOk / ProWin
  bool operator==(const Move&) const = default;
};

Move opp_attack(ArgumentId attacker, ArgumentId target);
Move pro_defence(ArgumentId attacker, ArgumentId target);
Move pro_negation(ArgumentId attacker, ArgumentId target);
Move opp_ok();
Move pro_win();

// A dialogue names the observation argument it opens with; that argument
// seeds the information state even when no move mentions it (an unattacked
// opening yields the two-move dialogue "OPP: ok", "PRO: win").
struct Dialogue {
  ArgumentId initial_argument;
  std::vector<Move> moves;
  bool operator==(const Dialogue&) const = default;
};

// The members still compatible with PRO's commitments, by name, sorted.
using InformationState = std::vector<AbducibleName>;

// State after the first `index` moves: the members containing the initial
// argument, narrowed by each PRO defence (keep members carrying the defence
// attack) and each PRO negation (drop members carrying the negated attack).
// OPP moves and "win" leave the state unchanged.  No grammar checking.
// Throws IndexOutOfRange when index exceeds the move count.
InformationState info_state(const AbductiveAF& m, const Dialogue& d, std::size_t index);

enum class RejectionKind { Grammar, ConflictInProPosition };

struct ValidationResult {
  bool accepted = false;
  InformationState final_state;    // meaningful when accepted
  std::size_t error_index = 0;     // offending move; moves.size() marks truncation
  std::string violated_rule;       // which production failed
  RejectionKind kind = RejectionKind::Grammar;
};

// Checks a dialogue against the exhaustive-reply grammar: the opening
// argument must come from `obs`; every OPP reply must enumerate each union
// attacker of its argument exactly once (any order) and close with "ok";
// every defence opens a nested OPP reply to the defender; the dialogue ends
// with a single "win".  Returns the final information state on acceptance.
ValidationResult validate_skeptical(const AbductiveAF& m, const Dialogue& d,
                                    const Observation& obs);

// Same grammar, except a defence by an argument PRO has already committed to
// (the opening argument or any defender on the current branch) opens no
// nested reply, and the finished dialogue must keep PRO's position
// conflict-free: whenever OPP attacks with y somewhere and attacks y itself
// somewhere else, PRO must have negated y's attack.  Conflict violations are
// reported as ConflictInProPosition.
ValidationResult validate_credulous(const AbductiveAF& m, const Dialogue& d,
                                    const Observation& obs);

// One dialogue whose final information state carries the members it proves.
struct ExplanationWitness {
  InformationState explained;  // never empty
  Dialogue dialogue;
};

// Search over PRO's choices (observation argument, defence vs. negation,
// choice of defender), collapsing branches whose defences keep and negations
// drop the same members and pruning empty states.  Returns the shortest
// witness per final state it reaches; the witnesses' union covers exactly
// the members that back the observation in the respective mode, and every
// witness passes the matching validator.  The credulous search enumerates
// PRO's candidate positions and refuses with FrameworkTooLarge when more
// than kMaxEnumerableArguments arguments are reachable from an opening by
// defence steps.
std::vector<ExplanationWitness> search_skeptical(const AbductiveAF& m, const Observation& obs);
std::vector<ExplanationWitness> search_credulous(const AbductiveAF& m, const Observation& obs);

}  // namespace abdarg
