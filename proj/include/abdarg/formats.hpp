#pragma once

#include <string>

#include "abdarg/aaf.hpp"
#include "abdarg/alp.hpp"
#include "abdarg/dialogue.hpp"

namespace abdarg {

// Text formats; exact grammars live in docs/formats.md.  All parsers accept
// '%' line comments and report SyntaxError with 1-based line/column.

// "arg(a)." and "att(a,b)." statements; duplicates collapse; attack endpoints
// must be declared somewhere in the file (UndeclaredArgument).
ArgumentationFramework parse_af(const std::string& text);

// "@af <name>" opens a member block of framework statements; "@base <name>"
// designates the base (default: the first block).  Errors: DuplicateName,
// MissingBase, plus the framework errors per block.
AbductiveAF parse_aaf(const std::string& text);

// Rules "h :- b1, not c1." and facts "h.", plus "@abducible a1, a2."
// directives.  Only ground lowercase atoms (VariableNotSupported otherwise);
// abducibles must occur in the program (AbducibleNotInProgram).
Alp parse_alp(const std::string& text);

// Canonical renderings; parse(serialize(x)) == x modulo canonical ordering.
std::string serialize_af(const ArgumentationFramework& af);
std::string serialize_aaf(const AbductiveAF& m);
std::string serialize_alp(const Alp& alp);

// Dialogue trace lines: "OPP: x -> y", "PRO: y -> x", "PRO: y -/> x",
// "OPP: ok", "PRO: win", each followed by the information state in braces.
std::string render_move(const Move& move);
std::string render_state(const InformationState& state);
std::string render_dialogue(const AbductiveAF& m, const Dialogue& d);
// Witness block: a "witness for <arg> -> <state>" header plus the trace.
std::string render_witness(const AbductiveAF& m, const ExplanationWitness& w);

// Reads a trace back (header optional, state suffixes ignored).  The initial
// argument comes from the header, else from the first attack's target.
Dialogue parse_dialogue_trace(const std::string& text);

}  // namespace abdarg
