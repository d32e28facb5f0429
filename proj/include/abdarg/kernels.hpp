#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "abdarg/af.hpp"
#include "abdarg/lp.hpp"

// Enumeration kernels.  Each kernel exists twice: the plain variant carries
// the production traffic and is parallelized with OpenMP when available; the
// _serial twin is the reference implementation the tests and the benchmark
// compare against.  Both variants must return identical vectors.

namespace abdarg::kernels {

// Dense attack tables for subset enumeration over one framework.
struct AfTables {
  int n = 0;
  std::vector<std::uint32_t> attackers;  // attackers[i]: mask of arguments attacking i
  std::vector<std::uint32_t> targets;    // targets[i]: mask of arguments i attacks
};

// Throws FrameworkTooLarge above kMaxEnumerableArguments.
AfTables af_tables(const ArgumentationFramework& af);

// True iff the subset is conflict-free and a fixed point of the defence
// operator.  Shared by both kernel variants.
bool is_complete_mask(const AfTables& t, std::uint32_t set);

// All complete subsets as bit masks, ascending.
std::vector<std::uint32_t> complete_extension_masks(const AfTables& t);
std::vector<std::uint32_t> complete_extension_masks_serial(const AfTables& t);

// Indexed rule table for three-valued model enumeration over one program.
struct LpTables {
  struct RuleRow {
    int head = 0;
    std::vector<int> pos;  // positive body atoms
    std::vector<int> neg;  // negated body atoms
  };
  int n = 0;  // atom count
  std::vector<RuleRow> rules;
};

LpTables lp_tables(const LogicProgram& program);

// (true mask, false mask) pairs; always disjoint.
using MaskInterpretation = std::pair<std::uint32_t, std::uint32_t>;

// Reduct-then-least-model step on mask interpretations.
MaskInterpretation gamma_masks(const LpTables& t, MaskInterpretation interp);

// All fixed points of the step above among the 3^n disjoint pairs, ordered by
// candidate number.
std::vector<MaskInterpretation> partial_stable_masks(const LpTables& t);
std::vector<MaskInterpretation> partial_stable_masks_serial(const LpTables& t);

}  // namespace abdarg::kernels
