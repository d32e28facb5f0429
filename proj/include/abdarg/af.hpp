#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abdarg/errors.hpp"

namespace abdarg {

using ArgumentId = std::string;

// A set of arguments, kept sorted and duplicate-free.
using Extension = std::vector<ArgumentId>;

// An observation is also just a set of arguments; the alias keeps signatures
// readable where the set plays that role.
using Observation = std::vector<ArgumentId>;

enum class AcceptanceMode { Skeptical, Credulous };

// Finite directed attack graph.  Arguments are stored sorted, attacks as
// sorted index pairs, so structural equality is plain member equality.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  // Sorts and deduplicates; rejects attacks whose endpoints were not listed
  // among the arguments (UndeclaredArgument).
  ArgumentationFramework(std::vector<ArgumentId> arguments,
                         std::vector<std::pair<ArgumentId, ArgumentId>> attacks);

  const std::vector<ArgumentId>& arguments() const { return names_; }
  std::vector<std::pair<ArgumentId, ArgumentId>> attacks() const;

  std::size_t size() const { return names_.size(); }
  bool contains(const ArgumentId& arg) const;
  bool has_attack(const ArgumentId& from, const ArgumentId& to) const;

  // Dense view used by the enumeration kernels and the fixpoint loops.
  int index_of(const ArgumentId& arg) const;  // -1 when absent
  const ArgumentId& name_of(int index) const { return names_.at(index); }
  const std::vector<int>& attackers_of(int index) const { return attackers_.at(index); }
  const std::vector<std::pair<int, int>>& attack_pairs() const { return attack_pairs_; }

  bool operator==(const ArgumentationFramework& other) const {
    return names_ == other.names_ && attack_pairs_ == other.attack_pairs_;
  }

 private:
  std::vector<ArgumentId> names_;                  // sorted, unique
  std::vector<std::pair<int, int>> attack_pairs_;  // sorted, unique, by index
  std::vector<std::vector<int>> attackers_;        // per argument, sorted
};

// Subset enumeration refuses frameworks above this size; the fixpoint
// operations below carry no such limit.
inline constexpr int kMaxEnumerableArguments = 20;

// True iff no attack connects two members of `set`.
// Throws MemberOutsideFramework when `set` strays outside the framework.
bool conflict_free(const ArgumentationFramework& af, const Extension& set);

// All arguments whose attackers are each attacked by some member of `set`.
// Monotone in `set`.  Throws MemberOutsideFramework as above.
Extension defended_set(const ArgumentationFramework& af, const Extension& set);

// All conflict-free fixed points of the defence operator, canonically ordered
// (lexicographic on the sorted member names).  Enumerates every subset, so
// frameworks above kMaxEnumerableArguments are refused (FrameworkTooLarge).
std::vector<Extension> complete_extensions(const ArgumentationFramework& af);

// Least fixed point of the defence operator, reached by iterating from the
// empty set; equals the unique smallest complete extension.
Extension grounded_extension(const ArgumentationFramework& af);

// Skeptical: member of every complete extension (= of the grounded extension).
// Credulous: member of at least one complete extension.
// Throws UnknownArgument for arguments the framework lacks.
bool accepts(const ArgumentationFramework& af, const ArgumentId& arg, AcceptanceMode mode);

// Whether the framework backs an observation: skeptically when every complete
// extension contains some member of `obs` (equivalently, the grounded
// extension does), credulously when some complete extension does.
// Throws UnknownArgument when `obs` strays outside the framework.
bool supports(const ArgumentationFramework& af, const Observation& obs, AcceptanceMode mode);

}  // namespace abdarg
