#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abdarg/af.hpp"

namespace abdarg {

using AbducibleName = std::string;

// Subset of an abductive framework's members as a small dynamic bit set.
class MemberMask {
 public:
  MemberMask() = default;
  explicit MemberMask(std::size_t bits, bool full = false);

  std::size_t bit_count() const { return bits_; }
  void set(std::size_t i);
  bool test(std::size_t i) const;
  bool any() const;
  std::size_t count() const;
  std::vector<std::size_t> indices() const;

  MemberMask& operator&=(const MemberMask& other);
  MemberMask& operator|=(const MemberMask& other);
  MemberMask& operator-=(const MemberMask& other);  // set difference

  bool operator==(const MemberMask&) const = default;
  auto operator<=>(const MemberMask&) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Arguments and attacks appearing in at least one member.
struct UnionSignature {
  std::vector<ArgumentId> arguments;                       // sorted
  std::vector<std::pair<ArgumentId, ArgumentId>> attacks;  // sorted
};

// A family of candidate frameworks with a designated base.  Structurally
// equal members are merged on construction: the surviving name is the base's
// when its class contains the base, otherwise the lexicographically least,
// and every submitted name stays resolvable through aliases().
class AbductiveAF {
 public:
  AbductiveAF() = default;  // hollow; meaningful instances come from the ctor below
  AbductiveAF(const AbducibleName& base,
              std::vector<std::pair<AbducibleName, ArgumentationFramework>> members);

  const std::vector<AbducibleName>& member_names() const { return names_; }
  const AbducibleName& base_name() const { return names_.at(base_index_); }
  const ArgumentationFramework& base() const { return frameworks_.at(base_index_); }

  std::size_t member_count() const { return names_.size(); }
  const AbducibleName& name_at(std::size_t i) const { return names_.at(i); }
  const ArgumentationFramework& member_at(std::size_t i) const { return frameworks_.at(i); }

  // Resolves aliases; throws UnknownAbducible for unknown names.
  const ArgumentationFramework& member(const AbducibleName& name) const;
  // Maps every submitted name to its surviving representative.
  const std::map<AbducibleName, AbducibleName>& aliases() const { return aliases_; }

  const UnionSignature& union_signature() const { return signature_; }

  // Members that contain both endpoints and the attack itself.
  std::vector<AbducibleName> filter_by_attack(const ArgumentId& from,
                                              const ArgumentId& to) const;
  // Members whose argument set includes all of `args`.
  std::vector<AbducibleName> filter_by_args(const Observation& args) const;

  // Whether the named member backs the part of `obs` it contains.
  bool explains(const AbducibleName& name, const Observation& obs,
                AcceptanceMode mode) const;
  // Every member for which explains() holds, in name order.
  std::vector<AbducibleName> all_explanations(const Observation& obs,
                                              AcceptanceMode mode) const;

  // Mask views of the filters, used by the dialogue machinery.
  MemberMask attack_filter_mask(const ArgumentId& from, const ArgumentId& to) const;
  MemberMask argument_filter_mask(const ArgumentId& arg) const;
  std::vector<AbducibleName> names_for(const MemberMask& mask) const;

 private:
  std::vector<AbducibleName> names_;  // sorted representatives
  std::vector<ArgumentationFramework> frameworks_;
  std::size_t base_index_ = 0;
  std::map<AbducibleName, AbducibleName> aliases_;
  UnionSignature signature_;
  std::map<std::pair<ArgumentId, ArgumentId>, MemberMask> attack_members_;
  std::map<ArgumentId, MemberMask> argument_members_;
};

}  // namespace abdarg
