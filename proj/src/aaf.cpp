#include "abdarg/aaf.hpp"

#include <algorithm>

namespace abdarg {

MemberMask::MemberMask(std::size_t bits, bool full)
    : bits_(bits), words_((bits + 63) / 64, 0) {
  if (full) {
    for (std::size_t i = 0; i < bits_; ++i) set(i);
  }
}

void MemberMask::set(std::size_t i) { words_[i / 64] |= 1ull << (i % 64); }

bool MemberMask::test(std::size_t i) const {
  return (words_[i / 64] >> (i % 64)) & 1ull;
}

bool MemberMask::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t MemberMask::count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < bits_; ++i) c += test(i);
  return c;
}

std::vector<std::size_t> MemberMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

MemberMask& MemberMask::operator&=(const MemberMask& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

MemberMask& MemberMask::operator|=(const MemberMask& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

MemberMask& MemberMask::operator-=(const MemberMask& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

AbductiveAF::AbductiveAF(
    const AbducibleName& base,
    std::vector<std::pair<AbducibleName, ArgumentationFramework>> members) {
  if (members.empty()) {
    throw Error(ErrorCode::MissingBase, "no member frameworks given");
  }
  {
    std::vector<AbducibleName> seen;
    for (const auto& [name, af] : members) seen.push_back(name);
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end()) {
      throw Error(ErrorCode::DuplicateName, "member '" + *dup + "' declared twice");
    }
    if (!std::binary_search(seen.begin(), seen.end(), base)) {
      throw Error(ErrorCode::MissingBase, "base '" + base + "' is not among the members");
    }
  }

  // Merge structurally equal members.  A class containing the base keeps the
  // base's name; any other class keeps its lexicographically least name.
  struct Group {
    ArgumentationFramework af;
    std::vector<AbducibleName> sources;
  };
  std::vector<Group> groups;
  for (auto& [name, af] : members) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return g.af == af; });
    if (it == groups.end()) {
      groups.push_back(Group{std::move(af), {name}});
    } else {
      it->sources.push_back(name);
    }
  }
  std::vector<std::pair<AbducibleName, const Group*>> reps;
  for (const auto& g : groups) {
    bool has_base = std::find(g.sources.begin(), g.sources.end(), base) !=
                    g.sources.end();
    AbducibleName rep =
        has_base ? base : *std::min_element(g.sources.begin(), g.sources.end());
    reps.emplace_back(rep, &g);
  }
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [rep, group] : reps) {
    for (const auto& src : group->sources) aliases_[src] = rep;
    if (rep == base) base_index_ = names_.size();
    names_.push_back(rep);
    frameworks_.push_back(group->af);
  }

  // Union signature and the membership masks behind the filters.
  for (std::size_t i = 0; i < frameworks_.size(); ++i) {
    const auto& af = frameworks_[i];
    for (const auto& arg : af.arguments()) {
      auto [it, inserted] =
          argument_members_.try_emplace(arg, MemberMask(frameworks_.size()));
      it->second.set(i);
    }
    for (const auto& attack : af.attacks()) {
      auto [it, inserted] =
          attack_members_.try_emplace(attack, MemberMask(frameworks_.size()));
      it->second.set(i);
    }
  }
  for (const auto& [arg, mask] : argument_members_) {
    signature_.arguments.push_back(arg);
  }
  for (const auto& [attack, mask] : attack_members_) {
    signature_.attacks.push_back(attack);
  }
}

const ArgumentationFramework& AbductiveAF::member(const AbducibleName& name) const {
  auto alias = aliases_.find(name);
  const AbducibleName& resolved = alias == aliases_.end() ? name : alias->second;
  auto it = std::lower_bound(names_.begin(), names_.end(), resolved);
  if (it == names_.end() || *it != resolved) {
    throw Error(ErrorCode::UnknownAbducible, "no member named '" + name + "'");
  }
  return frameworks_[it - names_.begin()];
}

MemberMask AbductiveAF::attack_filter_mask(const ArgumentId& from,
                                           const ArgumentId& to) const {
  auto it = attack_members_.find({from, to});
  if (it == attack_members_.end()) return MemberMask(frameworks_.size());
  return it->second;
}

MemberMask AbductiveAF::argument_filter_mask(const ArgumentId& arg) const {
  auto it = argument_members_.find(arg);
  if (it == argument_members_.end()) return MemberMask(frameworks_.size());
  return it->second;
}

std::vector<AbducibleName> AbductiveAF::names_for(const MemberMask& mask) const {
  std::vector<AbducibleName> out;
  for (std::size_t i : mask.indices()) out.push_back(names_[i]);
  return out;
}

std::vector<AbducibleName> AbductiveAF::filter_by_attack(const ArgumentId& from,
                                                         const ArgumentId& to) const {
  return names_for(attack_filter_mask(from, to));
}

std::vector<AbducibleName> AbductiveAF::filter_by_args(const Observation& args) const {
  MemberMask mask(frameworks_.size(), true);
  for (const auto& arg : args) mask &= argument_filter_mask(arg);
  return names_for(mask);
}

bool AbductiveAF::explains(const AbducibleName& name, const Observation& obs,
                           AcceptanceMode mode) const {
  const ArgumentationFramework& af = member(name);
  // Only the part of the observation the member knows about can back it.
  Observation present;
  for (const auto& x : obs) {
    if (af.contains(x)) present.push_back(x);
  }
  if (present.empty()) return false;
  return supports(af, present, mode);
}

std::vector<AbducibleName> AbductiveAF::all_explanations(const Observation& obs,
                                                         AcceptanceMode mode) const {
  std::vector<AbducibleName> out;
  for (const auto& name : names_) {
    if (explains(name, obs, mode)) out.push_back(name);
  }
  return out;
}

}  // namespace abdarg
