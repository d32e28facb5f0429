#include "abdarg/af.hpp"

#include <algorithm>

#include "abdarg/kernels.hpp"

namespace abdarg {

namespace {

void sort_unique(std::vector<ArgumentId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Index set of `set` within `af`, validating membership.
std::vector<int> to_indices(const ArgumentationFramework& af, const Extension& set,
                            ErrorCode missing_code) {
  std::vector<int> out;
  out.reserve(set.size());
  for (const auto& a : set) {
    int i = af.index_of(a);
    if (i < 0) throw Error(missing_code, "'" + a + "' is not in the framework");
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Extension to_names(const ArgumentationFramework& af, const std::vector<int>& indices) {
  Extension out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(af.name_of(i));
  return out;
}

}  // namespace

ArgumentationFramework::ArgumentationFramework(
    std::vector<ArgumentId> arguments,
    std::vector<std::pair<ArgumentId, ArgumentId>> attacks) {
  names_ = std::move(arguments);
  sort_unique(names_);
  attackers_.assign(names_.size(), {});
  for (const auto& [from, to] : attacks) {
    int f = index_of(from);
    int t = index_of(to);
    if (f < 0 || t < 0) {
      throw Error(ErrorCode::UndeclaredArgument,
                  "attack " + from + " -> " + to + " has an undeclared endpoint");
    }
    attack_pairs_.emplace_back(f, t);
  }
  std::sort(attack_pairs_.begin(), attack_pairs_.end());
  attack_pairs_.erase(std::unique(attack_pairs_.begin(), attack_pairs_.end()),
                      attack_pairs_.end());
  for (const auto& [f, t] : attack_pairs_) attackers_[t].push_back(f);
}

std::vector<std::pair<ArgumentId, ArgumentId>> ArgumentationFramework::attacks() const {
  std::vector<std::pair<ArgumentId, ArgumentId>> out;
  out.reserve(attack_pairs_.size());
  for (const auto& [f, t] : attack_pairs_) out.emplace_back(names_[f], names_[t]);
  return out;
}

bool ArgumentationFramework::contains(const ArgumentId& arg) const {
  return index_of(arg) >= 0;
}

bool ArgumentationFramework::has_attack(const ArgumentId& from, const ArgumentId& to) const {
  int f = index_of(from);
  int t = index_of(to);
  if (f < 0 || t < 0) return false;
  return std::binary_search(attack_pairs_.begin(), attack_pairs_.end(),
                            std::make_pair(f, t));
}

int ArgumentationFramework::index_of(const ArgumentId& arg) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), arg);
  if (it == names_.end() || *it != arg) return -1;
  return static_cast<int>(it - names_.begin());
}

bool conflict_free(const ArgumentationFramework& af, const Extension& set) {
  auto indices = to_indices(af, set, ErrorCode::MemberOutsideFramework);
  std::vector<char> in(af.size(), 0);
  for (int i : indices) in[i] = 1;
  for (const auto& [f, t] : af.attack_pairs()) {
    if (in[f] && in[t]) return false;
  }
  return true;
}

Extension defended_set(const ArgumentationFramework& af, const Extension& set) {
  auto indices = to_indices(af, set, ErrorCode::MemberOutsideFramework);
  std::vector<char> in(af.size(), 0);
  for (int i : indices) in[i] = 1;
  // attacked_by_set[b]: some member of `set` attacks b
  std::vector<char> attacked_by_set(af.size(), 0);
  for (const auto& [f, t] : af.attack_pairs()) {
    if (in[f]) attacked_by_set[t] = 1;
  }
  std::vector<int> result;
  for (int a = 0; a < static_cast<int>(af.size()); ++a) {
    bool defended = true;
    for (int b : af.attackers_of(a)) {
      if (!attacked_by_set[b]) {
        defended = false;
        break;
      }
    }
    if (defended) result.push_back(a);
  }
  return to_names(af, result);
}

std::vector<Extension> complete_extensions(const ArgumentationFramework& af) {
  auto tables = kernels::af_tables(af);
  auto masks = kernels::complete_extension_masks(tables);
  std::vector<Extension> out;
  out.reserve(masks.size());
  for (std::uint32_t m : masks) {
    Extension e;
    for (int i = 0; i < tables.n; ++i) {
      if (m & (1u << i)) e.push_back(af.name_of(i));
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Extension grounded_extension(const ArgumentationFramework& af) {
  // Iterate the defence operator from the empty set until it stalls.
  Extension current;
  for (;;) {
    Extension next = defended_set(af, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool accepts(const ArgumentationFramework& af, const ArgumentId& arg,
             AcceptanceMode mode) {
  if (!af.contains(arg)) {
    throw Error(ErrorCode::UnknownArgument, "'" + arg + "' is not in the framework");
  }
  if (mode == AcceptanceMode::Skeptical) {
    auto grounded = grounded_extension(af);
    return std::binary_search(grounded.begin(), grounded.end(), arg);
  }
  for (const auto& e : complete_extensions(af)) {
    if (std::binary_search(e.begin(), e.end(), arg)) return true;
  }
  return false;
}

bool supports(const ArgumentationFramework& af, const Observation& obs,
              AcceptanceMode mode) {
  auto indices = to_indices(af, obs, ErrorCode::UnknownArgument);
  Extension sorted_obs = to_names(af, indices);
  auto meets = [&](const Extension& e) {
    for (const auto& x : sorted_obs) {
      if (std::binary_search(e.begin(), e.end(), x)) return true;
    }
    return false;
  };
  if (mode == AcceptanceMode::Skeptical) {
    // Every complete extension meets the observation exactly when the
    // grounded extension does, so one fixpoint run decides it.
    return meets(grounded_extension(af));
  }
  for (const auto& e : complete_extensions(af)) {
    if (meets(e)) return true;
  }
  return false;
}

}  // namespace abdarg
