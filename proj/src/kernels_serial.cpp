// Reference implementations of the enumeration kernels, plus the shared
// table builders and per-candidate checks.  Everything here is deliberately
// straight-line; the OpenMP twins in kernels_omp.cpp must match it verbatim
// on every input.

#include <algorithm>
#include <bit>

#include "abdarg/kernels.hpp"
#include "kernels_detail.hpp"

namespace abdarg::kernels {

AfTables af_tables(const ArgumentationFramework& af) {
  if (af.size() > static_cast<std::size_t>(kMaxEnumerableArguments)) {
    throw Error(ErrorCode::FrameworkTooLarge,
                "subset enumeration over " + std::to_string(af.size()) +
                    " arguments refused (limit " +
                    std::to_string(kMaxEnumerableArguments) + ")");
  }
  AfTables t;
  t.n = static_cast<int>(af.size());
  t.attackers.assign(t.n, 0);
  t.targets.assign(t.n, 0);
  for (const auto& [f, to] : af.attack_pairs()) {
    t.attackers[to] |= 1u << f;
    t.targets[f] |= 1u << to;
  }
  return t;
}

bool is_complete_mask(const AfTables& t, std::uint32_t set) {
  // conflict-freeness
  for (std::uint32_t rest = set; rest;) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if (t.targets[i] & set) return false;
  }
  // fixed point: an argument is in the set exactly when each of its
  // attackers is attacked from the set
  for (int a = 0; a < t.n; ++a) {
    bool defended = true;
    for (std::uint32_t rest = t.attackers[a]; rest;) {
      int b = std::countr_zero(rest);
      rest &= rest - 1;
      if ((t.attackers[b] & set) == 0) {
        defended = false;
        break;
      }
    }
    if (defended != ((set >> a) & 1u)) return false;
  }
  return true;
}

std::vector<std::uint32_t> complete_extension_masks_serial(const AfTables& t) {
  std::vector<std::uint32_t> out;
  const std::uint64_t limit = 1ull << t.n;
  for (std::uint64_t set = 0; set < limit; ++set) {
    if (is_complete_mask(t, static_cast<std::uint32_t>(set))) {
      out.push_back(static_cast<std::uint32_t>(set));
    }
  }
  return out;
}

LpTables lp_tables(const LogicProgram& program) {
  LpTables t;
  const auto& atoms = program.atoms();
  t.n = static_cast<int>(atoms.size());
  auto index_of = [&](const Atom& a) {
    return static_cast<int>(std::lower_bound(atoms.begin(), atoms.end(), a) -
                            atoms.begin());
  };
  for (const auto& rule : program.rules()) {
    LpTables::RuleRow row;
    row.head = index_of(rule.head);
    for (const auto& a : rule.pos) row.pos.push_back(index_of(a));
    for (const auto& a : rule.neg) row.neg.push_back(index_of(a));
    t.rules.push_back(std::move(row));
  }
  return t;
}

MaskInterpretation gamma_masks(const LpTables& t, MaskInterpretation interp) {
  const auto [in_true, in_false] = interp;
  // Least set of atoms derivable with every negated premise settled false.
  std::uint32_t derived = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : t.rules) {
      if (derived & (1u << r.head)) continue;
      bool fires = true;
      for (int p : r.pos) {
        if (!(derived & (1u << p))) { fires = false; break; }
      }
      if (fires) {
        for (int b : r.neg) {
          if (!(in_false & (1u << b))) { fires = false; break; }
        }
      }
      if (fires) {
        derived |= 1u << r.head;
        changed = true;
      }
    }
  }
  // Least set of atoms possibly not false: every negated premise merely must
  // not be true.  What stays outside is false in the result.
  std::uint32_t not_false = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : t.rules) {
      if (not_false & (1u << r.head)) continue;
      bool fires = true;
      for (int p : r.pos) {
        if (!(not_false & (1u << p))) { fires = false; break; }
      }
      if (fires) {
        for (int b : r.neg) {
          if (in_true & (1u << b)) { fires = false; break; }
        }
      }
      if (fires) {
        not_false |= 1u << r.head;
        changed = true;
      }
    }
  }
  const std::uint32_t all = t.n == 32 ? ~0u : ((1u << t.n) - 1u);
  return {derived, all & ~not_false};
}

std::vector<MaskInterpretation> partial_stable_masks_serial(const LpTables& t) {
  std::vector<MaskInterpretation> out;
  const std::uint64_t limit = detail::pow3(t.n);
  for (std::uint64_t k = 0; k < limit; ++k) {
    MaskInterpretation candidate = detail::decode_candidate(k, t.n);
    if (gamma_masks(t, candidate) == candidate) out.push_back(candidate);
  }
  return out;
}

}  // namespace abdarg::kernels
