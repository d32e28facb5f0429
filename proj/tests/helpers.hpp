#pragma once

// Shared fixtures, random generators, and reference implementations.  The
// references recompute answers from first principles over plain sets and
// maps — no bit masks, no shared code with the library internals — so the
// two sides can only agree when both are right.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abdarg/aaf.hpp"
#include "abdarg/af.hpp"
#include "abdarg/alp.hpp"
#include "abdarg/dialogue.hpp"
#include "abdarg/instantiate.hpp"
#include "abdarg/lp.hpp"

namespace testutil {

using namespace abdarg;

// ---------------------------------------------------------------------------
// Fixtures: a four-member family over arguments a..e, and the four-rule
// program with two toggleable facts that instantiates to the same shapes.

inline ArgumentationFramework family_base() {
  return ArgumentationFramework({"a", "b", "c", "d"},
                                {{"a", "b"}, {"b", "c"}, {"c", "b"}});
}

inline ArgumentationFramework family_g1() {
  return ArgumentationFramework(
      {"a", "b", "c", "d", "e"},
      {{"a", "b"}, {"b", "c"}, {"c", "b"}, {"e", "a"}, {"e", "c"}});
}

inline ArgumentationFramework family_g2() {
  return ArgumentationFramework({"b", "c"}, {{"b", "c"}, {"c", "b"}});
}

inline ArgumentationFramework family_g3() {
  return ArgumentationFramework({"b", "c", "e"},
                                {{"b", "c"}, {"c", "b"}, {"e", "c"}});
}

inline AbductiveAF example_family() {
  return AbductiveAF("F", {{"F", family_base()},
                           {"G1", family_g1()},
                           {"G2", family_g2()},
                           {"G3", family_g3()}});
}

inline LogicProgram toggle_program() {
  return LogicProgram({make_rule("p", {"r"}, {"s"}), make_rule("p", {}, {"s", "q"}),
                       make_rule("q", {}, {"p"}), make_rule("r")});
}

inline LogicProgram toggle_program_with_s() {
  auto rules = toggle_program().rules();
  rules.push_back(make_rule("s"));
  return LogicProgram(rules);
}

inline LogicProgram toggle_program_without_r() {
  const LogicProgram base = toggle_program();
  std::vector<Rule> rules;
  for (const Rule& r : base.rules()) {
    if (!(r.is_fact() && r.head == "r")) rules.push_back(r);
  }
  return LogicProgram(rules);
}

inline Alp toggle_alp() { return make_alp(toggle_program(), {"r", "s"}); }

// ---------------------------------------------------------------------------
// Reference: complete subsets by exhaustive enumeration over name sets.

using NameSet = std::set<ArgumentId>;

inline bool ref_conflict_free(const ArgumentationFramework& af, const NameSet& e) {
  for (const auto& [from, to] : af.attacks()) {
    if (e.count(from) && e.count(to)) return false;
  }
  return true;
}

inline NameSet ref_defended(const ArgumentationFramework& af, const NameSet& e) {
  NameSet out;
  for (const ArgumentId& x : af.arguments()) {
    bool ok = true;
    for (const auto& [from, to] : af.attacks()) {
      if (to != x) continue;
      bool countered = false;
      for (const auto& [from2, to2] : af.attacks()) {
        if (to2 == from && e.count(from2)) {
          countered = true;
          break;
        }
      }
      if (!countered) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

inline std::set<NameSet> ref_complete(const ArgumentationFramework& af) {
  const auto& args = af.arguments();
  std::set<NameSet> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << args.size()); ++bits) {
    NameSet e;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (bits >> i & 1) e.insert(args[i]);
    }
    if (ref_conflict_free(af, e) && ref_defended(af, e) == e) out.insert(e);
  }
  return out;
}

inline NameSet ref_grounded(const ArgumentationFramework& af) {
  NameSet e;
  for (;;) {
    NameSet next = ref_defended(af, e);
    if (next == e) return e;
    e = std::move(next);
  }
}

inline bool ref_supports(const ArgumentationFramework& af, const NameSet& obs,
                         AcceptanceMode mode) {
  bool all = true, some = false;
  for (const NameSet& e : ref_complete(af)) {
    bool meets = std::any_of(obs.begin(), obs.end(),
                             [&](const ArgumentId& x) { return e.count(x) > 0; });
    all = all && meets;
    some = some || meets;
  }
  return mode == AcceptanceMode::Skeptical ? all : some;
}

// Members whose slice of the observation they support, recomputed per member.
inline std::vector<AbducibleName> ref_explanations(const AbductiveAF& m,
                                                   const Observation& obs,
                                                   AcceptanceMode mode) {
  std::vector<AbducibleName> out;
  for (const AbducibleName& name : m.member_names()) {
    const ArgumentationFramework& g = m.member(name);
    NameSet present;
    for (const ArgumentId& x : obs) {
      if (g.contains(x)) present.insert(x);
    }
    if (!present.empty() && ref_supports(g, present, mode)) out.push_back(name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference: three-valued models via numeric truth values 0, 1/2, 1.  The
// step operator fixes negated atoms from the outer interpretation and grows
// rule heads from all-false, i.e. the reduct's least model.

using Valuation = std::map<Atom, double>;

inline Valuation ref_step_fixpoint(const LogicProgram& p, const Valuation& outer) {
  Valuation v;
  for (const Atom& a : p.atoms()) v[a] = 0.0;
  for (;;) {
    bool changed = false;
    for (const Rule& r : p.rules()) {
      double body = 1.0;
      for (const Atom& b : r.pos) body = std::min(body, v.at(b));
      for (const Atom& b : r.neg) body = std::min(body, 1.0 - outer.at(b));
      if (body > v.at(r.head)) {
        v[r.head] = body;
        changed = true;
      }
    }
    if (!changed) return v;
  }
}

inline Interpretation ref_to_interpretation(const Valuation& v) {
  std::vector<Atom> t, f;
  for (const auto& [atom, value] : v) {
    if (value == 1.0) t.push_back(atom);
    if (value == 0.0) f.push_back(atom);
  }
  return Interpretation{std::move(t), std::move(f)};
}

inline std::vector<Interpretation> ref_stable_models(const LogicProgram& p) {
  const auto& atoms = p.atoms();
  std::vector<Interpretation> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Valuation outer;
    std::size_t rest = code;
    for (const Atom& a : atoms) {
      outer[a] = 0.5 * (rest % 3);
      rest /= 3;
    }
    if (ref_step_fixpoint(p, outer) == outer) {
      out.push_back(ref_to_interpretation(outer));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool ref_consequence(const LogicProgram& p, const Atom& query,
                            AcceptanceMode mode) {
  bool all = true, some = false;
  for (const Interpretation& m : ref_stable_models(p)) {
    bool holds = std::binary_search(m.true_atoms.begin(), m.true_atoms.end(), query);
    all = all && holds;
    some = some || holds;
  }
  return mode == AcceptanceMode::Skeptical ? all : some;
}

// ---------------------------------------------------------------------------
// Random instances.

inline ArgumentationFramework random_af(std::mt19937& rng, int max_args = 6) {
  std::uniform_int_distribution<int> size(1, max_args);
  const int n = size(rng);
  std::vector<ArgumentId> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  std::bernoulli_distribution attack(0.25);
  std::vector<std::pair<ArgumentId, ArgumentId>> attacks;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (attack(rng)) attacks.emplace_back(names[i], names[j]);
    }
  }
  return ArgumentationFramework(names, attacks);
}

// A base and up to three variants over a shared pool of at most `max_args`
// arguments, redrawn until the pooled attack count stays enumeration-friendly.
inline AbductiveAF random_family(std::mt19937& rng, int max_args = 6) {
  for (;;) {
    std::uniform_int_distribution<int> extra(1, 3);
    const int members = 1 + extra(rng);
    std::vector<std::pair<AbducibleName, ArgumentationFramework>> blocks;
    std::set<std::pair<ArgumentId, ArgumentId>> pooled;
    for (int k = 0; k < members; ++k) {
      ArgumentationFramework g = random_af(rng, max_args);
      for (const auto& at : g.attacks()) pooled.insert(at);
      blocks.emplace_back(k == 0 ? "base" : "m" + std::to_string(k), std::move(g));
    }
    if (pooled.size() > 14) continue;  // keep dialogue search desk-sized
    return AbductiveAF("base", std::move(blocks));
  }
}

inline Observation random_observation(std::mt19937& rng,
                                      const std::vector<ArgumentId>& pool) {
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(
                                                         1, pool.size() / 2));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::set<ArgumentId> chosen;
  for (std::size_t k = size(rng); k > 0; --k) chosen.insert(pool[pick(rng)]);
  return Observation(chosen.begin(), chosen.end());
}

inline LogicProgram random_program(std::mt19937& rng, int max_atoms = 5,
                                   int max_rules = 8) {
  std::uniform_int_distribution<int> atoms_dist(1, max_atoms);
  const int n = atoms_dist(rng);
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back(std::string(1, char('p' + i)));
  std::uniform_int_distribution<int> rules_dist(1, max_rules);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> body(0, 2);
  std::vector<Rule> rules;
  for (int r = rules_dist(rng); r > 0; --r) {
    std::vector<Atom> pos, neg;
    for (int k = body(rng); k > 0; --k) pos.push_back(atoms[pick(rng)]);
    for (int k = body(rng); k > 0; --k) neg.push_back(atoms[pick(rng)]);
    rules.push_back(make_rule(atoms[pick(rng)], pos, neg));
  }
  return LogicProgram(rules);
}

inline Alp random_alp(std::mt19937& rng, int max_atoms = 4, int max_rules = 6,
                      int max_abducibles = 2) {
  for (;;) {
    LogicProgram p = random_program(rng, max_atoms, max_rules);
    if (p.atoms().empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, p.atoms().size() - 1);
    std::set<Atom> chosen;
    std::uniform_int_distribution<int> count(1, max_abducibles);
    for (int k = count(rng); k > 0; --k) chosen.insert(p.atoms()[pick(rng)]);
    Alp alp = make_alp(std::move(p), {chosen.begin(), chosen.end()});
    // keep the pooled argument table small enough for exhaustive checking
    std::set<InstantiatedArgument> pooled;
    bool small = true;
    for (const Hypothesis& h : hypotheses(alp)) {
      auto args = generate_arguments(apply(alp.program, h));
      pooled.insert(args.begin(), args.end());
      if (pooled.size() > 14) {
        small = false;
        break;
      }
    }
    if (small) return alp;
  }
}

// --- small conversions shared by the checks ---

// Runs `fn`, which must throw Error, and hands back the code.
template <typename Fn>
inline ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error to be thrown");
}

inline NameSet to_set(const std::vector<ArgumentId>& names) {
  return NameSet(names.begin(), names.end());
}

inline std::set<NameSet> to_set_family(const std::vector<Extension>& exts) {
  std::set<NameSet> out;
  for (const Extension& e : exts) out.insert(to_set(e));
  return out;
}

}  // namespace testutil
