#include "abdarg/dialogue.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace abdarg {

Move opp_attack(ArgumentId attacker, ArgumentId target) {
  return Move{MoveKind::OppAttack, std::move(attacker), std::move(target)};
}
Move pro_defence(ArgumentId attacker, ArgumentId target) {
  return Move{MoveKind::ProDefence, std::move(attacker), std::move(target)};
}
Move pro_negation(ArgumentId attacker, ArgumentId target) {
  return Move{MoveKind::ProNegation, std::move(attacker), std::move(target)};
}
Move opp_ok() { return Move{MoveKind::OppOk, {}, {}}; }
Move pro_win() { return Move{MoveKind::ProWin, {}, {}}; }

namespace {

// Union attack table shared by the validators and the search: attacks by
// index, attacks-on lists per argument (attacker-sorted), one member mask per
// attack.
struct UnionIndex {
  const AbductiveAF& m;
  std::vector<std::pair<ArgumentId, ArgumentId>> attacks;
  std::map<ArgumentId, std::vector<std::size_t>> attacks_on;
  std::vector<MemberMask> attack_masks;

  explicit UnionIndex(const AbductiveAF& aaf) : m(aaf) {
    attacks = aaf.union_signature().attacks;
    for (std::size_t i = 0; i < attacks.size(); ++i) {
      attacks_on[attacks[i].second].push_back(i);
      attack_masks.push_back(
          aaf.attack_filter_mask(attacks[i].first, attacks[i].second));
    }
  }

  const std::vector<std::size_t>& attacks_on_arg(const ArgumentId& x) const {
    static const std::vector<std::size_t> none;
    auto it = attacks_on.find(x);
    return it == attacks_on.end() ? none : it->second;
  }

  bool has_attack(const ArgumentId& from, const ArgumentId& to) const {
    return std::binary_search(attacks.begin(), attacks.end(),
                              std::make_pair(from, to));
  }
};

MemberMask state_after(const AbductiveAF& m, const Dialogue& d, std::size_t upto) {
  // Members containing the opening argument, narrowed by PRO's commitments.
  MemberMask state = m.argument_filter_mask(d.initial_argument);
  for (std::size_t i = 0; i < upto; ++i) {
    const Move& mv = d.moves[i];
    if (mv.kind == MoveKind::ProDefence) {
      state &= m.attack_filter_mask(mv.attacker, mv.target);
    } else if (mv.kind == MoveKind::ProNegation) {
      state -= m.attack_filter_mask(mv.attacker, mv.target);
    }
  }
  return state;
}

// ---------------------------------------------------------------------------
// Validation: recursive descent over the move list.

struct ReplyParser {
  const UnionIndex& u;
  const std::vector<Move>& moves;
  bool credulous;
  std::size_t pos = 0;
  ValidationResult result;

  bool fail(std::size_t index, std::string rule) {
    result.accepted = false;
    result.error_index = index;
    result.violated_rule = std::move(rule);
    result.kind = RejectionKind::Grammar;
    return false;
  }

  // One OPP reply to `x`: every union attack on x raised exactly once (any
  // order), each answered by PRO, closed by "OPP: ok".  `committed` is PRO's
  // accepted set along this branch (credulous only).
  bool parse_reply(const ArgumentId& x, const std::vector<ArgumentId>& committed) {
    std::set<ArgumentId> need;
    for (std::size_t ai : u.attacks_on_arg(x)) need.insert(u.attacks[ai].first);
    std::set<ArgumentId> seen;
    for (;;) {
      if (pos >= moves.size()) {
        return fail(moves.size(),
                    "reply to '" + x + "' cut off before 'OPP: ok'");
      }
      const Move& mv = moves[pos];
      if (mv.kind == MoveKind::OppOk) {
        if (seen.size() != need.size()) {
          ArgumentId missing;
          for (const auto& y : need) {
            if (!seen.count(y)) { missing = y; break; }
          }
          return fail(pos, "'OPP: ok' before every attack on '" + x +
                               "' was raised (missing " + missing + " -> " + x + ")");
        }
        ++pos;
        return true;
      }
      if (mv.kind != MoveKind::OppAttack) {
        return fail(pos, "expected an OPP attack on '" + x + "' or 'OPP: ok'");
      }
      if (mv.target != x) {
        return fail(pos, "OPP attack must target '" + x + "'");
      }
      if (!need.count(mv.attacker)) {
        return fail(pos, "no member carries the attack " + mv.attacker + " -> " + x);
      }
      if (!seen.insert(mv.attacker).second) {
        return fail(pos, "attack " + mv.attacker + " -> " + x +
                             " raised twice in one reply");
      }
      const ArgumentId y = mv.attacker;
      ++pos;
      if (pos >= moves.size()) {
        return fail(moves.size(), "attack " + y + " -> " + x + " left unanswered");
      }
      const Move& pm = moves[pos];
      if (pm.kind == MoveKind::ProNegation) {
        if (pm.attacker != y || pm.target != x) {
          return fail(pos, "negation must name the attack " + y + " -> " + x);
        }
        ++pos;
        continue;
      }
      if (pm.kind != MoveKind::ProDefence) {
        return fail(pos, "expected a PRO defence or negation for " + y + " -> " + x);
      }
      if (pm.target != y) {
        return fail(pos, "defence must attack '" + y + "'");
      }
      if (!u.has_attack(pm.attacker, y)) {
        return fail(pos, "no member carries the attack " + pm.attacker + " -> " + y);
      }
      const ArgumentId z = pm.attacker;
      ++pos;
      if (credulous &&
          std::find(committed.begin(), committed.end(), z) != committed.end()) {
        continue;  // already accepted on this branch: no nested reply
      }
      std::vector<ArgumentId> next = committed;
      if (credulous) next.push_back(z);
      if (!parse_reply(z, next)) return false;
    }
  }
};

ValidationResult validate(const AbductiveAF& m, const Dialogue& d,
                          const Observation& obs, bool credulous) {
  UnionIndex u(m);
  ReplyParser p{u, d.moves, credulous, 0, {}};
  if (std::find(obs.begin(), obs.end(), d.initial_argument) == obs.end()) {
    p.fail(0, "the dialogue must open for a member of the observation");
    return p.result;
  }
  std::vector<ArgumentId> committed;
  if (credulous) committed.push_back(d.initial_argument);
  if (!p.parse_reply(d.initial_argument, committed)) return p.result;
  if (p.pos >= d.moves.size()) {
    p.fail(d.moves.size(), "missing final 'PRO: win'");
    return p.result;
  }
  if (d.moves[p.pos].kind != MoveKind::ProWin) {
    p.fail(p.pos, "expected 'PRO: win'");
    return p.result;
  }
  ++p.pos;
  if (p.pos != d.moves.size()) {
    p.fail(p.pos, "moves after 'PRO: win'");
    return p.result;
  }

  if (credulous) {
    // PRO's position must be conflict-free: whenever OPP attacks y somewhere
    // and attacks through y somewhere else, PRO must have negated y's attack.
    auto opp_targets_arg = [&](const ArgumentId& y) {
      for (const Move& mv : d.moves) {
        if (mv.kind == MoveKind::OppAttack && mv.target == y) return true;
      }
      return false;
    };
    auto negated = [&](const ArgumentId& y, const ArgumentId& t) {
      for (const Move& mv : d.moves) {
        if (mv.kind == MoveKind::ProNegation && mv.attacker == y && mv.target == t) {
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < d.moves.size(); ++i) {
      const Move& mv = d.moves[i];
      if (mv.kind != MoveKind::OppAttack) continue;
      if (opp_targets_arg(mv.attacker) && !negated(mv.attacker, mv.target)) {
        p.result.accepted = false;
        p.result.error_index = i;
        p.result.kind = RejectionKind::ConflictInProPosition;
        p.result.violated_rule =
            "PRO accepts '" + mv.attacker + "' yet left its attack on '" +
            mv.target + "' standing";
        return p.result;
      }
    }
  }

  p.result.accepted = true;
  p.result.final_state = m.names_for(state_after(m, d, d.moves.size()));
  return p.result;
}

// ---------------------------------------------------------------------------
// Search.  Both modes collapse PRO's choices by their observable summary —
// the members the defences keep and the negations drop.  The final state is
// (opening filter ∩ keep) ∖ drop, so branches with equal summaries are
// interchangeable and only one representative survives, which bounds the
// fan-out by the number of distinct summaries instead of the number of
// distinct dialogues.

struct ReplySummary {
  MemberMask keep;  // intersection of the defence filters
  MemberMask drop;  // union of the negation filters
  std::vector<Move> moves;
};

void submit(std::map<InformationState, Dialogue>& best, InformationState names,
            Dialogue d) {
  auto [it, inserted] = best.try_emplace(std::move(names), std::move(d));
  if (!inserted && d.moves.size() < it->second.moves.size()) {
    it->second = std::move(d);
  }
}

// Skeptical replies, memoized per argument and depth.  Capping defence chains
// at the union argument count loses nothing: a grounded argument is defended
// within that many waves of the defence operator.
struct SkepticalSearcher {
  const UnionIndex& u;
  std::size_t depth_cap;
  std::map<std::pair<ArgumentId, std::size_t>, std::vector<ReplySummary>> memo;

  ReplySummary blank() const {
    return ReplySummary{MemberMask(u.m.member_count(), true),
                        MemberMask(u.m.member_count()), {}};
  }

  const std::vector<ReplySummary>& reply(const ArgumentId& x, std::size_t depth) {
    auto key = std::make_pair(x, depth);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto entries = compute(x, depth);
    return memo.emplace(std::move(key), std::move(entries)).first->second;
  }

  std::vector<ReplySummary> compute(const ArgumentId& x, std::size_t depth) {
    std::vector<ReplySummary> acc{blank()};
    for (std::size_t ai : u.attacks_on_arg(x)) {
      const ArgumentId& y = u.attacks[ai].first;
      std::vector<ReplySummary> options;
      {  // claim the attack is absent from the intended framework
        ReplySummary e = blank();
        e.drop = u.attack_masks[ai];
        e.moves = {opp_attack(y, x), pro_negation(y, x)};
        options.push_back(std::move(e));
      }
      if (depth < depth_cap) {
        for (std::size_t di : u.attacks_on_arg(y)) {  // counter-attack y with z
          const ArgumentId& z = u.attacks[di].first;
          for (const ReplySummary& sub : reply(z, depth + 1)) {
            ReplySummary e = sub;
            e.keep &= u.attack_masks[di];
            e.moves = {opp_attack(y, x), pro_defence(z, y)};
            e.moves.insert(e.moves.end(), sub.moves.begin(), sub.moves.end());
            options.push_back(std::move(e));
          }
        }
      }
      // cross the answers for this attack into the partial replies so far,
      // keeping the shortest representative per summary
      std::map<std::pair<MemberMask, MemberMask>, ReplySummary> next;
      for (const ReplySummary& partial : acc) {
        for (const ReplySummary& opt : options) {
          ReplySummary e = partial;
          e.keep &= opt.keep;
          e.drop |= opt.drop;
          e.moves.insert(e.moves.end(), opt.moves.begin(), opt.moves.end());
          auto key = std::make_pair(e.keep, e.drop);
          auto [it, inserted] = next.try_emplace(std::move(key), std::move(e));
          if (!inserted && e.moves.size() < it->second.moves.size()) {
            it->second = std::move(e);
          }
        }
      }
      acc.clear();
      acc.reserve(next.size());
      for (auto& [key, e] : next) acc.push_back(std::move(e));
    }
    for (ReplySummary& e : acc) e.moves.push_back(opp_ok());
    return acc;
  }
};

// Credulous search enumerates PRO's candidate positions — subsets of the
// arguments reachable from the opening by "defender of an attacker" steps —
// and then one answer per union attack into the position: a denial, or a
// counter-attack from inside the position.  An attacker that itself sits in
// the position forces denial; that is the conflict-freeness rule enforced up
// front, so every emitted dialogue validates by construction.

struct CredulousAnswer {
  bool negate = false;
  std::size_t defence = 0;  // union attack index of the counter-attack
};

struct CredulousPlan {
  MemberMask keep, drop;
  std::vector<std::size_t> relevant;      // union attacks into the position
  std::vector<CredulousAnswer> answers;   // parallel to `relevant`
};

// Emits the move tree the plan describes.  A defender PRO already committed
// to on this branch opens no nested reply, exactly as the grammar skips it.
void expand_plan(const UnionIndex& u, const CredulousPlan& plan,
                 const ArgumentId& x, const std::vector<ArgumentId>& committed,
                 std::vector<Move>& moves) {
  for (std::size_t ai : u.attacks_on_arg(x)) {
    const ArgumentId& y = u.attacks[ai].first;
    moves.push_back(opp_attack(y, x));
    const std::size_t slot =
        std::lower_bound(plan.relevant.begin(), plan.relevant.end(), ai) -
        plan.relevant.begin();
    const CredulousAnswer& a = plan.answers[slot];
    if (a.negate) {
      moves.push_back(pro_negation(y, x));
      continue;
    }
    const ArgumentId& z = u.attacks[a.defence].first;
    moves.push_back(pro_defence(z, y));
    if (std::find(committed.begin(), committed.end(), z) == committed.end()) {
      std::vector<ArgumentId> next = committed;
      next.push_back(z);
      expand_plan(u, plan, z, next, moves);
    }
  }
  moves.push_back(opp_ok());
}

std::vector<ArgumentId> position_candidates(const UnionIndex& u,
                                            const ArgumentId& x) {
  std::vector<ArgumentId> out{x};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t ai : u.attacks_on_arg(out[i])) {
      for (std::size_t di : u.attacks_on_arg(u.attacks[ai].first)) {
        const ArgumentId& z = u.attacks[di].first;
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void search_from_opening(const AbductiveAF& m, const UnionIndex& u,
                         const ArgumentId& x,
                         std::map<InformationState, Dialogue>& best) {
  const std::vector<ArgumentId> cands = position_candidates(u, x);
  if (cands.size() > kMaxEnumerableArguments) {
    throw Error(ErrorCode::FrameworkTooLarge,
                "credulous search over " + std::to_string(cands.size()) +
                    " candidate position arguments refused (limit " +
                    std::to_string(kMaxEnumerableArguments) + ")");
  }
  const MemberMask start = m.argument_filter_mask(x);
  const std::size_t outside = cands.size();
  const auto bit_of = [&cands, outside](const ArgumentId& a) {
    const auto it = std::lower_bound(cands.begin(), cands.end(), a);
    return it != cands.end() && *it == a
               ? static_cast<std::size_t>(it - cands.begin())
               : outside;
  };
  const std::size_t x_bit = bit_of(x);

  // candidate bits per union attack, resolved once for all positions
  struct AttackSite {
    std::size_t target_bit, attacker_bit;
    std::vector<std::pair<std::size_t, std::size_t>> defences;  // (bit, attack)
  };
  std::vector<AttackSite> sites(u.attacks.size());
  for (std::size_t ai = 0; ai < u.attacks.size(); ++ai) {
    sites[ai].target_bit = bit_of(u.attacks[ai].second);
    sites[ai].attacker_bit = bit_of(u.attacks[ai].first);
    if (sites[ai].target_bit == outside) continue;
    for (std::size_t di : u.attacks_on_arg(u.attacks[ai].first)) {
      const std::size_t db = bit_of(u.attacks[di].first);
      if (db != outside) sites[ai].defences.emplace_back(db, di);
    }
  }

  // The fold below tracks only the (keep, drop) classes plus back pointers;
  // answer lists are rebuilt for the handful of classes that survive.  A
  // class whose state already died can never prove anything again (keep only
  // shrinks, drop only grows), so it is pruned on the spot.
  struct FoldEntry {
    MemberMask keep, drop;
  };
  FoldEntry scratch{MemberMask(m.member_count()), MemberMask(m.member_count())};
  MemberMask alive(m.member_count());
  for (std::size_t bits = 0; bits < std::size_t{1} << cands.size(); ++bits) {
    if (!(bits >> x_bit & 1)) continue;  // the opening is always committed
    std::vector<std::size_t> relevant;
    std::vector<std::vector<CredulousAnswer>> offered;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> trail;
    std::vector<FoldEntry> acc{FoldEntry{MemberMask(m.member_count(), true),
                                         MemberMask(m.member_count())}};
    for (std::size_t ai = 0; ai < u.attacks.size() && !acc.empty(); ++ai) {
      const AttackSite& site = sites[ai];
      if (site.target_bit == outside || !(bits >> site.target_bit & 1)) continue;
      std::vector<CredulousAnswer> options{CredulousAnswer{true, 0}};
      if (site.attacker_bit == outside || !(bits >> site.attacker_bit & 1)) {
        // an attacker inside the position would force denial
        for (const auto& [db, di] : site.defences) {
          if (bits >> db & 1) options.push_back(CredulousAnswer{false, di});
        }
      }
      std::vector<FoldEntry> next;
      std::vector<std::pair<std::size_t, std::size_t>> back;
      for (std::size_t i = 0; i < acc.size(); ++i) {
        for (std::size_t o = 0; o < options.size(); ++o) {
          scratch = acc[i];
          if (options[o].negate) {
            scratch.drop |= u.attack_masks[ai];
          } else {
            scratch.keep &= u.attack_masks[options[o].defence];
          }
          alive = start;
          alive &= scratch.keep;
          alive -= scratch.drop;
          if (!alive.any()) continue;
          bool seen = false;
          for (const FoldEntry& f : next) {
            if (f.keep == scratch.keep && f.drop == scratch.drop) {
              seen = true;  // the earlier combination keeps the class
              break;
            }
          }
          if (seen) continue;
          next.push_back(scratch);
          back.emplace_back(i, o);
        }
      }
      // reorder the classes by mask so later steps and the final submission
      // walk them deterministically
      std::vector<std::size_t> order(next.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&next](std::size_t l, std::size_t r) {
                  return std::tie(next[l].keep, next[l].drop) <
                         std::tie(next[r].keep, next[r].drop);
                });
      std::vector<FoldEntry> sorted_next;
      std::vector<std::pair<std::size_t, std::size_t>> sorted_back;
      sorted_next.reserve(order.size());
      sorted_back.reserve(order.size());
      for (std::size_t i : order) {
        sorted_next.push_back(std::move(next[i]));
        sorted_back.push_back(back[i]);
      }
      acc = std::move(sorted_next);
      trail.push_back(std::move(sorted_back));
      relevant.push_back(ai);
      offered.push_back(std::move(options));
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
      CredulousPlan plan{acc[k].keep, acc[k].drop, relevant, {}};
      plan.answers.resize(relevant.size());
      for (std::size_t s = trail.size(), at = k; s-- > 0;) {
        plan.answers[s] = offered[s][trail[s][at].second];
        at = trail[s][at].first;
      }
      Dialogue d{x, {}};
      expand_plan(u, plan, x, {x}, d.moves);
      d.moves.push_back(pro_win());
      // the dialogue may visit only part of the position, so read the state
      // off the moves actually made
      InformationState names = m.names_for(state_after(m, d, d.moves.size()));
      submit(best, std::move(names), std::move(d));
    }
  }
}

std::vector<ExplanationWitness> run_search(const AbductiveAF& m,
                                           const Observation& obs, bool credulous) {
  UnionIndex u(m);
  Observation openings = obs;
  std::sort(openings.begin(), openings.end());
  openings.erase(std::unique(openings.begin(), openings.end()), openings.end());

  // shortest dialogue per reachable state (earliest found on ties)
  std::map<InformationState, Dialogue> best;
  if (credulous) {
    for (const ArgumentId& x : openings) {
      search_from_opening(m, u, x, best);
    }
  } else {
    SkepticalSearcher s{
        u, std::max<std::size_t>(m.union_signature().arguments.size(), 1), {}};
    for (const ArgumentId& x : openings) {
      MemberMask start = m.argument_filter_mask(x);
      for (const ReplySummary& e : s.reply(x, 1)) {
        MemberMask state = start;
        state &= e.keep;
        state -= e.drop;
        if (!state.any()) continue;  // proves nothing
        Dialogue d{x, e.moves};
        d.moves.push_back(pro_win());
        submit(best, m.names_for(state), std::move(d));
      }
    }
  }
  std::vector<ExplanationWitness> out;
  out.reserve(best.size());
  for (auto& [names, d] : best) {
    out.push_back(ExplanationWitness{names, std::move(d)});
  }
  return out;
}

}  // namespace

InformationState info_state(const AbductiveAF& m, const Dialogue& d,
                            std::size_t index) {
  if (index > d.moves.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "state index " + std::to_string(index) + " past the last move (" +
                    std::to_string(d.moves.size()) + ")");
  }
  return m.names_for(state_after(m, d, index));
}

ValidationResult validate_skeptical(const AbductiveAF& m, const Dialogue& d,
                                    const Observation& obs) {
  return validate(m, d, obs, false);
}

ValidationResult validate_credulous(const AbductiveAF& m, const Dialogue& d,
                                    const Observation& obs) {
  return validate(m, d, obs, true);
}

std::vector<ExplanationWitness> search_skeptical(const AbductiveAF& m,
                                                 const Observation& obs) {
  return run_search(m, obs, false);
}

std::vector<ExplanationWitness> search_credulous(const AbductiveAF& m,
                                                 const Observation& obs) {
  return run_search(m, obs, true);
}

}  // namespace abdarg
