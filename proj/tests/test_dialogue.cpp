#include "doctest.h"

#include "abdarg/dialogue.hpp"
#include "abdarg/formats.hpp"
#include "helpers.hpp"

using namespace abdarg;
using namespace testutil;

namespace {

// The two-defence run for observation {b}: both attacks on b are countered
// through e, which pins the family down to the one member holding e ⇝ a.
Dialogue double_defence_dialogue() {
  return Dialogue{"b",
                  {opp_attack("c", "b"), pro_defence("e", "c"), opp_ok(),
                   opp_attack("a", "b"), pro_defence("e", "a"), opp_ok(),
                   opp_ok(), pro_win()}};
}

// Same opening, but the second attack is denied instead of countered.
Dialogue defence_then_denial_dialogue() {
  return Dialogue{"b",
                  {opp_attack("c", "b"), pro_defence("e", "c"), opp_ok(),
                   opp_attack("a", "b"), pro_negation("a", "b"), opp_ok(),
                   pro_win()}};
}

// Credulous run where b answers for itself, so no nested reply opens.
Dialogue self_defence_dialogue() {
  return Dialogue{"b",
                  {opp_attack("c", "b"), pro_defence("b", "c"),
                   opp_attack("a", "b"), pro_negation("a", "b"), opp_ok(),
                   pro_win()}};
}

std::vector<InformationState> states_of(const AbductiveAF& m, const Dialogue& d) {
  std::vector<InformationState> out;
  for (std::size_t i = 0; i <= d.moves.size(); ++i) {
    out.push_back(info_state(m, d, i));
  }
  return out;
}

NameSet witness_union(const std::vector<ExplanationWitness>& ws) {
  NameSet out;
  for (const auto& w : ws) out.insert(w.explained.begin(), w.explained.end());
  return out;
}

}  // namespace

TEST_CASE("information state narrows along PRO moves") {
  const auto fam = example_family();
  const auto d = double_defence_dialogue();
  CHECK(info_state(fam, d, 0) == InformationState{"F", "G1", "G2", "G3"});
  CHECK(info_state(fam, d, 1) == InformationState{"F", "G1", "G2", "G3"});
  CHECK(info_state(fam, d, 2) == InformationState{"G1", "G3"});
  CHECK(info_state(fam, d, 4) == InformationState{"G1", "G3"});
  CHECK(info_state(fam, d, 5) == InformationState{"G1"});
  CHECK(info_state(fam, d, 8) == InformationState{"G1"});
  CHECK(code_of([&] { info_state(fam, d, 9); }) == ErrorCode::IndexOutOfRange);

  const auto denial = defence_then_denial_dialogue();
  CHECK(info_state(fam, denial, 5) == InformationState{"G3"});
  CHECK(info_state(fam, denial, 7) == InformationState{"G3"});
}

TEST_CASE("exhaustive replies in either attack order are accepted") {
  const auto fam = example_family();
  const Observation obs{"b"};

  auto r = validate_skeptical(fam, double_defence_dialogue(), obs);
  CHECK(r.accepted);
  CHECK(r.final_state == InformationState{"G1"});

  // same moves with the attacks raised the other way round
  const Dialogue swapped{"b",
                         {opp_attack("a", "b"), pro_defence("e", "a"), opp_ok(),
                          opp_attack("c", "b"), pro_defence("e", "c"), opp_ok(),
                          opp_ok(), pro_win()}};
  r = validate_skeptical(fam, swapped, obs);
  CHECK(r.accepted);
  CHECK(r.final_state == InformationState{"G1"});

  r = validate_skeptical(fam, defence_then_denial_dialogue(), obs);
  CHECK(r.accepted);
  CHECK(r.final_state == InformationState{"G3"});

  r = validate_credulous(fam, self_defence_dialogue(), obs);
  CHECK(r.accepted);
  CHECK(r.final_state == InformationState{"G2", "G3"});

  // an unattacked opening closes in two moves
  const Dialogue trivial{"d", {opp_ok(), pro_win()}};
  r = validate_skeptical(fam, trivial, {"d"});
  CHECK(r.accepted);
  CHECK(r.final_state == InformationState{"F", "G1"});
}

TEST_CASE("grammar violations are pinpointed") {
  const auto fam = example_family();
  const Observation obs{"b"};
  auto reject = [&](const Dialogue& d) { return validate_skeptical(fam, d, obs); };

  auto r = reject({"b", {opp_attack("c", "b")}});
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 1);  // moves.size() marks truncation
  CHECK(r.violated_rule == "attack c -> b left unanswered");

  r = reject({"b", {opp_ok(), pro_win()}});
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 0);
  CHECK(r.violated_rule ==
        "'OPP: ok' before every attack on 'b' was raised (missing a -> b)");

  r = reject({"b",
              {opp_attack("c", "b"), pro_defence("e", "c"), opp_ok(),
               opp_attack("c", "b")}});
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 3);
  CHECK(r.violated_rule == "attack c -> b raised twice in one reply");

  r = validate_skeptical(fam, double_defence_dialogue(), {"a"});
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 0);
  CHECK(r.violated_rule == "the dialogue must open for a member of the observation");

  r = reject({"b", {opp_attack("d", "b"), pro_win()}});
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 0);
  CHECK(r.violated_rule == "no member carries the attack d -> b");

  r = reject({"b", {opp_attack("c", "b"), pro_negation("a", "b"), pro_win()}});
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 1);
  CHECK(r.violated_rule == "negation must name the attack c -> b");

  r = reject({"b", {opp_attack("c", "b"), pro_defence("e", "a"), pro_win()}});
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 1);
  CHECK(r.violated_rule == "defence must attack 'c'");

  r = reject({"b", {opp_attack("c", "b"), pro_defence("d", "c"), pro_win()}});
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 1);
  CHECK(r.violated_rule == "no member carries the attack d -> c");

  // everything answered but the closing move missing
  Dialogue unfinished = defence_then_denial_dialogue();
  unfinished.moves.pop_back();
  r = reject(unfinished);
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == unfinished.moves.size());
  CHECK(r.violated_rule == "missing final 'PRO: win'");

  Dialogue overlong = defence_then_denial_dialogue();
  overlong.moves.push_back(opp_ok());
  r = reject(overlong);
  CHECK_FALSE(r.accepted);
  CHECK(r.error_index == 7);
  CHECK(r.violated_rule == "moves after 'PRO: win'");
}

TEST_CASE("credulous positions must stay conflict free") {
  // Odd attack cycle: PRO can answer every attack, but only by standing on
  // arguments that fight each other.
  const AbductiveAF cycle(
      "M", {{"M", ArgumentationFramework({"a", "b", "c"},
                                         {{"a", "b"}, {"b", "c"}, {"c", "a"}})}});
  const Dialogue d{"a",
                   {opp_attack("c", "a"), pro_defence("b", "c"),
                    opp_attack("a", "b"), pro_defence("c", "a"),
                    opp_attack("b", "c"), pro_defence("a", "b"), opp_ok(),
                    opp_ok(), opp_ok(), pro_win()}};

  const auto r = validate_credulous(cycle, d, {"a"});
  CHECK_FALSE(r.accepted);
  CHECK(r.kind == RejectionKind::ConflictInProPosition);
  CHECK(r.error_index == 0);
  CHECK(r.violated_rule == "PRO accepts 'c' yet left its attack on 'a' standing");

  // the same moves break the skeptical grammar instead: the nested reply to
  // 'a' never raises c -> a again
  const auto sk = validate_skeptical(cycle, d, {"a"});
  CHECK_FALSE(sk.accepted);
  CHECK(sk.kind == RejectionKind::Grammar);
  CHECK(sk.error_index == 6);

  // and search agrees that nothing explains {a} here
  CHECK(search_credulous(cycle, {"a"}).empty());
  CHECK(search_skeptical(cycle, {"a"}).empty());
  CHECK(cycle.all_explanations({"a"}, AcceptanceMode::Credulous).empty());
}

TEST_CASE("search returns one shortest witness per final state") {
  const auto fam = example_family();

  // search raises attacks in attacker order, so a -> b comes first
  auto sk = search_skeptical(fam, {"b"});
  REQUIRE(sk.size() == 2);
  CHECK(sk[0].explained == InformationState{"G1"});
  CHECK(sk[0].dialogue ==
        Dialogue{"b", {opp_attack("a", "b"), pro_defence("e", "a"), opp_ok(),
                       opp_attack("c", "b"), pro_defence("e", "c"), opp_ok(),
                       opp_ok(), pro_win()}});
  CHECK(sk[1].explained == InformationState{"G3"});
  CHECK(sk[1].dialogue ==
        Dialogue{"b", {opp_attack("a", "b"), pro_negation("a", "b"),
                       opp_attack("c", "b"), pro_defence("e", "c"), opp_ok(),
                       opp_ok(), pro_win()}});

  auto cr = search_credulous(fam, {"b"});
  REQUIRE(cr.size() == 3);
  CHECK(cr[0].explained == InformationState{"G1"});
  CHECK(cr[0].dialogue ==
        Dialogue{"b", {opp_attack("a", "b"), pro_defence("e", "a"), opp_ok(),
                       opp_attack("c", "b"), pro_defence("b", "c"), opp_ok(),
                       pro_win()}});
  CHECK(cr[1].explained == InformationState{"G2", "G3"});
  CHECK(cr[1].dialogue ==
        Dialogue{"b", {opp_attack("a", "b"), pro_negation("a", "b"),
                       opp_attack("c", "b"), pro_defence("b", "c"), opp_ok(),
                       pro_win()}});
  CHECK(cr[2].explained == InformationState{"G3"});
  CHECK(cr[2].dialogue ==
        Dialogue{"b", {opp_attack("a", "b"), pro_negation("a", "b"),
                       opp_attack("c", "b"), pro_defence("e", "c"), opp_ok(),
                       opp_ok(), pro_win()}});
  CHECK(witness_union(cr) == NameSet{"G1", "G2", "G3"});

  // the lone attack on 'a' comes from an argument only one variant carries
  for (auto* search : {&search_skeptical, &search_credulous}) {
    auto ws = (*search)(fam, {"a"});
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].explained == InformationState{"F"});
    CHECK(ws[0].dialogue ==
          Dialogue{"a", {opp_attack("e", "a"), pro_negation("e", "a"), opp_ok(),
                         pro_win()}});
  }

  // unattacked observation: the trivial two-move dialogue covers every
  // member that contains it
  auto ws = search_skeptical(fam, {"d"});
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].explained == InformationState{"F", "G1"});
  CHECK(ws[0].dialogue == Dialogue{"d", {opp_ok(), pro_win()}});
}

TEST_CASE("search covers exactly the explaining members") {
  std::mt19937 rng(7401);
  for (int trial = 0; trial < 40; ++trial) {
    const AbductiveAF fam = random_family(rng);
    const auto& pool = fam.union_signature().arguments;
    if (pool.empty()) continue;
    const Observation obs = random_observation(rng, pool);
    for (const auto mode : {AcceptanceMode::Skeptical, AcceptanceMode::Credulous}) {
      const bool sk = mode == AcceptanceMode::Skeptical;
      const auto ws = sk ? search_skeptical(fam, obs) : search_credulous(fam, obs);
      CHECK(witness_union(ws) == to_set(ref_explanations(fam, obs, mode)));
      CHECK(witness_union(ws) == to_set(fam.all_explanations(obs, mode)));
      for (const auto& w : ws) {
        const auto r = sk ? validate_skeptical(fam, w.dialogue, obs)
                          : validate_credulous(fam, w.dialogue, obs);
        CHECK(r.accepted);
        CHECK(r.final_state == w.explained);
        CHECK_FALSE(w.explained.empty());
      }
    }
  }
}

TEST_CASE("witness traces survive a render and parse round trip") {
  std::mt19937 rng(7402);
  for (int trial = 0; trial < 25; ++trial) {
    const AbductiveAF fam = random_family(rng);
    const auto& pool = fam.union_signature().arguments;
    if (pool.empty()) continue;
    const Observation obs = random_observation(rng, pool);
    for (const bool sk : {true, false}) {
      const auto ws = sk ? search_skeptical(fam, obs) : search_credulous(fam, obs);
      for (const auto& w : ws) {
        const Dialogue back = parse_dialogue_trace(render_witness(fam, w));
        CHECK(back == w.dialogue);
        const auto r = sk ? validate_skeptical(fam, back, obs)
                          : validate_credulous(fam, back, obs);
        CHECK(r.accepted);
        CHECK(r.final_state == w.explained);
      }
    }
  }
}

TEST_CASE("state sequences of the textbook runs") {
  const auto fam = example_family();
  const InformationState all{"F", "G1", "G2", "G3"};
  CHECK(states_of(fam, double_defence_dialogue()) ==
        std::vector<InformationState>{all, all, {"G1", "G3"}, {"G1", "G3"},
                                      {"G1", "G3"}, {"G1"}, {"G1"}, {"G1"},
                                      {"G1"}});
  CHECK(states_of(fam, self_defence_dialogue()) ==
        std::vector<InformationState>{all, all, all, all, {"G2", "G3"},
                                      {"G2", "G3"}, {"G2", "G3"}});
}
