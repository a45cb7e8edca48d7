#include "doctest.h"

#include "pokerskill/scenario.hpp"

using namespace pokerskill;

namespace {

GameState golden_to_flop() {
  std::array<std::vector<Card>, 2> hole{parse_cards("As 2d"), parse_cards("5c 4c")};
  GameState s = initial_state(0, hole, parse_cards("7s 6h Jc 6c 9h"));
  s = apply(s, {ActionKind::Bet, from_bb(2.75)});
  s = apply(s, {ActionKind::Bet, from_bb(9)});
  s = apply(s, {ActionKind::Call});
  return s;  // 3-bet pot, seat 1 is the OOP aggressor, to act on the flop
}

}  // namespace

TEST_CASE("golden line produces F-A2, T-A2, R-BC2 for the OOP 3-bettor") {
  GameState s = golden_to_flop();
  ScenarioId flop = detect_scenario(s, 1);
  CHECK(flop.code == "F-A2");
  CHECK(flop.role == Role::Aggressor);
  CHECK(!flop.summary.empty());

  s = apply(s, {ActionKind::Bet, from_bb(5)});
  s = apply(s, {ActionKind::Call});
  ScenarioId turn = detect_scenario(s, 1);
  CHECK(turn.code == "T-A2");
  CHECK(turn.role == Role::Aggressor);

  s = apply(s, {ActionKind::Check});
  s = apply(s, {ActionKind::Check});
  ScenarioId river = detect_scenario(s, 1);
  CHECK(river.code == "R-BC2");
  // Initiative goes stale after the turn checks through.
  CHECK(river.role == Role::Neutral);
}

TEST_CASE("defender and IP variants") {
  GameState s = golden_to_flop();
  CHECK(detect_scenario(s, 0).code == "F-D1");
  CHECK(detect_scenario(s, 0).role == Role::Defender);

  s = apply(s, {ActionKind::Bet, from_bb(5)});
  s = apply(s, {ActionKind::Call});
  CHECK(detect_scenario(s, 0).code == "T-D1");

  s = apply(s, {ActionKind::Check});
  s = apply(s, {ActionKind::Check});
  CHECK(detect_scenario(s, 0).code == "R-DC1");
}

TEST_CASE("checked-through lines stay neutral") {
  std::array<std::vector<Card>, 2> hole{parse_cards("As 2d"), parse_cards("5c 4c")};
  GameState s = initial_state(0, hole, parse_cards("7s 6h Jc 6c 9h"));
  s = apply(s, {ActionKind::Call});   // limp
  s = apply(s, {ActionKind::Check});
  s = apply(s, {ActionKind::Check});  // flop
  s = apply(s, {ActionKind::Check});
  ScenarioId turn = detect_scenario(s, 0);
  CHECK(turn.code == "T-C1");
  CHECK(turn.role == Role::Neutral);

  s = apply(s, {ActionKind::Check});
  s = apply(s, {ActionKind::Check});
  ScenarioId river = detect_scenario(s, 1);
  CHECK(river.code == "R-CC2");
  CHECK(river.role == Role::Neutral);
}

TEST_CASE("raised lines use the E/F letters") {
  GameState s = golden_to_flop();
  s = apply(s, {ActionKind::Bet, from_bb(5)});
  s = apply(s, {ActionKind::Bet, from_bb(15)});  // seat 0 raises
  s = apply(s, {ActionKind::Call});
  ScenarioId turn0 = detect_scenario(s, 0);
  CHECK(turn0.code == "T-E1");
  ScenarioId turn1 = detect_scenario(s, 1);
  CHECK(turn1.code == "T-F2");
}

TEST_CASE("preflop states are rejected") {
  std::array<std::vector<Card>, 2> hole{parse_cards("As 2d"), parse_cards("5c 4c")};
  GameState s = initial_state(0, hole, parse_cards("7s 6h Jc 6c 9h"));
  CHECK_THROWS(detect_scenario(s, 0));
}
