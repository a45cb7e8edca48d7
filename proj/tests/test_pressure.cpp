#include "doctest.h"

#include "pokerskill/pressure.hpp"

using namespace pokerskill;

TEST_CASE("step table maps representative sizes exactly") {
  // One probe inside each bucket, stated as (input pct, expected weight).
  const std::pair<double, double> probes[] = {
      {0, 0.04},    {4.9, 0.04}, {5, 0.30},    {19, 0.30},  {20, 0.50},
      {31, 0.50},   {32, 0.70},  {49, 0.70},   {50, 0.85},  {66, 0.85},
      {67, 1.00},   {84, 1.00},  {85, 1.10},   {99, 1.10},  {100, 1.25},
      {121, 1.25},  {122, 1.40}, {149, 1.40},  {150, 1.60}, {194, 1.60},
      {195, 2.00},  {299, 2.00}, {300, 2.30},  {399, 2.30}, {400, 2.50},
      {499, 2.50},  {500, 2.90}, {699, 2.90},  {700, 3.40}, {999, 3.40},
      {1000, 4.00}, {1499, 4.00}, {1500, 4.00}, {5000, 4.00},
  };
  for (auto [pct, w] : probes) {
    INFO("pct = " << pct);
    CHECK(pressure_weight(pct) == doctest::Approx(w));
  }
}

TEST_CASE("exact thresholds land in the higher bucket") {
  CHECK(pressure_weight(5) == doctest::Approx(0.30));
  CHECK(pressure_weight(67) == doctest::Approx(1.00));
  CHECK(pressure_weight(100) == doctest::Approx(1.25));
}

TEST_CASE("weights are monotone in bet size") {
  double prev = 0;
  for (double pct = 0; pct <= 2000; pct += 0.25) {
    double w = pressure_weight(pct);
    CHECK(w >= prev);
    prev = w;
  }
}

TEST_CASE("negative sizes are rejected") {
  CHECK_THROWS(pressure_weight(-0.01));
}

TEST_CASE("cumulative pressure sums postflop bets at recorded pot sizes") {
  // 3-bet pot 18BB, flop bet 5 into 18 (27.8% -> 0.5), call, turn check/check,
  // river bet 21 into 28 (75% -> 1.0) by the other seat.
  std::array<std::vector<Card>, 2> hole{parse_cards("5c 4c"), parse_cards("As 2d")};
  GameState s = initial_state(0, hole, parse_cards("7s 6h Jc 6c 9h"));
  s = apply(s, {ActionKind::Bet, from_bb(2.75)});
  s = apply(s, {ActionKind::Bet, from_bb(9)});
  s = apply(s, {ActionKind::Call});
  s = apply(s, {ActionKind::Bet, from_bb(5)});  // seat 1 leads flop
  s = apply(s, {ActionKind::Call});
  s = apply(s, {ActionKind::Check});
  s = apply(s, {ActionKind::Check});
  s = apply(s, {ActionKind::Bet, from_bb(21)});  // seat 1 bets river

  PressureSummary p = cumulative_pressure(s, 0);
  CHECK(p.postflop_bet_count == 2);
  CHECK(p.hero_weighted == doctest::Approx(0.0));
  CHECK(p.villain_weighted == doctest::Approx(0.5 + 1.0));
  CHECK(p.total_weighted == doctest::Approx(1.5));
  CHECK(p.next_bet_index() == doctest::Approx(2.5));
}
