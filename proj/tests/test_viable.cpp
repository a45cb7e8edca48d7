#include "doctest.h"

#include <random>

#include "pokerskill/context.hpp"
#include "pokerskill/viable.hpp"

using namespace pokerskill;

namespace {

BudgetValue fin(double v) { return {false, v}; }

GameState golden_to_flop() {
  std::array<std::vector<Card>, 2> hole{parse_cards("As 2d"), parse_cards("5c 4c")};
  GameState s = initial_state(0, hole, parse_cards("7s 6h Jc 6c 9h"));
  s = apply(s, {ActionKind::Bet, from_bb(2.75)});
  s = apply(s, {ActionKind::Bet, from_bb(9)});
  s = apply(s, {ActionKind::Call});
  return s;
}

bool has_kind(const ViableActionSet& v, OptionKind k) {
  for (const auto& o : v.options)
    if (o.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("raise gate: attack must cover bets placed plus remaining streets plus one") {
  CHECK(raise_gate(fin(4.0), 1, 2));
  CHECK(!raise_gate(fin(3.9), 1, 2));
  CHECK(raise_gate(fin(2.0), 0, 1));
  CHECK(raise_gate(BudgetValue{true, 0}, 5, 2));  // unlimited always raises
}

TEST_CASE("check gate: low attack prefers checking") {
  CHECK(check_gate(fin(2.0), 1.35, 1));   // 2 < 3.35
  CHECK(!check_gate(fin(4.0), 1.35, 1));  // 4 >= 3.35
  CHECK(!check_gate(BudgetValue{true, 0}, 1.35, 1));
}

TEST_CASE("sizing menu rows, cap and river trimming") {
  SizingMenu flop = sizing_menu(from_bb(18), from_bb(191), Street::Flop);
  std::vector<int> pcts;
  for (const auto& r : flop.rows) pcts.push_back(r.pct);
  CHECK(pcts == std::vector<int>{20, 25, 33, 50, 66, 75, 100, 125, 150, 200});
  CHECK(flop.all_in_cap == from_bb(54));  // min(191, 3 * 18)
  CHECK(flop.rows.back().amount == from_bb(36));
  for (const auto& r : flop.rows) CHECK(r.amount <= flop.all_in_cap);

  SizingMenu turn = sizing_menu(from_bb(28), from_bb(186), Street::Turn);
  CHECK(turn.all_in_cap == from_bb(84));

  SizingMenu river = sizing_menu(from_bb(28), from_bb(186), Street::River);
  CHECK(river.rows.front().pct == 66);  // no thin sizes on the river

  SizingMenu shallow = sizing_menu(from_bb(100), from_bb(40), Street::Flop);
  CHECK(shallow.all_in_cap == from_bb(40));  // stack-capped
}

TEST_CASE("geometric fraction") {
  CHECK(geometric_fraction(5.0, 1) == doctest::Approx(500));
  CHECK(geometric_fraction(6.64, 1) == doctest::Approx(664));
  // Two equal pots-fraction bets covering SPR 4: x with (1+2x)^2 = 9.
  CHECK(geometric_fraction(4.0, 2) == doctest::Approx(100));
}

TEST_CASE("draw defense thresholds") {
  DrawDefense strong = defense_thresholds(DrawClass::StrongDraw, Street::Flop, true, false);
  CHECK(strong.max_bet_pct == doctest::Approx(500));
  CHECK(strong.all_in_equity == doctest::Approx(60));

  DrawDefense med = defense_thresholds(DrawClass::MediumDraw, Street::Turn, true, false);
  CHECK(med.max_bet_pct == doctest::Approx(60));

  DrawDefense cr = defense_thresholds(DrawClass::MediumDraw, Street::Turn, true, true);
  CHECK(cr.max_bet_pct == doctest::Approx(40));

  CHECK_THROWS(defense_thresholds(DrawClass::WeakDraw, Street::River, true, false));
}

TEST_CASE("golden turn collapses to a forced check") {
  GameState s = golden_to_flop();
  s = apply(s, {ActionKind::Bet, from_bb(5)});
  s = apply(s, {ActionKind::Call});
  ContextReport turn = build_context(s, 1);
  REQUIRE(turn.viable.options.size() == 1);
  CHECK(turn.viable.options[0].kind == OptionKind::Check);
}

TEST_CASE("golden river offers polarized, block and check") {
  GameState s = golden_to_flop();
  s = apply(s, {ActionKind::Bet, from_bb(5)});
  s = apply(s, {ActionKind::Call});
  s = apply(s, {ActionKind::Check});
  s = apply(s, {ActionKind::Check});
  ContextReport river = build_context(s, 1);
  CHECK(has_kind(river.viable, OptionKind::PolarizedBet));
  CHECK(has_kind(river.viable, OptionKind::BlockBet));
  CHECK(has_kind(river.viable, OptionKind::Check));
  CHECK(river.viable.options[river.viable.conservative_index].kind == OptionKind::Check);
}

TEST_CASE("viable options always fit inside the legal bounds") {
  std::mt19937_64 rng(23);
  std::vector<Card> deck;
  for (int su = 0; su < 4; ++su)
    for (int r = 0; r < 13; ++r) deck.push_back({r, su});
  int decisions = 0;
  for (int trial = 0; trial < 120; ++trial) {
    for (size_t i = deck.size() - 1; i > 0; --i)
      std::swap(deck[i], deck[rng() % (i + 1)]);
    std::array<std::vector<Card>, 2> h{{{deck[0], deck[1]}, {deck[2], deck[3]}}};
    std::vector<Card> runout{deck.begin() + 4, deck.begin() + 9};
    GameState s = initial_state(static_cast<int>(trial % 2), h, runout);
    int guard = 0;
    while (!s.terminal && guard++ < 48) {
      LegalActionSet la = legal_actions(s);
      if (s.street != Street::Preflop) {
        ContextReport rep = build_context(s, s.to_act);
        REQUIRE(!rep.viable.options.empty());
        for (const auto& opt : rep.viable.options) {
          switch (opt.kind) {
            case OptionKind::Check: CHECK(la.can_check); break;
            case OptionKind::Fold: CHECK(la.can_fold); break;
            case OptionKind::Call: CHECK(la.can_call); break;
            case OptionKind::AllIn: CHECK(la.can_bet_raise); break;
            default:
              CHECK(la.can_bet_raise);
              if (opt.amount_hi > 0) {
                CHECK(opt.amount_lo >= la.min_bet_to);
                CHECK(opt.amount_hi <= la.max_bet_to);
                CHECK(opt.amount_lo <= opt.amount_hi);
              }
              break;
          }
        }
        ++decisions;
      }
      // Advance with a cheap deterministic policy: call/check when possible.
      if (la.can_check) s = apply(s, {ActionKind::Check});
      else if (la.can_call) s = apply(s, {ActionKind::Call});
      else s = apply(s, {ActionKind::Fold});
    }
  }
  CHECK(decisions > 200);
}
