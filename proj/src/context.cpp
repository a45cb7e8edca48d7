#include "pokerskill/context.hpp"

namespace pokerskill {

ContextReport build_context(const GameState& state, int hero) {
  if (state.street == Street::Preflop)
    throw std::invalid_argument("build_context is postflop only");
  ContextReport r;
  r.pot = pot_type(state);
  r.texture = classify_board(state.board(), state.street);
  r.cls = classify_hand(state.hole[hero], state.board(), r.pot, state.street);
  r.scenario = detect_scenario(state, hero);
  r.pressure = cumulative_pressure(state, hero);
  r.spr_value = spr(state);
  r.hero_ip = state.button == hero;

  r.budget_ctx.pot = r.pot;
  r.budget_ctx.texture = r.texture;
  r.budget_ctx.hero_ip = r.hero_ip;
  r.budget_ctx.street = state.street;
  r.budget_ctx.spr = r.spr_value;
  r.budget_ctx.role = r.scenario.role;
  // A river raise after hero's own bet carries the re-raise penalty.
  if (state.street == Street::River && state.facing_bet()) {
    bool hero_bet_river = false;
    for (const auto& h : state.history)
      if (h.street == Street::River && h.seat == hero &&
          (h.action.kind == ActionKind::Bet || h.action.kind == ActionKind::Raise))
        hero_bet_river = true;
    r.budget_ctx.facing_river_reraise = hero_bet_river;
  }

  r.budget = compute_budget(r.cls, r.budget_ctx);
  r.verdict = verdict(r.budget, r.pressure, r.cls, r.budget_ctx, state.facing_bet());

  ViableContext vc{r.cls, r.budget_ctx, r.scenario, r.pressure};
  r.viable = compute_viable(state, hero, vc, r.budget, r.verdict);
  return r;
}

}  // namespace pokerskill
