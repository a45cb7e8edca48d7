#include "pokerskill/viable.hpp"

#include <algorithm>
#include <cmath>

namespace pokerskill {

const char* to_string(OptionKind k) {
  switch (k) {
    case OptionKind::Check: return "CHECK";
    case OptionKind::Fold: return "FOLD";
    case OptionKind::Call: return "CALL";
    case OptionKind::CBet: return "C-BET";
    case OptionKind::Stab: return "STAB";
    case OptionKind::Probe: return "PROBE BET";
    case OptionKind::Donk: return "DONK BET";
    case OptionKind::BlockBet: return "BLOCK BET";
    case OptionKind::MediumBet: return "MEDIUM BET";
    case OptionKind::PolarizedBet: return "POLARIZED BET";
    case OptionKind::SemiBluff: return "SEMI-BLUFF";
    case OptionKind::CheckRaise: return "CHECK-RAISE";
    case OptionKind::Raise: return "RAISE";
    case OptionKind::AllIn: return "ALL-IN";
  }
  return "?";
}

bool raise_gate(const BudgetValue& att, int bets_placed, int remaining_streets) {
  if (att.unlimited) return true;
  return att.v >= bets_placed + remaining_streets + 1;
}

bool check_gate(const BudgetValue& att, double weighted_so_far, int remaining_streets) {
  if (att.unlimited) return false;
  return att.v < weighted_so_far + remaining_streets + 1;
}

SizingMenu sizing_menu(Money pot, Money stack, Street street) {
  if (pot <= 0) throw std::invalid_argument("pot must be positive");
  static const int kPcts[] = {20, 25, 33, 50, 66, 75, 100, 125, 150, 200};
  SizingMenu menu;
  menu.all_in_cap = std::min(stack, 3 * pot);
  for (int pct : kPcts) {
    if (street == Street::River && pct < 66) continue;
    Money amt = pot * pct / 100;
    if (amt > menu.all_in_cap) amt = menu.all_in_cap;
    menu.rows.push_back({pct, amt});
  }
  if (pot <= 3 * kBB) menu.default_small = kBB;
  return menu;
}

double geometric_fraction(double spr, int remaining_streets) {
  if (spr <= 0 || remaining_streets < 1)
    throw std::invalid_argument("bad geometric input");
  if (remaining_streets == 1) return spr * 100.0;
  double e = (std::pow(1.0 + 2.0 * spr, 1.0 / remaining_streets) - 1.0) / 2.0;
  return e * 100.0;
}

DrawDefense defense_thresholds(DrawClass d, Street street, bool hero_ip,
                               bool facing_check_raise) {
  if (street == Street::River)
    throw std::invalid_argument("draw thresholds are undefined on the river");
  // IP ceilings; OOP uses the same values (separate OOP columns are
  // not defined).
  (void)hero_ip;
  struct Row {
    double flop, turn, cr_flop, cr_turn, allin_eq;
  };
  static const Row rows[] = {
      /* strong         */ {500, 190, 10000, 10000, 60},
      /* medium_strong  */ {250, 100, 150, 60, 0},
      /* medium         */ {150, 60, 100, 40, 0},
      /* medium_weak    */ {94, 40, 60, 30, 0},
      /* weak           */ {68, 24, 40, 15, 0},
      /* strong_oc      */ {80, 35, 55, 25, 0},
      /* medium_oc      */ {58, 23, 28, 10, 0},
      /* weak_oc        */ {35, 15, 0, 0, 0},
  };
  const Row& r = rows[static_cast<int>(d)];
  DrawDefense out;
  bool turn = street == Street::Turn;
  out.max_bet_pct = facing_check_raise ? (turn ? r.cr_turn : r.cr_flop)
                                       : (turn ? r.turn : r.flop);
  out.all_in_equity = r.allin_eq;
  return out;
}

namespace {

int remaining_streets_after(Street s) {
  return s == Street::Flop ? 2 : s == Street::Turn ? 1 : 0;
}

ViableOption bet_option(OptionKind kind, double lo_pct, double hi_pct,
                        const GameState& state, const LegalActionSet& legal,
                        const std::string& label) {
  ViableOption o;
  o.kind = kind;
  o.size_range_pct = {lo_pct, hi_pct};
  Money cap = std::min(state.stacks[state.to_act],
                       3 * state.pot);  // additional chips
  Money base = state.street_committed[state.to_act] +
               (state.bet_to_match - state.street_committed[state.to_act]);
  auto to_level = [&](double pct) {
    Money extra = static_cast<Money>(std::llround(state.pot * pct / 100.0));
    extra = std::min(extra, cap);
    return base + extra;
  };
  o.amount_lo = std::max(legal.min_bet_to, to_level(lo_pct));
  o.amount_hi = std::min(legal.max_bet_to, std::max(o.amount_lo, to_level(hi_pct)));
  o.amount_lo = std::min(o.amount_lo, legal.max_bet_to);
  o.label = label;
  return o;
}

ViableOption plain_option(OptionKind kind, const std::string& label) {
  ViableOption o;
  o.kind = kind;
  o.label = label;
  return o;
}

// Last bet faced, as a percent of the pot before that bet.
double faced_bet_pct(const GameState& state) {
  Street cur = Street::Preflop;
  Money level = 0;
  double pct = 0;
  for (const auto& h : state.history) {
    if (h.street != cur) {
      cur = h.street;
      level = 0;
    }
    if (h.action.kind == ActionKind::Bet || h.action.kind == ActionKind::Raise ||
        h.action.kind == ActionKind::AllIn) {
      Money delta = h.action.amount_to - level;
      if (delta > 0 && h.action.pot_before > 0)
        pct = 100.0 * delta / static_cast<double>(h.action.pot_before);
      level = std::max(level, h.action.amount_to);
    }
  }
  return pct;
}

bool turn_pairs_board(const GameState& state) {
  auto board = state.board();
  if (board.size() < 4) return false;
  for (int i = 0; i < 3; ++i)
    if (board[i].rank == board[3].rank) return true;
  return false;
}

}  // namespace

ViableActionSet compute_viable(const GameState& state, int hero,
                               const ViableContext& ctx, const BudgetPair& budget,
                               const BudgetVerdict& v) {
  LegalActionSet legal = legal_actions(state);
  ViableActionSet out;
  int rem_streets = remaining_streets_after(state.street);
  bool strong_value = ctx.cls.made_class <= MadeClass::TwoPair;
  bool low_spr = ctx.budget_ctx.spr <= 1.5;

  if (!state.facing_bet()) {
    out.options.push_back(plain_option(OptionKind::Check, "CHECK"));

    // Turn pairing: the aggressor checks the pairing street.
    if (state.street == Street::Turn && ctx.scenario.role == Role::Aggressor &&
        turn_pairs_board(state) && !budget.att.unlimited) {
      out.conservative_index = 0;
      return out;
    }
    if (v.ruling == Ruling::CheckForced) {
      out.conservative_index = 0;
      return out;
    }
    if (v.ruling == Ruling::PolarizedBluffOrCheck) {
      if (legal.can_bet_raise) {
        out.options.push_back(bet_option(OptionKind::BlockBet, 20, 35, state, legal,
                                         "BLOCK BET (20-35% pot)"));
        out.options.push_back(bet_option(OptionKind::PolarizedBet, 60, 200, state, legal,
                                         "POLARIZED BET (bluff)"));
      }
      out.conservative_index = 0;
      return out;
    }

    bool prefer_check = check_gate(budget.att, ctx.pressure.hero_weighted, rem_streets);
    bool att_ok = budget.att.unlimited || v.rem.att_rem > 0;
    if (att_ok && !prefer_check && legal.can_bet_raise) {
      if (state.street == Street::Flop && ctx.scenario.role == Role::Aggressor) {
        bool wet = ctx.budget_ctx.texture.wetness >= Wetness::Wet;
        if (wet)
          out.options.push_back(
              bet_option(OptionKind::CBet, 50, 75, state, legal, "C-BET (50-75% pot)"));
        else
          out.options.push_back(
              bet_option(OptionKind::CBet, 25, 33, state, legal, "C-BET (25-33% pot)"));
      } else if (ctx.scenario.role == Role::Aggressor) {
        if (strong_value || ctx.cls.draw_class)
          out.options.push_back(bet_option(OptionKind::PolarizedBet, 60, 100, state,
                                           legal, "POLARIZED BET (60-100% pot)"));
        else
          out.options.push_back(bet_option(OptionKind::MediumBet, 55, 65, state, legal,
                                           "MEDIUM BET (55-65% pot)"));
      } else {
        // Neutral or defender acting without a bet to face.
        bool hero_ip = ctx.budget_ctx.hero_ip;
        if (state.street == Street::River && strong_value) {
          out.options.push_back(bet_option(OptionKind::PolarizedBet, 60, 100, state,
                                           legal, "POLARIZED BET (60-100% pot)"));
        } else if (hero_ip) {
          out.options.push_back(
              bet_option(OptionKind::Stab, 20, 35, state, legal, "STAB (20-35% pot)"));
        } else {
          out.options.push_back(
              bet_option(OptionKind::Probe, 20, 35, state, legal, "PROBE BET (20-35% pot)"));
        }
      }
      if (low_spr && strong_value && legal.can_bet_raise)
        out.options.push_back(plain_option(OptionKind::AllIn, "ALL-IN"));
    }
    out.conservative_index = 0;
    return out;
  }

  // Facing a bet.
  bool fold_excluded = budget.def.unlimited;
  double bet_pct = faced_bet_pct(state);
  bool call_ok = false;
  if (budget.def.unlimited) call_ok = true;
  else if (v.rem.def_rem > 0) call_ok = true;
  if (!call_ok && ctx.cls.draw_class && state.street != Street::River) {
    Money call_cost = legal.call_amount_to - state.street_committed[state.to_act];
    bool call_is_all_in = call_cost >= state.stacks[state.to_act];
    if (!call_is_all_in) {
      DrawDefense dd = defense_thresholds(*ctx.cls.draw_class, state.street,
                                          ctx.budget_ctx.hero_ip, false);
      if (bet_pct <= dd.max_bet_pct) call_ok = true;
    }
  }

  if (!fold_excluded) out.options.push_back(plain_option(OptionKind::Fold, "FOLD"));
  if (legal.can_call && call_ok) out.options.push_back(plain_option(OptionKind::Call, "CALL"));

  bool gate = raise_gate(budget.att, ctx.pressure.postflop_bet_count, rem_streets);
  if (legal.can_bet_raise && gate) {
    OptionKind rk = ctx.budget_ctx.hero_ip ? OptionKind::Raise : OptionKind::CheckRaise;
    ViableOption o;
    o.kind = rk;
    o.amount_lo = legal.min_bet_to;
    o.amount_hi = legal.max_bet_to;
    o.label = rk == OptionKind::Raise ? "RAISE" : "CHECK-RAISE";
    out.options.push_back(o);
  }
  if (legal.can_bet_raise && low_spr &&
      (budget.def.unlimited || v.rem.att_rem >= 1))
    out.options.push_back(plain_option(OptionKind::AllIn, "ALL-IN"));

  if (out.options.empty())
    out.options.push_back(plain_option(OptionKind::Call, "CALL"));
  out.conservative_index = 0;
  return out;
}

}  // namespace pokerskill
