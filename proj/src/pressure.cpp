#include "pokerskill/pressure.hpp"

#include <stdexcept>

namespace pokerskill {

const std::vector<PressureStep>& default_pressure_table() {
  static const std::vector<PressureStep> table = {
      {5, 0.04},    {20, 0.30},   {32, 0.50},   {50, 0.70},  {67, 0.85},
      {85, 1.00},   {100, 1.10},  {122, 1.25},  {150, 1.40}, {195, 1.60},
      {300, 2.00},  {400, 2.30},  {500, 2.50},  {700, 2.90}, {1000, 3.40},
      {1500, 4.00}, {1500, 4.00},
  };
  return table;
}

double pressure_weight(double bet_pct_of_pot, const std::vector<PressureStep>& table) {
  if (bet_pct_of_pot < 0) throw std::invalid_argument("negative bet percentage");
  for (const auto& step : table)
    if (bet_pct_of_pot < step.below) return step.weight;
  return table.back().weight;
}

double pressure_weight(double bet_pct_of_pot) {
  return pressure_weight(bet_pct_of_pot, default_pressure_table());
}

PressureSummary cumulative_pressure(const GameState& state, int hero) {
  PressureSummary out;
  Street cur = Street::Preflop;
  Money level = 0;
  for (const auto& h : state.history) {
    if (h.street != cur) {
      cur = h.street;
      level = 0;
    }
    if (h.street == Street::Preflop) {
      if (h.action.kind == ActionKind::Bet || h.action.kind == ActionKind::Raise ||
          h.action.kind == ActionKind::AllIn)
        level = std::max(level, h.action.amount_to);
      continue;
    }
    switch (h.action.kind) {
      case ActionKind::Bet:
      case ActionKind::Raise:
      case ActionKind::AllIn: {
        Money delta = h.action.amount_to - level;
        if (delta <= 0) break;  // all-in for less than a raise
        level = h.action.amount_to;
        double pct = 100.0 * static_cast<double>(delta) /
                     static_cast<double>(h.action.pot_before);
        double w = pressure_weight(pct);
        out.total_weighted += w;
        if (h.seat == hero) out.hero_weighted += w;
        else out.villain_weighted += w;
        ++out.postflop_bet_count;
        break;
      }
      default:
        break;
    }
  }
  return out;
}

}  // namespace pokerskill
