#pragma once

#include <vector>

#include "pokerskill/game_state.hpp"

namespace pokerskill {

// One step of the bet-size-to-weight table: bets strictly below `below`
// percent of pot cost `weight`. The last entry also caps everything above.
struct PressureStep {
  double below;
  double weight;
};

// The 17-entry step table shipped with the engine.
const std::vector<PressureStep>& default_pressure_table();

// Weight for a bet of the given size, in percent of the pot at bet time.
// Exact-threshold inputs land in the higher bucket. Throws on negative input.
double pressure_weight(double bet_pct_of_pot);
double pressure_weight(double bet_pct_of_pot, const std::vector<PressureStep>& table);

struct PressureSummary {
  double total_weighted = 0;  // all postflop bets/raises
  double hero_weighted = 0;   // hero's share
  double villain_weighted = 0;
  double next_bet_index() const { return total_weighted + 1; }
  int postflop_bet_count = 0;
};

// Sums pressure weights over every postflop bet/raise in the history,
// using the pot recorded at the moment of each action.
PressureSummary cumulative_pressure(const GameState& state, int hero);

}  // namespace pokerskill
