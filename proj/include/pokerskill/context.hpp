#pragma once

#include "pokerskill/board.hpp"
#include "pokerskill/budget.hpp"
#include "pokerskill/game_state.hpp"
#include "pokerskill/hand_class.hpp"
#include "pokerskill/pressure.hpp"
#include "pokerskill/scenario.hpp"
#include "pokerskill/viable.hpp"

namespace pokerskill {

// Everything the engine derives for one postflop decision node.
struct ContextReport {
  BoardTexture texture;
  HandClassification cls;
  PotType pot = PotType::SRP;
  ScenarioId scenario;
  PressureSummary pressure;
  double spr_value = 0;
  bool hero_ip = false;
  BudgetContext budget_ctx;
  BudgetPair budget;
  BudgetVerdict verdict;
  ViableActionSet viable;
};

// Runs the full pipeline for the seat to act. Postflop only; preflop
// decisions use the range tables instead.
ContextReport build_context(const GameState& state, int hero);

}  // namespace pokerskill
