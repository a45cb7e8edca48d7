#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pokerskill/budget.hpp"
#include "pokerskill/game_state.hpp"
#include "pokerskill/scenario.hpp"

namespace pokerskill {

enum class OptionKind {
  Check,
  Fold,
  Call,
  CBet,
  Stab,
  Probe,
  Donk,
  BlockBet,
  MediumBet,
  PolarizedBet,
  SemiBluff,
  CheckRaise,
  Raise,
  AllIn,
};
const char* to_string(OptionKind k);

struct ViableOption {
  OptionKind kind;
  // Bet-family options carry a pot-percentage band plus the concrete
  // amount bounds it maps to (total street level, centi-BB).
  std::optional<std::pair<double, double>> size_range_pct;
  Money amount_lo = 0;
  Money amount_hi = 0;
  std::string label;  // e.g. "C-BET (25-33% pot)"
};

struct ViableActionSet {
  std::vector<ViableOption> options;  // conservative-first
  int conservative_index = 0;
};

struct SizingRow {
  int pct;
  Money amount;  // additional chips, capped
};

struct SizingMenu {
  std::vector<SizingRow> rows;
  Money all_in_cap;       // min(stack, 3x pot)
  Money default_small = 0;  // 1BB default in tiny pots
};

// true when attack supports raising: att >= bets_placed + remaining_streets + 1.
bool raise_gate(const BudgetValue& att, int bets_placed, int remaining_streets);

// true when checking is preferred: att < weighted_so_far + remaining_streets + 1.
bool check_gate(const BudgetValue& att, double weighted_so_far, int remaining_streets);

// Standard percentage rows; cap = min(stack, 300% pot). River menus start
// at 66% (no thin value sizing on the river).
SizingMenu sizing_menu(Money pot, Money stack, Street street);

// Equal pot-fraction that commits stacks over n streets, in percent of pot.
// One street is simply SPR.
double geometric_fraction(double spr, int remaining_streets);

// Max defendable bet size (% of pot) for a draw class, or the all-in
// equity requirement. Throws on river input.
struct DrawDefense {
  double max_bet_pct = 0;
  double all_in_equity = 0;  // required equity % when facing all-in
};
DrawDefense defense_thresholds(DrawClass d, Street street, bool hero_ip,
                               bool facing_check_raise);

struct ViableContext {
  HandClassification cls;
  BudgetContext budget_ctx;
  ScenarioId scenario;
  PressureSummary pressure;
};

ViableActionSet compute_viable(const GameState& state, int hero,
                               const ViableContext& ctx, const BudgetPair& budget,
                               const BudgetVerdict& verdict);

}  // namespace pokerskill
