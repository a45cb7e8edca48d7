#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pokerskill/board.hpp"
#include "pokerskill/hand_class.hpp"
#include "pokerskill/pressure.hpp"
#include "pokerskill/scenario.hpp"

namespace pokerskill {

// A weighted-streets allowance. Unlimited is a sentinel, never arithmetic.
struct BudgetValue {
  bool unlimited = false;
  double v = 0;
};

struct BudgetPair {
  BudgetValue att;
  BudgetValue def;
  bool def_threshold_governed = false;  // pure draws: defense via pot-odds thresholds
  std::string att_reason;               // e.g. "5 (base 0.5, draw floor 5)"
  std::vector<std::pair<std::string, double>> trail;  // applied modifiers
};

struct BudgetContext {
  PotType pot = PotType::SRP;
  BoardTexture texture;
  bool hero_ip = false;
  Street street = Street::Flop;
  double spr = 0;
  Role role = Role::Neutral;
  bool facing_river_reraise = false;
};

struct RemainingBudget {
  bool att_unlimited = false;
  bool def_unlimited = false;
  double att_rem = 0;
  double def_rem = 0;
};

enum class Ruling {
  BetAllowed,
  BetOrCheckRaise,
  CheckForced,
  PolarizedBluffOrCheck,
  DefendAllowed,
  FoldForced,
};
const char* to_string(Ruling r);

struct BudgetVerdict {
  RemainingBudget rem;
  Ruling ruling = Ruling::CheckForced;
  std::string reason;
};

// Loads the budget data file once; throws std::runtime_error on missing or
// malformed data. Path resolution: POKERSKILL_DATA_DIR env var, then the
// compiled-in default data directory.
void load_budget_tables(const std::string& tables_dir);
bool budget_tables_loaded();

BudgetPair compute_budget(const HandClassification& cls, const BudgetContext& ctx);

// Eq: remaining = base - used. Attack subtracts hero's own weighted bets,
// defense subtracts the opponent's.
RemainingBudget remaining(const BudgetPair& b, const PressureSummary& p);

BudgetVerdict verdict(const BudgetPair& b, const PressureSummary& p,
                      const HandClassification& cls, const BudgetContext& ctx,
                      bool facing_bet);

// "5", "0.5", "+4.5", "+0.1": budget numbers print with at most one decimal.
std::string budget_num(double v);
std::string signed_budget_num(double v);

}  // namespace pokerskill
