#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pokerskill/cards.hpp"
#include "pokerskill/hand_eval.hpp"

namespace pokerskill {

// Money is integer hundredths of a big blind. Display rounds to 2 decimals.
using Money = int64_t;
constexpr Money kBB = 100;

double to_bb(Money m);
Money from_bb(double bb);
std::string money_str(Money m);  // "2.75", "18", "0.5"

enum class Street : int { Preflop = 0, Flop, Turn, River };
const char* to_string(Street s);

enum class ActionKind { Fold, Check, Call, Bet, Raise, AllIn };
const char* to_string(ActionKind k);

struct ActionRecord {
  ActionKind kind;
  Money amount_to = 0;   // total bet level this street; 0 for fold/check
  Money pot_before = 0;  // pot at the moment the action was taken
};

struct HistoryEntry {
  Street street;
  int seat;
  ActionRecord action;
};

enum class PotType { Limp, SRP, ThreeBet, FourBetPlus };
const char* to_string(PotType p);

struct LegalActionSet {
  bool can_fold = false;
  bool can_check = false;
  bool can_call = false;
  Money call_amount_to = 0;  // total street level after calling (may be short all-in)
  bool can_bet_raise = false;
  Money min_bet_to = 0;  // minimum legal bet/raise level
  Money max_bet_to = 0;  // all-in level
};

// Two-seat HUNL state. Seat indices are 0 and 1; the button posts the small
// blind and acts first preflop, last postflop. Values are immutable from the
// caller's view: apply() returns the successor.
struct GameState {
  int button = 0;
  std::array<std::vector<Card>, 2> hole;  // 2 cards each
  std::vector<Card> runout;               // up to 5 board cards, revealed by street

  Street street = Street::Preflop;
  std::array<Money, 2> stacks{};            // chips behind
  std::array<Money, 2> street_committed{};  // this street
  Money pot = 0;                            // all committed chips
  int to_act = 0;
  std::array<bool, 2> acted_this_street{false, false};

  Money bet_to_match = 0;        // current street bet level
  Money last_raise_increment = 0;
  bool betting_reopened = true;  // false after a short all-in raise

  bool terminal = false;
  std::optional<int> folded_seat;
  std::array<Money, 2> initial_stacks{};

  std::vector<HistoryEntry> history;

  std::vector<Card> board() const;  // revealed prefix of the runout
  int preflop_raise_count() const;
  std::optional<int> preflop_aggressor() const;  // last preflop raiser
  bool facing_bet() const { return bet_to_match > street_committed[to_act]; }
  Money effective_stack() const;
  std::array<Money, 2> results_bb_x100() const;  // net result, terminal only
};

GameState initial_state(int button, const std::array<std::vector<Card>, 2>& hole,
                        const std::vector<Card>& runout, Money stacks = 200 * kBB);

LegalActionSet legal_actions(const GameState& state);
GameState apply(const GameState& state, const ActionRecord& action);

PotType pot_type(const GameState& state);

// min(stacks) / pot, as a ratio. display_spr rounds to 1 decimal.
double spr(const GameState& state);
std::string display_spr(double ratio);

// Replays a recorded history from the same deal; used for audit checks.
GameState replay(const GameState& initial, const std::vector<HistoryEntry>& history);

}  // namespace pokerskill
