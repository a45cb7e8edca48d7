#pragma once

#include <memory>
#include <string>

#include "pokerskill/prompt.hpp"

namespace pokerskill {

// Wire-format decision: {"action": "b", "amount": 9.0, "reasoning": "..."}.
// Amounts are the TOTAL street level in BB.
struct Decision {
  ActionKind kind = ActionKind::Check;
  Money amount_to = 0;
  std::string reasoning;
};

// Parses the first JSON object found in `text`. Throws std::runtime_error on
// missing/unknown action, or a bet without an amount.
Decision parse_decision(const std::string& text);

struct GroundingResult {
  ActionRecord action;
  bool fell_back = false;
  std::string note;  // why the fallback triggered
};

// Maps a decision onto the legal and viable action sets. No clamping: a bet
// outside the legal bounds, or a bet when no bet-family option is viable,
// falls back to the conservative option.
GroundingResult ground_decision(const GameState& state, const DecisionPrompt& prompt,
                                const Decision& decision);

// The conservative action itself (used as the fallback).
ActionRecord conservative_action(const GameState& state, const DecisionPrompt& prompt);

class Policy {
 public:
  virtual ~Policy() = default;
  virtual void begin_hand() {}
  virtual Decision decide(const DecisionPrompt& prompt, const GameState& state, int hero) = 0;
  virtual std::string name() const = 0;
};

// Deterministic baseline: fixed preflop chart, conservative viable option
// postflop, midpoint sizing when the conservative option is a bet.
std::unique_ptr<Policy> make_rule_policy();

}  // namespace pokerskill
