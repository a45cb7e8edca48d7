#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pokerskill/history.hpp"
#include "pokerskill/policy.hpp"
#include "pokerskill/skill_library.hpp"

namespace pokerskill {

struct MatchConfig {
  int hands = 100;
  uint64_t seed = 42;
  bool duplicate = false;  // mirrored pairs: same deck, hole cards swapped
  std::string out_path;    // optional JSONL destination
};

struct MatchStats {
  int hands = 0;
  double mbb_per_hand_a = 0;  // agent A (seat 0), milli-BB per hand
  double stderr_mbb = 0;      // s / sqrt(n), in mbb
  int fallbacks_a = 0;
  int fallbacks_b = 0;
};

struct MatchResult {
  MatchStats stats;
  std::vector<HandHistoryRecord> records;
};

// Deals one hand from mt19937_64(seed + index) via Fisher-Yates and plays it
// to completion. swap_holes mirrors the deal for duplicate pairs. Policy
// errors and ungroundable decisions fall back to the conservative action and
// are counted per seat.
HandHistoryRecord play_hand(uint64_t seed, int index, Policy& a, Policy& b,
                            const SkillLibrary& lib, bool swap_holes = false);

// Agent A is seat 0; the button alternates by hand index. With duplicate
// dealing, hands 2k and 2k+1 share a deck with hole cards swapped.
MatchResult play_match(const MatchConfig& config, Policy& a, Policy& b,
                       const SkillLibrary& lib);

struct Advice {
  DecisionPrompt prompt;
  Decision decision;
  GroundingResult grounding;
};

Advice advise(const GameState& state, int hero, const SkillLibrary& lib, Policy& policy);

}  // namespace pokerskill
