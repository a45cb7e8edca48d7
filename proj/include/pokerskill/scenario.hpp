#pragma once

#include <string>

#include "pokerskill/game_state.hpp"

namespace pokerskill {

enum class Role { Aggressor, Defender, Neutral };
const char* to_string(Role r);

// Deterministic label for the postflop action line, e.g. F-A2 or R-BC2.
// Letters encode who took the last aggressive action on each prior street
// (A/B hero, C checked through, D villain, X raised line); the trailing
// digit is hero's position (1 = IP, 2 = OOP).
struct ScenarioId {
  Street street = Street::Flop;
  std::string code;
  Role role = Role::Neutral;
  std::string summary;  // one-line strategic gloss
};

ScenarioId detect_scenario(const GameState& state, int hero);

}  // namespace pokerskill
