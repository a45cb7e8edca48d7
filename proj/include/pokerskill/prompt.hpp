#pragma once

#include <optional>
#include <string>

#include "pokerskill/context.hpp"
#include "pokerskill/skill_library.hpp"

namespace pokerskill {

struct DecisionPrompt {
  std::string text;
  LegalActionSet legal;
  std::optional<ContextReport> report;  // postflop only
};

// Canonical two-card shorthand, higher rank first: "54s", "AKo", "QQ".
std::string canonical_hand(const std::vector<Card>& hole);

// Renders the action history entry, e.g. "bet/raise to 2.75".
std::string describe_action(const ActionRecord& a);

DecisionPrompt build_prompt(const GameState& state, int hero, const SkillLibrary& lib);

}  // namespace pokerskill
