#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pokerskill/context.hpp"
#include "pokerskill/game_state.hpp"

namespace pokerskill {

struct SkillFragment {
  std::string name;
  int layer = 0;  // 1..5
  int order = 100;
  std::set<std::string> streets;    // empty = any
  std::set<std::string> pot_types;  // empty = any
  std::string hand_class;           // P4 strength entries: made or draw class name
  std::set<std::string> textures;   // tags that must be present; "!tag" = absent
  std::string scenario;             // P2 preflop scenario code
  std::string role;                 // aggressor/defender/neutral
  std::string position;             // ip/oop
  std::string body;
  std::string source;  // file path, for diagnostics
};

struct SkillLibrary {
  std::vector<SkillFragment> fragments;
  uint64_t manifest_hash = 0;
  std::string root;

  const SkillFragment* find(int layer, const std::string& name) const;
};

// Loads every .skill file under p1/..p5/ plus tables/. Throws
// std::runtime_error with file/line diagnostics on any schema violation;
// nothing is partially loaded.
SkillLibrary load_library(const std::string& data_dir);

// Lint pass: returns human-readable problems instead of throwing.
std::vector<std::string> lint_library(const std::string& data_dir);

// FNV-1a 64 over the sorted (relative path, content) pairs of the data set.
uint64_t manifest_hash(const std::string& data_dir);

// Preflop decision catalog (12 codes), total over all preflop states.
std::string preflop_scenario(const GameState& state);

// Deterministic fragment selection per the layer rules: preflop P1+P2;
// flop/turn P1+P3+P4; river additionally P5. Exactly one hand-strength
// fragment is included postflop.
std::vector<const SkillFragment*> select_fragments(const SkillLibrary& lib,
                                                   const GameState& state, int hero,
                                                   const ContextReport* report);

// Texture tags used for fragment matching, e.g. {"two_tone", "paired"}.
std::set<std::string> texture_tags(const BoardTexture& tex);

std::string default_data_dir();

}  // namespace pokerskill
