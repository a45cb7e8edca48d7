#include "pokerskill/skill_library.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace pokerskill {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::set<std::string> split_list(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) out.insert(tok);
  }
  return out;
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg) {
  throw std::runtime_error(file + ":" + std::to_string(line) + ": " + msg);
}

const std::set<std::string> kStreetTokens = {"preflop", "flop", "turn", "river"};
const std::set<std::string> kPotTokens = {"limp", "srp", "3bp", "4bp"};
const std::set<std::string> kRoleTokens = {"aggressor", "defender", "neutral"};

const std::set<std::string>& class_tokens() {
  static const std::set<std::string> t = {
      "nuts", "flush", "straight", "set", "trip", "two_pair", "overpair",
      "top_pair", "second_pair", "third_pair", "fourth_fifth_pair",
      "nuts_high", "second_high", "weak_showdown", "trash",
      "strong_draw", "medium_strong_draw", "medium_draw", "medium_weak_draw",
      "weak_draw", "strong_overcard_draw", "medium_overcard_draw",
      "weak_overcard_draw", "special_board"};
  return t;
}

const std::set<std::string>& texture_tokens() {
  static const std::set<std::string> t = {
      "dry", "slightly_wet", "wet", "very_wet",
      "rainbow", "two_tone", "monotone", "flush_possible", "one_card_flush",
      "unpaired", "paired", "trips_board", "double_paired", "quads_board",
      "full_house_board", "straight_possible", "one_card_straight",
      "board_straight", "board_flush"};
  return t;
}

const std::set<std::string>& scenario_tokens() {
  static const std::set<std::string> t = {
      "unopened_button", "limp_pot", "limp_raised", "bb_vs_minraise",
      "bb_vs_open", "bb_vs_large_open", "3bet_pot", "4bet_pot", "5bet_plus",
      "vs_allin", "shortstack_unopened", "shortstack_allin"};
  return t;
}

void parse_file(const fs::path& path, int expected_layer,
                std::vector<SkillFragment>& out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  int lineno = 0;
  const std::string file = path.string();

  enum class Mode { Top, Headers, Body } mode = Mode::Top;
  SkillFragment frag;
  int frag_line = 0;
  bool have_layer = false;

  auto finish = [&]() {
    if (!have_layer) fail(file, frag_line, "fragment missing 'layer' header");
    if (trim(frag.body).empty())
      fail(file, frag_line, "fragment '" + frag.name + "' has an empty body");
    if (frag.layer == 2 && frag.scenario.empty())
      fail(file, frag_line, "layer P2 fragment needs a 'scenario' header");
    out.push_back(frag);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (mode == Mode::Body) {
      if (trim(line) == "@end") {
        finish();
        mode = Mode::Top;
        continue;
      }
      frag.body += line;
      frag.body += '\n';
      continue;
    }
    std::string t = trim(line);
    if (mode == Mode::Top) {
      if (t.empty() || t[0] == '#') continue;
      if (t.rfind("@fragment", 0) != 0)
        fail(file, lineno, "expected '@fragment <name>', got: " + t);
      frag = SkillFragment{};
      frag.name = trim(t.substr(9));
      frag.source = file;
      frag_line = lineno;
      have_layer = false;
      if (frag.name.empty()) fail(file, lineno, "@fragment needs a name");
      mode = Mode::Headers;
      continue;
    }
    // Mode::Headers
    if (t == "---") {
      mode = Mode::Body;
      continue;
    }
    if (t.empty() || t[0] == '#') continue;
    size_t colon = t.find(':');
    if (colon == std::string::npos)
      fail(file, lineno, "expected 'key: value' header or '---'");
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "layer") {
      if (value.size() != 2 || value[0] != 'P' || value[1] < '1' || value[1] > '5')
        fail(file, lineno, "layer must be P1..P5, got '" + value + "'");
      frag.layer = value[1] - '0';
      if (frag.layer != expected_layer)
        fail(file, lineno, "layer " + value + " in a p" +
                               std::to_string(expected_layer) + "/ directory");
      have_layer = true;
    } else if (key == "order") {
      try {
        frag.order = std::stoi(value);
      } catch (...) {
        fail(file, lineno, "order must be an integer");
      }
    } else if (key == "street") {
      frag.streets = split_list(value);
      for (const auto& s : frag.streets)
        if (!kStreetTokens.count(s)) fail(file, lineno, "unknown street '" + s + "'");
    } else if (key == "pot_type") {
      frag.pot_types = split_list(value);
      for (const auto& s : frag.pot_types)
        if (!kPotTokens.count(s)) fail(file, lineno, "unknown pot_type '" + s + "'");
    } else if (key == "hand_class") {
      if (!class_tokens().count(value))
        fail(file, lineno, "unknown hand_class '" + value + "'");
      frag.hand_class = value;
    } else if (key == "texture") {
      frag.textures = split_list(value);
      for (const auto& s : frag.textures) {
        std::string base = s[0] == '!' ? s.substr(1) : s;
        if (!texture_tokens().count(base)) fail(file, lineno, "unknown texture tag '" + s + "'");
      }
    } else if (key == "position") {
      if (value != "ip" && value != "oop") fail(file, lineno, "position must be ip or oop");
      frag.position = value;
    } else if (key == "scenario") {
      if (!scenario_tokens().count(value))
        fail(file, lineno, "unknown preflop scenario '" + value + "'");
      frag.scenario = value;
    } else if (key == "role") {
      if (!kRoleTokens.count(value)) fail(file, lineno, "unknown role '" + value + "'");
      frag.role = value;
    } else {
      fail(file, lineno, "unknown header key '" + key + "'");
    }
  }
  if (mode == Mode::Headers) fail(file, lineno, "fragment has no '---' body separator");
  if (mode == Mode::Body) fail(file, lineno, "fragment body not closed with '@end'");
}

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> files;
  if (!fs::exists(dir)) return files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ext) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

std::string pot_token(PotType p) {
  switch (p) {
    case PotType::Limp: return "limp";
    case PotType::SRP: return "srp";
    case PotType::ThreeBet: return "3bp";
    case PotType::FourBetPlus: return "4bp";
  }
  return "?";
}

}  // namespace

const SkillFragment* SkillLibrary::find(int layer, const std::string& name) const {
  for (const auto& f : fragments)
    if (f.layer == layer && f.name == name) return &f;
  return nullptr;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("POKERSKILL_DATA_DIR")) return env;
#ifdef POKERSKILL_DEFAULT_DATA_DIR
  return POKERSKILL_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

uint64_t manifest_hash(const std::string& data_dir) {
  // FNV-1a 64 over "relative-path\n" + content for every file, sorted by path.
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(data_dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& p : files) {
    mix(fs::relative(p, data_dir).generic_string());
    mix("\n");
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    mix(ss.str());
  }
  return h;
}

SkillLibrary load_library(const std::string& data_dir) {
  if (!fs::exists(data_dir))
    throw std::runtime_error("skill library directory not found: " + data_dir);
  SkillLibrary lib;
  lib.root = data_dir;
  for (int layer = 1; layer <= 5; ++layer) {
    fs::path dir = fs::path(data_dir) / ("p" + std::to_string(layer));
    if (!fs::exists(dir))
      throw std::runtime_error("missing layer directory: " + dir.string());
    auto files = sorted_files(dir, ".skill");
    if (files.empty())
      throw std::runtime_error("layer directory has no .skill files: " + dir.string());
    for (const auto& f : files) parse_file(f, layer, lib.fragments);
  }
  // Duplicate (layer, name) pairs are load errors.
  std::map<std::pair<int, std::string>, std::string> seen;
  for (const auto& f : lib.fragments) {
    auto key = std::make_pair(f.layer, f.name);
    auto [it, inserted] = seen.emplace(key, f.source);
    if (!inserted)
      throw std::runtime_error("duplicate fragment P" + std::to_string(f.layer) + "/" +
                               f.name + " in " + f.source + " and " + it->second);
  }
  // Every preflop scenario code needs a P2 entry; every hand class a P4 one.
  for (const auto& code : scenario_tokens()) {
    bool found = false;
    for (const auto& f : lib.fragments)
      if (f.layer == 2 && f.scenario == code) found = true;
    if (!found) throw std::runtime_error("no P2 range entry for scenario '" + code + "'");
  }
  for (const auto& cls : class_tokens()) {
    bool found = false;
    for (const auto& f : lib.fragments)
      if (f.layer == 4 && f.hand_class == cls) found = true;
    if (!found) throw std::runtime_error("no P4 strength entry for class '" + cls + "'");
  }
  std::stable_sort(lib.fragments.begin(), lib.fragments.end(),
                   [](const SkillFragment& a, const SkillFragment& b) {
                     if (a.layer != b.layer) return a.layer < b.layer;
                     if (a.order != b.order) return a.order < b.order;
                     return a.name < b.name;
                   });
  lib.manifest_hash = manifest_hash(data_dir);
  return lib;
}

std::vector<std::string> lint_library(const std::string& data_dir) {
  std::vector<std::string> problems;
  try {
    load_library(data_dir);
  } catch (const std::exception& e) {
    problems.push_back(e.what());
  }
  return problems;
}

std::string preflop_scenario(const GameState& state) {
  if (state.street != Street::Preflop)
    throw std::invalid_argument("preflop_scenario called postflop");
  int hero = state.to_act, opp = 1 - hero;
  bool hero_button = state.button == hero;
  int raises = state.preflop_raise_count();
  Money eff_start = std::min(state.initial_stacks[0], state.initial_stacks[1]);

  if (eff_start <= 25 * kBB)
    return raises > 0 ? "shortstack_allin" : "shortstack_unopened";
  if (state.stacks[opp] == 0 && state.facing_bet()) return "vs_allin";
  if (raises >= 4) return "5bet_plus";
  if (raises == 3) return "4bet_pot";
  if (raises == 2) return "3bet_pot";
  if (raises == 1) {
    if (hero_button) return "limp_raised";
    Money open = state.bet_to_match;
    if (open <= 2 * kBB) return "bb_vs_minraise";
    if (open <= 4 * kBB) return "bb_vs_open";
    return "bb_vs_large_open";
  }
  return hero_button ? "unopened_button" : "limp_pot";
}

std::set<std::string> texture_tags(const BoardTexture& tex) {
  std::set<std::string> tags;
  tags.insert(to_string(tex.wetness));
  tags.insert(to_string(tex.suit_label));
  if (tex.pair_structure != PairStructure::Unpaired)
    tags.insert(to_string(tex.pair_structure));
  else
    tags.insert("unpaired");
  if (tex.straight.kind == StraightKind::StraightPossible) tags.insert("straight_possible");
  if (tex.straight.kind == StraightKind::OneCardStraight) {
    tags.insert("straight_possible");
    tags.insert("one_card_straight");
  }
  if (tex.board_straight) tags.insert("board_straight");
  if (tex.board_flush) tags.insert("board_flush");
  if (tex.flush_possible()) tags.insert("flush_possible");
  return tags;
}

namespace {

bool matches(const SkillFragment& f, const std::string& street,
             const std::string& pot, const std::string& role,
             const std::string& position, const std::set<std::string>& tags) {
  if (!f.streets.empty() && !f.streets.count(street)) return false;
  if (!f.pot_types.empty() && !f.pot_types.count(pot)) return false;
  if (!f.role.empty() && f.role != role) return false;
  if (!f.position.empty() && f.position != position) return false;
  for (const auto& t : f.textures) {
    if (t[0] == '!') {
      if (tags.count(t.substr(1))) return false;
    } else if (!tags.count(t)) {
      return false;
    }
  }
  return true;
}

std::string strength_key(const ContextReport& r) {
  if (r.cls.special_board != SpecialBoard::None) return "special_board";
  // The draw entry leads when the draw floor, not the made class, set the
  // attack budget.
  if (r.cls.draw_class && r.budget.att_reason.find("draw floor") != std::string::npos)
    return to_string(*r.cls.draw_class);
  return to_string(r.cls.made_class);
}

}  // namespace

std::vector<const SkillFragment*> select_fragments(const SkillLibrary& lib,
                                                   const GameState& state, int hero,
                                                   const ContextReport* report) {
  std::vector<const SkillFragment*> out;
  std::string street = to_string(state.street);
  std::string pot = pot_token(pot_type(state));

  if (state.street == Street::Preflop) {
    std::string code = preflop_scenario(state);
    for (const auto& f : lib.fragments) {
      if (f.layer == 1 && matches(f, street, pot, "", "", {})) out.push_back(&f);
      if (f.layer == 2 && f.scenario == code) out.push_back(&f);
    }
    return out;
  }

  if (!report) throw std::invalid_argument("postflop selection needs a context report");
  std::string role = to_string(report->scenario.role);
  std::string position = report->hero_ip ? "ip" : "oop";
  std::set<std::string> tags = texture_tags(report->texture);
  std::string strength = strength_key(*report);

  for (const auto& f : lib.fragments) {
    if (f.layer == 2) continue;
    if (f.layer == 5 && state.street != Street::River) continue;
    if (f.layer == 4) {
      if (!f.hand_class.empty()) {
        if (f.hand_class != strength) continue;  // exactly one strength entry
      } else if (f.textures.empty() && f.pot_types.empty() && f.position.empty() &&
                 f.role.empty()) {
        continue;  // P4 fragments must be keyed on something
      }
    }
    if (!matches(f, street, pot, role, position, tags)) continue;
    out.push_back(&f);
  }
  return out;
}

}  // namespace pokerskill
