#include "pokerskill/scenario.hpp"

#include <map>
#include <optional>

namespace pokerskill {

const char* to_string(Role r) {
  switch (r) {
    case Role::Aggressor: return "aggressor";
    case Role::Defender: return "defender";
    case Role::Neutral: return "neutral";
  }
  return "?";
}

namespace {

struct StreetLine {
  int aggressive_actions = 0;
  std::optional<int> last_aggressor;
};

StreetLine street_line(const GameState& state, Street s) {
  StreetLine out;
  for (const auto& h : state.history) {
    if (h.street != s) continue;
    if (h.action.kind == ActionKind::Bet || h.action.kind == ActionKind::Raise ||
        h.action.kind == ActionKind::AllIn) {
      ++out.aggressive_actions;
      out.last_aggressor = h.seat;
    }
  }
  return out;
}

// A = hero made the street's single bet, D = villain did, C = checked
// through, E/F = raised line ending with hero/villain. The river's flop
// letter splits hero bets by position (A = IP, B = OOP).
char line_letter(const StreetLine& line, int hero, bool split_hero_position,
                 bool hero_ip) {
  if (line.aggressive_actions == 0) return 'C';
  bool hero_last = line.last_aggressor && *line.last_aggressor == hero;
  if (line.aggressive_actions == 1) {
    if (hero_last) return split_hero_position ? (hero_ip ? 'A' : 'B') : 'A';
    return 'D';
  }
  return hero_last ? 'E' : 'F';
}

std::string line_phrase(char letter, bool hero_ip) {
  switch (letter) {
    case 'A': return hero_ip ? "We bet IP" : "We bet flop OOP";
    case 'B': return "We bet flop OOP";
    case 'C': return "checked through";
    case 'D': return "villain bet";
    case 'E': return "raised line, we last";
    case 'F': return "raised line, villain last";
  }
  return "?";
}

const std::map<std::string, std::string>& builtin_glosses() {
  static const std::map<std::string, std::string> m = {
      {"F-A1", "Aggressor IP. Villain acts first. -> C-bet when checked to (board-dependent)."},
      {"F-A2", "Aggressor OOP. We act first. -> C-bet or check (board-dependent)."},
      {"F-D1", "Defender IP. -> Versus a c-bet: call, raise, or fold. When checked to: stab."},
      {"F-D2", "Defender OOP. We act first. -> Check to the aggressor, then check-call or check-raise."},
      {"F-N1", "Limp pot IP. -> Stab small or check behind."},
      {"F-N2", "Limp pot OOP. -> Bet small with equity or check."},
      {"T-A1", "We bet flop IP, villain called. -> Barrel or check back."},
      {"T-A2", "We bet flop OOP, villain called. -> Continue or check to defense."},
      {"T-C1", "Flop checked through, we are IP. -> Delayed c-bet or stab when checked to."},
      {"T-C2", "Flop checked through, we are OOP. -> Probe or check."},
      {"T-D1", "Villain bet flop, we called IP. -> Call, raise, or fold versus the barrel."},
      {"T-D2", "Villain bet flop, we called OOP. -> Check-call, check-raise, or donk rarely."},
      {"R-AA1", "We bet flop and turn IP. -> Triple barrel or check back."},
      {"R-AA2", "We bet flop and turn OOP. -> Triple barrel or check."},
      {"R-AC1", "We bet flop IP, checked turn. -> Delayed value bet or showdown."},
      {"R-AC2", "We bet flop IP, checked turn. -> Bet or check."},
      {"R-BC2", "We bet flop OOP, checked turn. -> We can bet polarized or blocking bet or check."},
      {"R-CC1", "Both streets checked, we are IP. -> Thin value or showdown."},
      {"R-CC2", "Both streets checked, we are OOP. -> Stab wide or check."},
      {"R-DD1", "Villain bet flop and turn, we called IP. -> Bluff-catch decision versus triple barrel."},
      {"R-DD2", "Villain bet flop and turn, we called OOP. -> Bluff-catch decision versus triple barrel."},
  };
  return m;
}

}  // namespace

ScenarioId detect_scenario(const GameState& state, int hero) {
  if (state.street == Street::Preflop)
    throw std::invalid_argument("detect_scenario is postflop only");

  bool hero_ip = state.button == hero;  // button acts last postflop
  int pos_digit = hero_ip ? 1 : 2;

  // Initiative: last aggressive action anywhere, falling back to the
  // preflop aggressor.
  std::optional<int> initiative = state.preflop_aggressor();
  Street last_aggr_street = Street::Preflop;
  for (const auto& h : state.history) {
    if (h.action.kind == ActionKind::Bet || h.action.kind == ActionKind::Raise ||
        h.action.kind == ActionKind::AllIn) {
      initiative = h.seat;
      last_aggr_street = h.street;
    }
  }

  Role role;
  if (!initiative) {
    role = Role::Neutral;
  } else {
    // Initiative goes stale when the most recent completed postflop
    // street went check-check.
    bool stale = false;
    if (state.street > Street::Flop) {
      Street prev = static_cast<Street>(static_cast<int>(state.street) - 1);
      if (street_line(state, prev).aggressive_actions == 0 &&
          last_aggr_street < prev)
        stale = true;
      (void)last_aggr_street;
    }
    if (stale) role = Role::Neutral;
    else role = *initiative == hero ? Role::Aggressor : Role::Defender;
  }

  ScenarioId out;
  out.street = state.street;
  out.role = role;

  std::string code;
  switch (state.street) {
    case Street::Flop: {
      char r = role == Role::Aggressor ? 'A' : role == Role::Defender ? 'D' : 'N';
      code = std::string("F-") + r + std::to_string(pos_digit);
      break;
    }
    case Street::Turn: {
      char f = line_letter(street_line(state, Street::Flop), hero, false, hero_ip);
      code = std::string("T-") + f + std::to_string(pos_digit);
      break;
    }
    case Street::River: {
      char f = line_letter(street_line(state, Street::Flop), hero, true, hero_ip);
      char t = line_letter(street_line(state, Street::Turn), hero, false, hero_ip);
      code = std::string("R-") + f + t + std::to_string(pos_digit);
      break;
    }
    default:
      break;
  }
  out.code = code;

  auto it = builtin_glosses().find(code);
  if (it != builtin_glosses().end()) {
    out.summary = it->second;
  } else {
    std::string s;
    if (state.street >= Street::Turn)
      s += "Flop: " + line_phrase(code[2], hero_ip) + ". ";
    if (state.street == Street::River)
      s += "Turn: " + line_phrase(code[3], hero_ip) + ". ";
    s += hero_ip ? "We are IP." : "We are OOP.";
    out.summary = s;
  }
  return out;
}

}  // namespace pokerskill
