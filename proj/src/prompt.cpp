#include "pokerskill/prompt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pokerskill {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), ::toupper);
  return s;
}

std::string spaced(std::string s) {
  std::replace(s.begin(), s.end(), '_', ' ');
  return s;
}

// Up to 2 decimals, trailing zeros trimmed: 1 -> "1", 1.45 -> "1.45".
std::string fmt_trim(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string legal_line(const LegalActionSet& legal) {
  std::vector<std::string> parts;
  if (legal.can_fold) parts.push_back("fold (f)");
  if (legal.can_check) parts.push_back("check (k)");
  if (legal.can_call) parts.push_back("call (c) " + money_str(legal.call_amount_to));
  if (legal.can_bet_raise)
    parts.push_back("bet/raise (b) [" + money_str(legal.min_bet_to) + " - " +
                    money_str(legal.max_bet_to) + "]");
  std::string out = "LEGAL ACTIONS: ";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

const SkillFragment* by_name_prefix(const std::vector<const SkillFragment*>& sel,
                                    int layer, const std::string& prefix) {
  for (const auto* f : sel)
    if (f->layer == layer && f->name.rfind(prefix, 0) == 0) return f;
  return nullptr;
}

std::string body_of(const SkillFragment* f) {
  if (!f) return "";
  std::string b = f->body;
  while (!b.empty() && b.back() == '\n') b.pop_back();
  return b;
}

struct Baseline {
  const char* adjust;
  const char* value_floor;
};

Baseline baseline_for(PotType p) {
  switch (p) {
    case PotType::Limp: return {"limp +0", "top pair+ for value"};
    case PotType::SRP: return {"srp +0", "top pair+ for value"};
    case PotType::ThreeBet: return {"3bp -0.5", "second pair+ for value"};
    case PotType::FourBetPlus: return {"4bp -1", "any pair+ for value"};
  }
  return {"", ""};
}

}  // namespace

std::string canonical_hand(const std::vector<Card>& hole) {
  if (hole.size() != 2) throw std::invalid_argument("canonical_hand needs 2 cards");
  Card a = hole[0], b = hole[1];
  if (b.rank > a.rank) std::swap(a, b);
  std::string s;
  s += rank_char(a.rank);
  s += rank_char(b.rank);
  if (a.rank != b.rank) s += a.suit == b.suit ? 's' : 'o';
  return s;
}

std::string describe_action(const ActionRecord& a) {
  switch (a.kind) {
    case ActionKind::Fold: return "fold";
    case ActionKind::Check: return "check";
    case ActionKind::Call: return "call";
    case ActionKind::Bet:
    case ActionKind::Raise: return "bet/raise to " + money_str(a.amount_to);
    case ActionKind::AllIn: return "all-in to " + money_str(a.amount_to);
  }
  return "?";
}

DecisionPrompt build_prompt(const GameState& state, int hero, const SkillLibrary& lib) {
  DecisionPrompt out;
  out.legal = legal_actions(state);
  std::ostringstream os;

  if (state.street == Street::Preflop) {
    auto sel = select_fragments(lib, state, hero, nullptr);
    os << "[RANGE TABLE] scenario=" << preflop_scenario(state)
       << " hand=" << canonical_hand(state.hole[hero]) << "\n";
    if (const auto* r = by_name_prefix(sel, 2, "range-")) os << body_of(r) << "\n";
    if (const auto* g = by_name_prefix(sel, 1, "action-grammar")) os << body_of(g) << "\n";
    os << "\n" << legal_line(out.legal) << "\n";
    os << "\nWhat is your action? Respond in JSON: "
       << R"({"action": "X", "amount": N, "reasoning": "..."})" << "\n";
    out.text = os.str();
    return out;
  }

  ContextReport r = build_context(state, hero);
  auto sel = select_fragments(lib, state, hero, &r);
  bool river = state.street == Street::River;
  int opp = 1 - hero;

  os << "=== HUNL 200BB Hand ===\n\n";
  os << "SITUATION:\n";
  os << "- Street: " << upper(to_string(state.street)) << "\n";
  os << "- Position: " << (r.hero_ip ? "BTN/SB (IP postflop)" : "BB (OOP postflop)") << "\n";
  auto aggr = state.preflop_aggressor();
  os << "- Pot type: " << to_string(r.pot);
  if (aggr)
    os << " (preflop aggressor: " << (*aggr == hero ? "hero" : "villain") << ")";
  else
    os << " (no preflop raise)";
  os << "\n";
  switch (r.scenario.role) {
    case Role::Aggressor: os << "- You are the AGGRESSOR\n"; break;
    case Role::Defender: os << "- You are the DEFENDER\n"; break;
    case Role::Neutral:
      os << "- NEUTRAL -- aggressor checked prior street, no longer aggressive. "
            "You can probe, stab, or bet polarized based on hand strength\n";
      break;
  }
  os << "\n";

  os << "YOUR HAND: " << format_cards(state.hole[hero]) << " ("
     << canonical_hand(state.hole[hero]) << ")\n";
  os << ">>> Hand evaluation: " << r.cls.summary << " <<<\n";
  os << "BOARD: " << format_cards(state.board()) << "\n";
  os << "Board texture: " << r.texture.describe() << "\n\n";

  os << "STACKS & POT:\n";
  os << "- Pot: " << money_str(state.pot) << " | Total pot: " << money_str(state.pot) << "\n";
  os << "- Your stack: " << money_str(state.stacks[hero])
     << " | Villain: " << money_str(state.stacks[opp]) << "\n";
  os << "- SPR: " << display_spr(r.spr_value) << "\n";
  if (state.facing_bet()) {
    Money more = std::min(state.bet_to_match, state.street_committed[hero] + state.stacks[hero]) -
                 state.street_committed[hero];
    os << "- Facing bet: " << money_str(state.bet_to_match) << " (call "
       << money_str(more) << " more)\n";
  } else {
    os << "- No bet to face\n";
  }
  os << "\n";

  os << "ACTION HISTORY:\n";
  for (int st = 0; st <= static_cast<int>(state.street); ++st) {
    Street s = static_cast<Street>(st);
    std::vector<std::string> parts;
    for (const auto& h : state.history)
      if (h.street == s) parts.push_back(describe_action(h.action));
    if (parts.empty()) continue;
    os << "  " << to_string(s) << ": ";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << " -> ";
      os << parts[i];
    }
    os << "\n";
  }
  os << "\n" << legal_line(out.legal) << "\n\n";

  os << "=== GENERAL PRINCIPLES (apply in priority order) ===\n\n";
  if (const auto* p = by_name_prefix(sel, 3, "priority-principles")) os << body_of(p) << "\n\n";
  if (const auto* n = by_name_prefix(sel, 1, "attack-defense-notation")) os << body_of(n) << "\n\n";

  os << "[YOUR HAND STRENGTH]\n";
  for (const auto* f : sel)
    if (f->layer == 4 && !f->hand_class.empty()) os << body_of(f) << "\n";
  os << "\n";

  os << "=== SITUATION ANALYSIS (apply to current spot) ===\n";
  os << "[OVERALL]\n";
  os << "Before choosing your action, analyze the following about YOUR hand:\n";
  if (!river) {
    os << "1. What is your absolute hand strength? (e.g., top pair good kicker, bottom pair, flush draw)\n"
       << "2. [Flop/Turn Only] What draws do you have? (flush draw, straight draw, backdoor draws, combo draws)\n"
       << "3. What is your relative hand strength? Relative strength depends on: absolute strength, "
          "board wetness (wet boards devalue non-nut hands), and opponent's action history "
          "(aggressive actions = stronger ranges)\n"
       << "4. What is your plan for future streets/opponent actions? (bet 3 streets, check one street, give up)\n"
       << "5. [Attention] READ the [YOUR HAND STRENGTH] section carefully -- it already classified "
          "your hand. Trust it over your own quick judgment.\n";
  } else {
    os << "1. What is your absolute hand strength? (check [YOUR HAND STRENGTH] below -- trust its classification)\n"
       << "2. There are NO draws on the river -- all draws have either completed or missed.\n"
       << "3. What is your relative hand strength? Consider: board texture, opponent's action "
          "history across all streets, and what hands opponent is representing.\n"
       << "4. Is this a VALUE BET, BLUFF, or CHECK/CALL situation? Value bet strong hands, bluff "
          "with no showdown value + good blockers, check back medium hands.\n";
  }
  os << "\n[POT TYPE ADJUSTMENT]\n";
  if (const auto* p = by_name_prefix(sel, 4, "pot-")) os << body_of(p) << "\n";

  os << "\n[BOARD TEXTURE -- " << upper(to_string(state.street)) << "]\n";
  for (const auto* f : sel)
    if (f->layer == 4 && f->name.rfind("tex-", 0) == 0) os << body_of(f) << "\n";

  os << "\n[ACTION LINE]\n";
  os << "Scenario: " << r.scenario.code << " -- " << r.scenario.summary << "\n";
  os << "Weighted postflop bets so far: " << fmt_trim(r.pressure.total_weighted)
     << " (hero: " << fmt_trim(r.pressure.hero_weighted) << "). Next bet counts as #"
     << fmt_trim(r.pressure.next_bet_index()) << ".\n";
  Baseline bl = baseline_for(r.pot);
  os << "-> Hand strength baseline (" << to_string(r.pot) << ", " << bl.adjust << ", "
     << fmt_trim(r.pressure.next_bet_index()) << " weighted bets): " << bl.value_floor << ".\n";
  os << "-> YOUR HAND: " << spaced(to_string(r.cls.made_class));
  if (r.cls.draw_class) os << " + " << spaced(to_string(*r.cls.draw_class));
  os << " Cumulative attacks so far: " << fmt1(r.pressure.hero_weighted) << " weighted bets.\n";
  os << ">>> ATTACK BUDGET: " << r.budget.att_reason << " | used: "
     << fmt_trim(r.pressure.hero_weighted) << " | remaining: "
     << (r.verdict.rem.att_unlimited ? std::string("unlimited")
                                     : signed_budget_num(r.verdict.rem.att_rem))
     << " | " << to_string(r.verdict.ruling) << " <<<\n";
  os << "-> Viable options: ";
  for (size_t i = r.viable.options.size(); i-- > 0;) {
    os << r.viable.options[i].label;
    if (i) os << " / ";
  }
  os << "\n";

  SizingMenu menu = sizing_menu(state.pot, state.stacks[hero], state.street);
  os << "\n[BET SIZING REFERENCE (pot = " << fmt2(to_bb(state.pot))
     << " BB, use these BB amounts)]\n";
  for (const auto& row : menu.rows)
    os << "- " << row.pct << "% pot: " << fmt2(to_bb(row.amount)) << " BB\n";
  os << "- MAX ALL-IN (capped): " << fmt2(to_bb(menu.all_in_cap)) << " BB (300% pot)\n";

  int remaining_streets = static_cast<int>(Street::River) - static_cast<int>(state.street) + 1;
  double geo = geometric_fraction(r.spr_value, remaining_streets);
  os << "\n[GEOMETRIC SIZING]\n";
  if (river)
    os << "- Geometric bet would be " << std::llround(geo)
       << "% pot (single street); prefer the standard menu unless committed.\n";
  else
    os << "- Geometric bet: " << std::llround(geo) << "% pot per street over "
       << remaining_streets << " streets gets stacks in by the river.\n";

  os << "\n[POSITION]\n";
  if (const auto* p = by_name_prefix(sel, 4, "pos-")) os << body_of(p) << "\n";

  if (river) {
    os << "\n=== REFERENCE: River Bluff & Bluff-catch (lower priority -- use as "
          "supplementary guidelines) ===\n";
    for (const auto* f : sel)
      if (f->layer == 5) os << body_of(f) << "\n";
  }

  os << "\n\nWhat is your action? Respond in JSON: "
     << R"({"action": "X", "amount": N, "reasoning": "..."})" << "\n";

  out.report = std::move(r);
  out.text = os.str();
  return out;
}

}  // namespace pokerskill
