#include "pokerskill/policy.hpp"

#include <cmath>

#include "json.hpp"

using json = nlohmann::json;

namespace pokerskill {

namespace {

// Extracts the outermost JSON object so decisions survive prose wrapping.
json extract_object(const std::string& text) {
  size_t start = text.find('{');
  if (start == std::string::npos) throw std::runtime_error("no JSON object in response");
  int depth = 0;
  bool in_str = false, esc = false;
  for (size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (esc) { esc = false; continue; }
    if (in_str) {
      if (c == '\\') esc = true;
      else if (c == '"') in_str = false;
      continue;
    }
    if (c == '"') in_str = true;
    else if (c == '{') ++depth;
    else if (c == '}' && --depth == 0)
      return json::parse(text.substr(start, i - start + 1));
  }
  throw std::runtime_error("unterminated JSON object in response");
}

ActionKind parse_kind(std::string a) {
  for (auto& c : a) c = static_cast<char>(::tolower(c));
  if (a == "f" || a == "fold") return ActionKind::Fold;
  if (a == "k" || a == "check") return ActionKind::Check;
  if (a == "c" || a == "call") return ActionKind::Call;
  if (a == "b" || a == "bet" || a == "raise" || a == "r") return ActionKind::Bet;
  if (a == "allin" || a == "all-in" || a == "all_in") return ActionKind::AllIn;
  throw std::runtime_error("unknown action '" + a + "'");
}

}  // namespace

Decision parse_decision(const std::string& text) {
  json j = extract_object(text);
  if (!j.contains("action") || !j["action"].is_string())
    throw std::runtime_error("decision missing 'action' string");
  Decision d;
  d.kind = parse_kind(j["action"].get<std::string>());
  if (j.contains("reasoning") && j["reasoning"].is_string())
    d.reasoning = j["reasoning"].get<std::string>();
  if (d.kind == ActionKind::Bet) {
    if (!j.contains("amount") || !j["amount"].is_number())
      throw std::runtime_error("bet decision missing numeric 'amount'");
    d.amount_to = from_bb(j["amount"].get<double>());
    if (d.amount_to <= 0) throw std::runtime_error("bet amount must be positive");
  } else if (j.contains("amount") && j["amount"].is_number()) {
    d.amount_to = from_bb(j["amount"].get<double>());
  }
  return d;
}

ActionRecord conservative_action(const GameState& state, const DecisionPrompt& prompt) {
  if (prompt.report) {
    const auto& v = prompt.report->viable;
    if (!v.options.empty()) {
      const auto& opt = v.options[v.conservative_index];
      switch (opt.kind) {
        case OptionKind::Check: return {ActionKind::Check};
        case OptionKind::Fold: return {ActionKind::Fold};
        case OptionKind::Call: return {ActionKind::Call};
        default: {
          Money mid = (opt.amount_lo + opt.amount_hi) / 2;
          return {ActionKind::Bet, mid};
        }
      }
    }
  }
  if (prompt.legal.can_check) return {ActionKind::Check};
  if (prompt.legal.can_fold) return {ActionKind::Fold};
  return {ActionKind::Call};
}

GroundingResult ground_decision(const GameState& state, const DecisionPrompt& prompt,
                                const Decision& decision) {
  const LegalActionSet& legal = prompt.legal;
  auto fallback = [&](const std::string& why) {
    GroundingResult r;
    r.action = conservative_action(state, prompt);
    r.fell_back = true;
    r.note = why;
    return r;
  };

  switch (decision.kind) {
    case ActionKind::Fold:
      if (!legal.can_fold) return fallback("fold with no bet to face");
      if (prompt.report && prompt.report->verdict.rem.def_unlimited)
        return fallback("fold with unlimited defense");
      return {{ActionKind::Fold}, false, ""};
    case ActionKind::Check:
      if (!legal.can_check) return fallback("check while facing a bet");
      return {{ActionKind::Check}, false, ""};
    case ActionKind::Call:
      if (!legal.can_call) return fallback("call with no bet to face");
      return {{ActionKind::Call}, false, ""};
    case ActionKind::AllIn: {
      if (legal.can_bet_raise)
        return {{ActionKind::AllIn, legal.max_bet_to}, false, ""};
      if (legal.can_call && legal.call_amount_to ==
                                state.street_committed[state.to_act] + state.stacks[state.to_act])
        return {{ActionKind::Call}, false, ""};
      return fallback("all-in not available");
    }
    case ActionKind::Bet:
    case ActionKind::Raise: {
      if (!legal.can_bet_raise) return fallback("bet/raise not legal");
      Money amt = decision.amount_to;
      bool is_all_in = amt == legal.max_bet_to;
      if (amt > legal.max_bet_to) return fallback("bet above all-in maximum");
      if (amt < legal.min_bet_to && !is_all_in) return fallback("bet below minimum");
      if (prompt.report) {
        bool bet_viable = false;
        for (const auto& o : prompt.report->viable.options)
          if (o.kind != OptionKind::Check && o.kind != OptionKind::Fold &&
              o.kind != OptionKind::Call)
            bet_viable = true;
        if (!bet_viable) return fallback("bet with no viable bet option");
      }
      return {{is_all_in ? ActionKind::AllIn : ActionKind::Bet, amt}, false, ""};
    }
  }
  return fallback("unknown action kind");
}

namespace {

class RulePolicy : public Policy {
 public:
  Decision decide(const DecisionPrompt& prompt, const GameState& state, int hero) override {
    if (state.street == Street::Preflop) return preflop(prompt, state, hero);
    ActionRecord a = conservative_action(state, prompt);
    return {a.kind == ActionKind::Raise ? ActionKind::Bet : a.kind, a.amount_to, "rule"};
  }
  std::string name() const override { return "rule"; }

 private:
  Decision preflop(const DecisionPrompt& prompt, const GameState& state, int hero) {
    const LegalActionSet& legal = prompt.legal;
    int raises = state.preflop_raise_count();
    if (raises == 0) {
      // Unopened button or BB after a limp: open to 2.5BB with the chart's
      // raising region, otherwise check/limp.
      if (open_hand(state.hole[hero]) && legal.can_bet_raise) {
        Money target = std::max<Money>(250, legal.min_bet_to);
        return {ActionKind::Bet, std::min(target, legal.max_bet_to), "open"};
      }
      if (legal.can_check) return {ActionKind::Check, 0, "check"};
      return {ActionKind::Call, 0, "limp"};
    }
    // Facing a raise: continue with playable hands while the price is sane.
    if (continue_hand(state.hole[hero]) && state.bet_to_match <= 12 * kBB)
      return {ActionKind::Call, 0, "call"};
    if (legal.can_check) return {ActionKind::Check, 0, "check"};
    return {ActionKind::Fold, 0, "fold"};
  }

  static bool open_hand(const std::vector<Card>& h) {
    int hi = std::max(h[0].rank, h[1].rank), lo = std::min(h[0].rank, h[1].rank);
    bool suited = h[0].suit == h[1].suit;
    if (h[0].rank == h[1].rank) return true;          // any pair
    if (hi >= 10) return true;                        // Qx+
    if (suited && hi - lo <= 2) return true;          // suited near-connectors
    return hi >= 8 && lo >= 6;                        // broadway-ish
  }

  static bool continue_hand(const std::vector<Card>& h) {
    int hi = std::max(h[0].rank, h[1].rank), lo = std::min(h[0].rank, h[1].rank);
    bool suited = h[0].suit == h[1].suit;
    if (h[0].rank == h[1].rank) return true;
    if (hi == 12 && lo >= 3) return true;             // A5+
    if (hi >= 9 && lo >= 8) return true;              // JT+
    return suited && hi - lo <= 3 && lo >= 2;
  }
};

}  // namespace

std::unique_ptr<Policy> make_rule_policy() { return std::make_unique<RulePolicy>(); }

}  // namespace pokerskill
