#include "pokerskill/game_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pokerskill {

double to_bb(Money m) { return static_cast<double>(m) / kBB; }

Money from_bb(double bb) { return static_cast<Money>(std::llround(bb * kBB)); }

std::string money_str(Money m) {
  char buf[32];
  if (m % kBB == 0)
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(m / kBB));
  else if (m % 10 == 0)
    std::snprintf(buf, sizeof buf, "%.1f", to_bb(m));
  else
    std::snprintf(buf, sizeof buf, "%.2f", to_bb(m));
  return buf;
}

const char* to_string(Street s) {
  switch (s) {
    case Street::Preflop: return "preflop";
    case Street::Flop: return "flop";
    case Street::Turn: return "turn";
    case Street::River: return "river";
  }
  return "?";
}

const char* to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Fold: return "fold";
    case ActionKind::Check: return "check";
    case ActionKind::Call: return "call";
    case ActionKind::Bet: return "bet";
    case ActionKind::Raise: return "raise";
    case ActionKind::AllIn: return "all_in";
  }
  return "?";
}

const char* to_string(PotType p) {
  switch (p) {
    case PotType::Limp: return "Limp";
    case PotType::SRP: return "SRP";
    case PotType::ThreeBet: return "3BP";
    case PotType::FourBetPlus: return "4BP+";
  }
  return "?";
}

std::vector<Card> GameState::board() const {
  size_t need = 0;
  switch (street) {
    case Street::Preflop: need = 0; break;
    case Street::Flop: need = 3; break;
    case Street::Turn: need = 4; break;
    case Street::River: need = 5; break;
  }
  if (runout.size() < need)
    throw std::runtime_error("runout has too few cards for the current street");
  return {runout.begin(), runout.begin() + need};
}

int GameState::preflop_raise_count() const {
  Money level = kBB;
  int count = 0;
  for (const auto& e : history) {
    if (e.street != Street::Preflop) break;
    if (e.action.amount_to > level &&
        (e.action.kind == ActionKind::Bet || e.action.kind == ActionKind::Raise ||
         e.action.kind == ActionKind::AllIn)) {
      ++count;
      level = e.action.amount_to;
    }
  }
  return count;
}

std::optional<int> GameState::preflop_aggressor() const {
  Money level = kBB;
  std::optional<int> who;
  for (const auto& e : history) {
    if (e.street != Street::Preflop) break;
    if (e.action.amount_to > level) {
      who = e.seat;
      level = e.action.amount_to;
    }
  }
  return who;
}

Money GameState::effective_stack() const { return std::min(stacks[0], stacks[1]); }

std::array<Money, 2> GameState::results_bb_x100() const {
  if (!terminal) throw std::logic_error("results on non-terminal state");
  return {stacks[0] - initial_stacks[0], stacks[1] - initial_stacks[1]};
}

GameState initial_state(int button, const std::array<std::vector<Card>, 2>& hole,
                        const std::vector<Card>& runout, Money stacks) {
  if (button != 0 && button != 1) throw std::invalid_argument("button must be 0 or 1");
  GameState s;
  s.button = button;
  s.hole = hole;
  s.runout = runout;
  s.stacks = {stacks, stacks};
  s.initial_stacks = {stacks, stacks};
  int sb = button, bb = 1 - button;
  Money sb_post = std::min(kBB / 2, s.stacks[sb]);
  Money bb_post = std::min(kBB, s.stacks[bb]);
  s.stacks[sb] -= sb_post;
  s.stacks[bb] -= bb_post;
  s.street_committed[sb] = sb_post;
  s.street_committed[bb] = bb_post;
  s.pot = sb_post + bb_post;
  s.bet_to_match = bb_post;
  s.last_raise_increment = kBB;
  s.to_act = sb;
  return s;
}

LegalActionSet legal_actions(const GameState& state) {
  if (state.terminal) throw std::logic_error("no legal actions in a terminal state");
  LegalActionSet out;
  int me = state.to_act, opp = 1 - me;
  Money my = state.street_committed[me];
  Money all_in_level = my + state.stacks[me];
  if (state.facing_bet()) {
    out.can_fold = true;
    out.can_call = true;
    out.call_amount_to = std::min(state.bet_to_match, all_in_level);
    if (state.betting_reopened && all_in_level > state.bet_to_match && state.stacks[opp] > 0) {
      out.can_bet_raise = true;
      out.min_bet_to = std::min(state.bet_to_match + state.last_raise_increment, all_in_level);
      out.max_bet_to = all_in_level;
    }
  } else {
    out.can_check = true;
    if (state.stacks[me] > 0 && state.stacks[opp] > 0) {
      out.can_bet_raise = true;
      Money min_level = state.bet_to_match == 0
                            ? kBB
                            : state.bet_to_match + state.last_raise_increment;
      out.min_bet_to = std::min(min_level, all_in_level);
      out.max_bet_to = all_in_level;
    }
  }
  return out;
}

namespace {

void settle_showdown(GameState& s) {
  if (s.runout.size() != 5)
    throw std::runtime_error("showdown requires a complete 5-card runout");
  HandRank r0 = evaluate_best5(s.hole[0], s.runout);
  HandRank r1 = evaluate_best5(s.hole[1], s.runout);
  s.terminal = true;
  if (r0 > r1) {
    s.stacks[0] += s.pot;
  } else if (r1 > r0) {
    s.stacks[1] += s.pot;
  } else {
    s.stacks[0] += s.pot / 2;
    s.stacks[1] += s.pot - s.pot / 2;
  }
  s.pot = 0;
}

void close_street(GameState& s) {
  s.street_committed = {0, 0};
  s.bet_to_match = 0;
  s.last_raise_increment = 0;
  s.acted_this_street = {false, false};
  s.betting_reopened = true;
  if (s.street == Street::River) {
    settle_showdown(s);
    return;
  }
  s.street = static_cast<Street>(static_cast<int>(s.street) + 1);
  s.to_act = 1 - s.button;  // OOP acts first postflop
  // Someone all-in: no more betting, run out the board.
  if (s.stacks[0] == 0 || s.stacks[1] == 0) {
    s.street = Street::River;
    settle_showdown(s);
  }
}

void advance_if_closed(GameState& s) {
  bool equal = s.street_committed[0] == s.street_committed[1];
  bool done0 = s.acted_this_street[0] || s.stacks[0] == 0;
  bool done1 = s.acted_this_street[1] || s.stacks[1] == 0;
  if (equal && done0 && done1) close_street(s);
}

void commit(GameState& s, int seat, Money level) {
  Money delta = level - s.street_committed[seat];
  if (delta < 0 || delta > s.stacks[seat])
    throw std::logic_error("bad commit amount");
  s.stacks[seat] -= delta;
  s.street_committed[seat] = level;
  s.pot += delta;
}

}  // namespace

GameState apply(const GameState& state, const ActionRecord& action) {
  LegalActionSet legal = legal_actions(state);
  GameState s = state;
  int me = s.to_act, opp = 1 - me;

  ActionRecord rec = action;
  rec.pot_before = s.pot;

  switch (action.kind) {
    case ActionKind::Fold: {
      if (!legal.can_fold) throw std::invalid_argument("fold not legal here");
      rec.amount_to = 0;
      s.history.push_back({s.street, me, rec});
      // Return the uncalled portion of the outstanding bet to the bettor.
      Money refund = s.street_committed[opp] - s.street_committed[me];
      if (refund > 0) {
        s.stacks[opp] += refund;
        s.pot -= refund;
      }
      s.folded_seat = me;
      s.terminal = true;
      s.stacks[opp] += s.pot;
      s.pot = 0;
      return s;
    }
    case ActionKind::Check: {
      if (!legal.can_check) throw std::invalid_argument("check not legal here");
      rec.amount_to = 0;
      s.history.push_back({s.street, me, rec});
      s.acted_this_street[me] = true;
      s.to_act = opp;
      advance_if_closed(s);
      return s;
    }
    case ActionKind::Call: {
      if (!legal.can_call) throw std::invalid_argument("call not legal here");
      Money target = legal.call_amount_to;
      rec.amount_to = target;
      s.history.push_back({s.street, me, rec});
      commit(s, me, target);
      if (target < s.bet_to_match) {
        // Short all-in call: refund the uncalled excess to the bettor.
        Money refund = s.street_committed[opp] - target;
        s.stacks[opp] += refund;
        s.street_committed[opp] = target;
        s.pot -= refund;
        s.bet_to_match = target;
      }
      s.acted_this_street[me] = true;
      s.to_act = opp;
      advance_if_closed(s);
      return s;
    }
    case ActionKind::Bet:
    case ActionKind::Raise:
    case ActionKind::AllIn: {
      Money level = action.amount_to;
      if (action.kind == ActionKind::AllIn && level == 0)
        level = s.street_committed[me] + s.stacks[me];
      if (!legal.can_bet_raise) {
        // All-in that cannot raise (short stack facing a bet) resolves as a call.
        if (action.kind == ActionKind::AllIn && legal.can_call &&
            legal.call_amount_to == s.street_committed[me] + s.stacks[me])
          return apply(state, {ActionKind::Call, 0, 0});
        throw std::invalid_argument("bet/raise not legal here");
      }
      bool is_all_in = level == legal.max_bet_to;
      if (level < legal.min_bet_to && !is_all_in)
        throw std::invalid_argument("bet below minimum");
      if (level > legal.max_bet_to)
        throw std::invalid_argument("bet above all-in maximum");
      rec.amount_to = level;
      s.history.push_back({s.street, me, rec});
      Money old_level = s.bet_to_match;
      commit(s, me, level);
      Money increment = level - old_level;
      if (old_level == 0 || increment >= s.last_raise_increment) {
        s.last_raise_increment = old_level == 0 ? level : increment;
        s.betting_reopened = true;
      } else {
        s.betting_reopened = false;  // short all-in raise does not reopen
      }
      s.bet_to_match = level;
      s.acted_this_street[me] = true;
      s.acted_this_street[opp] = false;
      s.to_act = opp;
      advance_if_closed(s);  // opponent may already be all-in with equal chips
      return s;
    }
  }
  throw std::invalid_argument("unknown action kind");
}

PotType pot_type(const GameState& state) {
  int raises = state.preflop_raise_count();
  if (raises == 0) return PotType::Limp;
  if (raises == 1) return PotType::SRP;
  if (raises == 2) return PotType::ThreeBet;
  return PotType::FourBetPlus;
}

double spr(const GameState& state) {
  if (state.pot <= 0) throw std::invalid_argument("spr undefined on zero pot");
  return static_cast<double>(state.effective_stack()) / static_cast<double>(state.pot);
}

std::string display_spr(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ratio);
  return buf;
}

GameState replay(const GameState& initial, const std::vector<HistoryEntry>& history) {
  GameState s = initial;
  for (const auto& e : history) {
    if (s.terminal) throw std::runtime_error("history continues past a terminal state");
    if (e.seat != s.to_act) throw std::runtime_error("history seat does not match to_act");
    s = apply(s, e.action);
  }
  return s;
}

}  // namespace pokerskill
