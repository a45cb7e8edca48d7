#include "pokerskill/hand_eval.hpp"

#include <algorithm>
#include <array>

namespace pokerskill {

const char* to_string(HandCategory c) {
  switch (c) {
    case HandCategory::HighCard: return "high-card";
    case HandCategory::OnePair: return "one-pair";
    case HandCategory::TwoPair: return "two-pair";
    case HandCategory::Trips: return "trips";
    case HandCategory::Straight: return "straight";
    case HandCategory::Flush: return "flush";
    case HandCategory::FullHouse: return "full-house";
    case HandCategory::Quads: return "quads";
    case HandCategory::StraightFlush: return "straight-flush";
  }
  return "?";
}

std::strong_ordering HandRank::operator<=>(const HandRank& other) const {
  if (auto c = static_cast<int>(category) <=> static_cast<int>(other.category); c != 0)
    return c;
  return tiebreak <=> other.tiebreak;
}

namespace {

// Highest straight top rank in a rank-presence mask, or -1. Ace plays low
// only in the wheel (top rank 3, i.e. the five).
int straight_top(uint16_t ranks) {
  for (int top = 12; top >= 3; --top) {
    bool ok = true;
    for (int k = 0; k < 5; ++k) {
      int r = top - k;
      if (r < 0) r = 12;  // wheel ace
      if (!(ranks & (1u << r))) { ok = false; break; }
    }
    if (ok) return top;
  }
  return -1;
}

// Top n set bits of a rank mask, descending.
void top_ranks(uint16_t mask, int n, std::vector<int>& out) {
  for (int r = 12; r >= 0 && n > 0; --r)
    if (mask & (1u << r)) { out.push_back(r); --n; }
}

HandRank evaluate_direct(const std::vector<Card>& cards) {
  std::array<int, 13> count{};
  std::array<int, 4> suit_count{};
  std::array<uint16_t, 4> suit_ranks{};
  uint16_t rank_mask = 0;
  for (Card c : cards) {
    ++count[c.rank];
    ++suit_count[c.suit];
    suit_ranks[c.suit] |= 1u << c.rank;
    rank_mask |= 1u << c.rank;
  }

  int flush_suit = -1;
  for (int s = 0; s < 4; ++s)
    if (suit_count[s] >= 5) flush_suit = s;

  HandRank out;
  if (flush_suit >= 0) {
    if (int top = straight_top(suit_ranks[flush_suit]); top >= 0) {
      out.category = HandCategory::StraightFlush;
      out.tiebreak = {top};
      return out;
    }
  }

  std::vector<int> quads, trips, pairs;
  for (int r = 12; r >= 0; --r) {
    if (count[r] == 4) quads.push_back(r);
    else if (count[r] == 3) trips.push_back(r);
    else if (count[r] == 2) pairs.push_back(r);
  }

  if (!quads.empty()) {
    out.category = HandCategory::Quads;
    out.tiebreak = {quads[0]};
    uint16_t rest = rank_mask & static_cast<uint16_t>(~(1u << quads[0]));
    top_ranks(rest, 1, out.tiebreak);
    return out;
  }
  if (trips.size() >= 2 || (trips.size() == 1 && !pairs.empty())) {
    out.category = HandCategory::FullHouse;
    int t = trips[0];
    int p = trips.size() >= 2 ? trips[1] : pairs[0];
    out.tiebreak = {t, p};
    return out;
  }
  if (flush_suit >= 0) {
    out.category = HandCategory::Flush;
    top_ranks(suit_ranks[flush_suit], 5, out.tiebreak);
    return out;
  }
  if (int top = straight_top(rank_mask); top >= 0) {
    out.category = HandCategory::Straight;
    out.tiebreak = {top};
    return out;
  }
  if (trips.size() == 1) {
    out.category = HandCategory::Trips;
    out.tiebreak = {trips[0]};
    uint16_t rest = rank_mask & static_cast<uint16_t>(~(1u << trips[0]));
    top_ranks(rest, 2, out.tiebreak);
    return out;
  }
  if (pairs.size() >= 2) {
    out.category = HandCategory::TwoPair;
    out.tiebreak = {pairs[0], pairs[1]};
    uint16_t rest = rank_mask & static_cast<uint16_t>(~((1u << pairs[0]) | (1u << pairs[1])));
    top_ranks(rest, 1, out.tiebreak);
    return out;
  }
  if (pairs.size() == 1) {
    out.category = HandCategory::OnePair;
    out.tiebreak = {pairs[0]};
    uint16_t rest = rank_mask & static_cast<uint16_t>(~(1u << pairs[0]));
    top_ranks(rest, 3, out.tiebreak);
    return out;
  }
  out.category = HandCategory::HighCard;
  top_ranks(rank_mask, 5, out.tiebreak);
  return out;
}

}  // namespace

HandRank evaluate5(const std::vector<Card>& cards) {
  if (cards.size() != 5) throw std::invalid_argument("evaluate5 needs exactly 5 cards");
  require_distinct(cards);
  return evaluate_direct(cards);
}

HandRank evaluate_best5(const std::vector<Card>& hole, const std::vector<Card>& board) {
  if (hole.size() != 2) throw std::invalid_argument("need exactly 2 hole cards");
  if (board.size() < 3 || board.size() > 5)
    throw std::invalid_argument("board must have 3..5 cards");
  std::vector<Card> all = hole;
  all.insert(all.end(), board.begin(), board.end());
  require_distinct(all);
  // Direct multiset evaluation over all 5-7 cards equals the best 5-card subset.
  return evaluate_direct(all);
}

}  // namespace pokerskill
