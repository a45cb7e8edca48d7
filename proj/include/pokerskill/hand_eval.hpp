#pragma once

#include <compare>
#include <vector>

#include "pokerskill/cards.hpp"

namespace pokerskill {

enum class HandCategory : int {
  HighCard = 0,
  OnePair,
  TwoPair,
  Trips,
  Straight,
  Flush,
  FullHouse,
  Quads,
  StraightFlush,
};

const char* to_string(HandCategory c);

// Category plus a normalized descending tiebreak vector. Comparison is total:
// category first, then lexicographic tiebreak.
struct HandRank {
  HandCategory category = HandCategory::HighCard;
  std::vector<int> tiebreak;  // ranks, most significant first, length <= 5

  friend bool operator==(const HandRank&, const HandRank&) = default;
  std::strong_ordering operator<=>(const HandRank& other) const;
};

// Best 5-card rank from exactly 5 cards.
HandRank evaluate5(const std::vector<Card>& cards);

// Maximum HandRank over all 5-card subsets of hole + board (5..7 distinct cards).
HandRank evaluate_best5(const std::vector<Card>& hole, const std::vector<Card>& board);

}  // namespace pokerskill
