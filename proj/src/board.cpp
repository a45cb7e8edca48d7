#include "pokerskill/board.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace pokerskill {

const char* to_string(Wetness w) {
  switch (w) {
    case Wetness::Dry: return "dry";
    case Wetness::SlightlyWet: return "slightly_wet";
    case Wetness::Wet: return "wet";
    case Wetness::VeryWet: return "very_wet";
  }
  return "?";
}

const char* to_string(SuitLabel s) {
  switch (s) {
    case SuitLabel::Rainbow: return "rainbow";
    case SuitLabel::TwoTone: return "two_tone";
    case SuitLabel::Monotone: return "monotone";
    case SuitLabel::FlushPossible: return "flush_possible";
    case SuitLabel::OneCardFlush: return "one_card_flush";
  }
  return "?";
}

const char* to_string(PairStructure p) {
  switch (p) {
    case PairStructure::Unpaired: return "unpaired";
    case PairStructure::Paired: return "paired";
    case PairStructure::TripsBoard: return "trips_board";
    case PairStructure::DoublePaired: return "double_paired";
    case PairStructure::QuadsBoard: return "quads_board";
    case PairStructure::FullHouseBoard: return "full_house_board";
  }
  return "?";
}

namespace {

// All 5-rank straight windows, wheel included (top rank of the wheel is 5).
std::vector<std::set<int>> straight_windows() {
  std::vector<std::set<int>> out;
  for (int top = 12; top >= 3; --top) {
    std::set<int> w;
    for (int k = 0; k < 5; ++k) {
      int r = top - k;
      if (r < 0) r = 12;
      w.insert(r);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

BoardTexture classify_board(const std::vector<Card>& board, Street street) {
  size_t expect = street == Street::Flop ? 3 : street == Street::Turn ? 4 : 5;
  if (street == Street::Preflop || board.size() != expect)
    throw std::invalid_argument("board size does not match street");
  require_distinct(board);

  BoardTexture t;
  t.board_size = static_cast<int>(board.size());

  std::array<int, 4> suit_count{};
  std::array<int, 13> rank_count{};
  for (Card c : board) {
    ++suit_count[c.suit];
    ++rank_count[c.rank];
  }
  for (int s = 0; s < 4; ++s) {
    if (suit_count[s] > t.max_suit_count) {
      t.max_suit_count = suit_count[s];
      t.flush_suit = s;
    }
  }
  if (t.max_suit_count >= 5) {
    t.suit_label = SuitLabel::OneCardFlush;
    t.board_flush = true;
  } else if (t.max_suit_count == 4) {
    t.suit_label = SuitLabel::OneCardFlush;
  } else if (t.max_suit_count == 3) {
    t.suit_label = board.size() == 3 ? SuitLabel::Monotone : SuitLabel::FlushPossible;
  } else if (t.max_suit_count == 2) {
    t.suit_label = SuitLabel::TwoTone;
  } else {
    t.suit_label = SuitLabel::Rainbow;
    t.flush_suit = -1;
  }

  int quads = 0, trips = 0, pairs = 0;
  for (int r = 0; r < 13; ++r) {
    if (rank_count[r] == 4) ++quads;
    else if (rank_count[r] == 3) ++trips;
    else if (rank_count[r] == 2) ++pairs;
  }
  t.pair_count = pairs + trips + quads;
  if (quads) t.pair_structure = PairStructure::QuadsBoard;
  else if (trips && pairs) t.pair_structure = PairStructure::FullHouseBoard;
  else if (trips) t.pair_structure = PairStructure::TripsBoard;
  else if (pairs >= 2) t.pair_structure = PairStructure::DoublePaired;
  else if (pairs == 1) t.pair_structure = PairStructure::Paired;

  std::set<int> board_ranks;
  for (Card c : board) board_ranks.insert(c.rank);

  std::set<std::pair<int, int>> combos;
  std::set<int> one_card;
  for (const auto& w : straight_windows()) {
    std::vector<int> missing;
    int present = 0;
    for (int r : w) {
      if (board_ranks.count(r)) ++present;
      else missing.push_back(r);
    }
    if (present == 5) t.board_straight = true;
    else if (present == 4) one_card.insert(missing[0]);
    else if (present == 3) combos.insert({std::min(missing[0], missing[1]),
                                          std::max(missing[0], missing[1])});
  }
  t.straight.two_card_combos = static_cast<int>(combos.size());
  t.straight.one_card_types = static_cast<int>(one_card.size());
  if (!one_card.empty()) {
    t.straight.kind = StraightKind::OneCardStraight;
    t.straight.open_ended = one_card.size() >= 2;
  } else if (!combos.empty()) {
    t.straight.kind = StraightKind::StraightPossible;
  }

  // Wetness score: flush pressure + straight pressure + connectivity.
  int score = 0;
  switch (t.suit_label) {
    case SuitLabel::OneCardFlush:
    case SuitLabel::Monotone: score += 3; break;
    case SuitLabel::FlushPossible: score += 2; break;
    case SuitLabel::TwoTone: score += 1; break;
    default: break;
  }
  if (t.board_straight) score += 4;
  else if (t.straight.one_card_types > 0) score += 3;
  else score += std::min(t.straight.two_card_combos, 3);
  std::vector<int> sorted(board_ranks.begin(), board_ranks.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] - sorted[i - 1] <= 2) ++score;
  t.wetness = score <= 1 ? Wetness::Dry
            : score <= 3 ? Wetness::SlightlyWet
            : score <= 5 ? Wetness::Wet
                         : Wetness::VeryWet;

  int high = 0;
  for (int r : board_ranks)
    if (r >= 8) ++high;  // T or above
  if (high == static_cast<int>(board_ranks.size())) t.high_low = "HIGH board";
  else if (high == 0) t.high_low = "LOW board";
  else t.high_low = "MIXED high/low board";

  return t;
}

std::string BoardTexture::describe() const {
  std::string out;
  auto add = [&out](const std::string& part) {
    if (!out.empty()) out += "; ";
    out += part;
  };
  switch (suit_label) {
    case SuitLabel::Rainbow: add("RAINBOW board"); break;
    case SuitLabel::TwoTone:
      add("TWO-TONE board (flush draw exists but flush NOT yet possible)");
      break;
    case SuitLabel::Monotone: add("MONOTONE board (flush possible)"); break;
    case SuitLabel::FlushPossible: add("3-FLUSH board (flush possible)"); break;
    case SuitLabel::OneCardFlush:
      add(board_flush ? "BOARD FLUSH (5 same suit)"
                      : "4-FLUSH board (one-card flush danger)");
      break;
  }
  if (board_straight) {
    add("BOARD STRAIGHT");
  } else if (straight.kind == StraightKind::OneCardStraight) {
    add("ONE-CARD STRAIGHT (" + std::to_string(straight.one_card_types) +
        std::string(straight.open_ended ? " ranks complete, open-ended)" : " rank completes, gutshot)"));
  } else if (straight.kind == StraightKind::StraightPossible) {
    add("STRAIGHT POSSIBLE (" + std::to_string(straight.two_card_combos) +
        " two-card combos make straight)");
  }
  if (pair_structure != PairStructure::Unpaired) {
    switch (pair_structure) {
      case PairStructure::Paired:
      case PairStructure::DoublePaired:
        add("PAIRED board (" + std::to_string(pair_count) + " pair(s))");
        break;
      case PairStructure::TripsBoard: add("TRIPS board"); break;
      case PairStructure::QuadsBoard: add("QUADS board"); break;
      case PairStructure::FullHouseBoard: add("FULL-HOUSE board"); break;
      default: break;
    }
  }
  add(high_low);
  return out;
}

}  // namespace pokerskill
