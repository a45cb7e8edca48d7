#pragma once

#include <string>
#include <vector>

#include "pokerskill/cards.hpp"
#include "pokerskill/game_state.hpp"

namespace pokerskill {

enum class Wetness { Dry, SlightlyWet, Wet, VeryWet };
const char* to_string(Wetness w);

enum class SuitLabel { Rainbow, TwoTone, Monotone, FlushPossible, OneCardFlush };
const char* to_string(SuitLabel s);

enum class PairStructure { Unpaired, Paired, TripsBoard, DoublePaired, QuadsBoard, FullHouseBoard };
const char* to_string(PairStructure p);

enum class StraightKind { None, StraightPossible, OneCardStraight };

struct StraightLabel {
  StraightKind kind = StraightKind::None;
  int two_card_combos = 0;       // distinct hole-rank pairs completing a straight
  int one_card_types = 0;        // distinct single ranks completing a straight
  bool open_ended = false;       // one-card straight with 2+ completing ranks
};

struct BoardTexture {
  Wetness wetness = Wetness::Dry;
  SuitLabel suit_label = SuitLabel::Rainbow;
  PairStructure pair_structure = PairStructure::Unpaired;
  StraightLabel straight;
  std::string high_low;          // descriptive tag, e.g. "MIXED high/low board"
  int flush_suit = -1;           // dominant suit when >= 2 of a suit
  int max_suit_count = 0;
  int pair_count = 0;            // number of rank pairs on the board
  int board_size = 0;
  bool board_straight = false;   // five board ranks form a straight
  bool board_flush = false;      // five board cards share a suit

  bool flush_possible() const {
    return suit_label == SuitLabel::Monotone || suit_label == SuitLabel::FlushPossible ||
           suit_label == SuitLabel::OneCardFlush;
  }
  bool straight_possible() const { return straight.kind != StraightKind::None; }
  std::string describe() const;
};

BoardTexture classify_board(const std::vector<Card>& board, Street street);

}  // namespace pokerskill
