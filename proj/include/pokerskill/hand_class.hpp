#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pokerskill/board.hpp"
#include "pokerskill/cards.hpp"
#include "pokerskill/game_state.hpp"

namespace pokerskill {

// Made-hand ladder, strongest first. Order matters: texture penalties
// reclassify down this ladder.
enum class MadeClass : int {
  Nuts = 0,
  Flush,
  Straight,
  Set,
  Trip,
  TwoPair,
  Overpair,
  TopPair,
  SecondPair,
  ThirdPair,
  FourthFifthPair,
  NutsHigh,
  SecondHigh,
  WeakShowdown,
  Trash,
};
const char* to_string(MadeClass c);

enum class DrawClass : int {
  StrongDraw = 0,
  MediumStrongDraw,
  MediumDraw,
  MediumWeakDraw,
  WeakDraw,
  StrongOvercardDraw,
  MediumOvercardDraw,
  WeakOvercardDraw,
};
const char* to_string(DrawClass c);

enum class SpecialBoard {
  None,
  TripsBoard,
  DoublePaired,
  QuadsBoard,
  FullHouseBoard,
  BoardFlush,
  BoardStraight,
};

struct HandClassification {
  MadeClass made_class = MadeClass::Trash;
  std::optional<DrawClass> draw_class;  // absent on the river
  int kicker_tier = 0;                  // 1 = top kicker, increasing = weaker
  int kicker_rank = -1;
  int pair_rank = -1;                   // rank of the pair for pair classes
  int board_overcards = 0;              // board ranks above pair_rank
  bool pocket_pair = false;
  bool two_card_straight = false;       // both hole cards in the made straight
  bool top_end = false;                 // nut end of a made straight
  int flush_rank = -1;                  // hero's highest card of the flush suit
  int flush_rank_tier = 0;              // 1 = nut flush card, 2 = second, ...
  SpecialBoard special_board = SpecialBoard::None;
  int special_tier = 0;                 // tier inside the special-board override table
  bool nut_variant = false;             // nut flush / nut straight / top set etc.
  std::string summary;                  // short human label, e.g. "STRONG DRAW"
};

// Classifies hero's hand against the board. Draw classes are suppressed on
// the river. Pot type drives the 3BP/4BP+ overcard downgrades.
HandClassification classify_hand(const std::vector<Card>& hole,
                                 const std::vector<Card>& board,
                                 PotType pot, Street street);

}  // namespace pokerskill
