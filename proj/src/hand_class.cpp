#include "pokerskill/hand_class.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "pokerskill/hand_eval.hpp"

namespace pokerskill {

const char* to_string(MadeClass c) {
  switch (c) {
    case MadeClass::Nuts: return "nuts";
    case MadeClass::Flush: return "flush";
    case MadeClass::Straight: return "straight";
    case MadeClass::Set: return "set";
    case MadeClass::Trip: return "trip";
    case MadeClass::TwoPair: return "two_pair";
    case MadeClass::Overpair: return "overpair";
    case MadeClass::TopPair: return "top_pair";
    case MadeClass::SecondPair: return "second_pair";
    case MadeClass::ThirdPair: return "third_pair";
    case MadeClass::FourthFifthPair: return "fourth_fifth_pair";
    case MadeClass::NutsHigh: return "nuts_high";
    case MadeClass::SecondHigh: return "second_high";
    case MadeClass::WeakShowdown: return "weak_showdown";
    case MadeClass::Trash: return "trash";
  }
  return "?";
}

const char* to_string(DrawClass c) {
  switch (c) {
    case DrawClass::StrongDraw: return "strong_draw";
    case DrawClass::MediumStrongDraw: return "medium_strong_draw";
    case DrawClass::MediumDraw: return "medium_draw";
    case DrawClass::MediumWeakDraw: return "medium_weak_draw";
    case DrawClass::WeakDraw: return "weak_draw";
    case DrawClass::StrongOvercardDraw: return "strong_overcard_draw";
    case DrawClass::MediumOvercardDraw: return "medium_overcard_draw";
    case DrawClass::WeakOvercardDraw: return "weak_overcard_draw";
  }
  return "?";
}

namespace {

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

// Position of `rank` among ranks absent from the board, from the top.
// 1 means the best card a player could hold.
int absent_rank_position(int rank, const std::set<int>& board_ranks) {
  int pos = 0;
  for (int r = 12; r >= 0; --r) {
    if (board_ranks.count(r)) continue;
    ++pos;
    if (r == rank) return pos;
  }
  return 99;
}

struct DrawFeatures {
  bool flush_draw = false;
  bool one_card_flush_draw = false;
  int flush_draw_rank = -1;
  bool nut_flush_draw = false;
  bool oesd = false;
  bool gutshot = false;
  bool two_card_straight_draw = false;
  bool bottom_gutshot = false;
  int backdoor_count = 0;  // flop only: backdoor flush/straight draws
  std::vector<int> overcards;
};

DrawFeatures draw_features(const std::vector<Card>& hole, const std::vector<Card>& board,
                           const BoardTexture& tex) {
  DrawFeatures f;
  std::array<int, 4> suit_hero{}, suit_board{};
  for (Card c : hole) ++suit_hero[c.suit];
  for (Card c : board) ++suit_board[c.suit];
  std::set<int> board_ranks, hero_ranks;
  for (Card c : board) board_ranks.insert(c.rank);
  for (Card c : hole) hero_ranks.insert(c.rank);

  for (int s = 0; s < 4; ++s) {
    int total = suit_hero[s] + suit_board[s];
    if (total == 4 && suit_hero[s] >= 1) {
      f.flush_draw = true;
      f.one_card_flush_draw = suit_hero[s] == 1;
      for (Card c : hole)
        if (c.suit == s) f.flush_draw_rank = std::max<int>(f.flush_draw_rank, c.rank);
      // Nut draw: hero holds the highest rank of the suit not on the board.
      std::set<int> suited_board;
      for (Card c : board)
        if (c.suit == s) suited_board.insert(c.rank);
      int best_missing = -1;
      for (int r = 12; r >= 0; --r)
        if (!suited_board.count(r)) { best_missing = r; break; }
      f.nut_flush_draw = f.flush_draw_rank == best_missing;
    }
    if (board.size() == 3 && total == 3 && suit_hero[s] >= 1) ++f.backdoor_count;
  }

  // Straight-completing ranks that need a hero card in the window.
  std::set<int> all_ranks = board_ranks;
  all_ranks.insert(hero_ranks.begin(), hero_ranks.end());
  std::set<int> completes;
  int best_window_top = -1;
  for (const auto& w : straight_windows()) {
    std::vector<int> missing;
    bool hero_used = false;
    for (int r : w) {
      if (!all_ranks.count(r)) missing.push_back(r);
      if (hero_ranks.count(r) && !board_ranks.count(r)) hero_used = true;
    }
    if (missing.size() == 1 && hero_used) {
      completes.insert(missing[0]);
      int hero_in_window = 0;
      for (int r : w)
        if (hero_ranks.count(r) && !board_ranks.count(r)) ++hero_in_window;
      if (hero_in_window == 2) f.two_card_straight_draw = true;
      int top = *w.rbegin() == 12 && w.count(0) ? 3 : *w.rbegin();
      best_window_top = std::max(best_window_top, top);
    }
    if (missing.size() == 2 && hero_used && board.size() == 3) ++f.backdoor_count;
  }
  if (completes.size() >= 2) f.oesd = true;
  else if (completes.size() == 1) f.gutshot = true;
  // Bottom gutshot: the made straight would sit at the bottom of the window range.
  if (f.gutshot && best_window_top >= 0) {
    int hero_top = *hero_ranks.rbegin();
    f.bottom_gutshot = hero_top < best_window_top - 2;
  }

  int board_top = *board_ranks.rbegin();
  if (hole[0].rank != hole[1].rank)
    for (Card c : hole)
      if (c.rank > board_top) f.overcards.push_back(c.rank);
  std::sort(f.overcards.rbegin(), f.overcards.rend());
  (void)tex;
  return f;
}

std::optional<DrawClass> classify_draw(const DrawFeatures& f, const BoardTexture& tex,
                                       PotType pot) {
  bool flushy = tex.max_suit_count >= 3;      // flush already possible
  bool straighty = tex.straight_possible();
  bool rainbow = tex.suit_label == SuitLabel::Rainbow;
  bool two_tone = tex.suit_label == SuitLabel::TwoTone;
  bool combo = f.flush_draw && (f.oesd || f.gutshot);
  int fr = f.flush_draw_rank;
  int oc = static_cast<int>(f.overcards.size());

  std::optional<DrawClass> out;
  if (combo && !flushy) out = DrawClass::StrongDraw;
  else if (f.flush_draw && flushy && f.nut_flush_draw) out = DrawClass::StrongDraw;
  else if (f.flush_draw && !flushy && fr >= 9) out = DrawClass::StrongDraw;  // J+
  else if (f.oesd && rainbow && !straighty) out = DrawClass::StrongDraw;
  else if (combo && flushy && fr >= 11) out = DrawClass::StrongDraw;  // K+
  else if (f.flush_draw && !flushy && fr < 9) out = DrawClass::MediumStrongDraw;
  else if (combo && flushy && fr >= 9) out = DrawClass::MediumStrongDraw;  // J-Q
  else if (f.oesd && rainbow && straighty) out = DrawClass::MediumStrongDraw;
  else if (f.oesd && two_tone && f.two_card_straight_draw && !straighty)
    out = DrawClass::MediumStrongDraw;
  else if (f.flush_draw && flushy && fr >= 11) out = DrawClass::MediumStrongDraw;
  else if (f.flush_draw && flushy && fr >= 8) out = DrawClass::MediumDraw;  // T-Q
  else if (f.oesd && two_tone) out = DrawClass::MediumDraw;
  else if (combo && flushy) out = DrawClass::MediumDraw;
  else if (f.gutshot && !flushy && oc >= 1 && !f.bottom_gutshot) out = DrawClass::MediumDraw;
  else if (f.gutshot && !flushy && f.two_card_straight_draw) out = DrawClass::MediumWeakDraw;
  else if (f.gutshot && !f.bottom_gutshot && !flushy) out = DrawClass::MediumWeakDraw;
  else if (f.flush_draw && flushy && fr >= 4) out = DrawClass::MediumWeakDraw;  // 6+
  else if (f.oesd && flushy && oc >= 2) out = DrawClass::MediumWeakDraw;
  else if (oc >= 2 && f.backdoor_count >= 2) out = DrawClass::MediumWeakDraw;
  else if (f.gutshot && f.bottom_gutshot && !flushy) out = DrawClass::WeakDraw;
  else if (f.oesd && flushy) out = DrawClass::WeakDraw;
  else if (f.flush_draw && flushy) out = DrawClass::WeakDraw;
  else if (f.gutshot) out = DrawClass::WeakDraw;
  else if (f.backdoor_count >= 2 && oc == 0) out = DrawClass::WeakDraw;
  else if (oc == 2) {
    // Overcard-only draws. Rank points use 2..14.
    int p0 = f.overcards[0] + 2, p1 = f.overcards[1] + 2;
    bool ak_aq = p0 == 14 && p1 >= 12;  // AK or AQ
    bool kq_aj = (p0 == 13 && p1 == 12) || (p0 == 14 && p1 == 11);
    if (ak_aq) out = DrawClass::StrongOvercardDraw;
    else if (kq_aj && f.backdoor_count >= 1) out = DrawClass::StrongOvercardDraw;
    else if (p0 + p1 > 19 || f.backdoor_count >= 1) out = DrawClass::MediumOvercardDraw;
    else out = DrawClass::WeakOvercardDraw;
  } else if (oc == 1 && f.overcards[0] >= 8) {
    if (f.backdoor_count >= 2) out = DrawClass::MediumOvercardDraw;
    else if (f.backdoor_count == 1) out = DrawClass::WeakOvercardDraw;
  }

  // Pot-type downgrades apply to overcard tiers only.
  if (out && *out >= DrawClass::StrongOvercardDraw) {
    bool premium = oc == 2 && f.overcards[0] == 12 && f.overcards[1] >= 10;  // AK/AQ
    if (pot == PotType::ThreeBet) {
      if (*out == DrawClass::StrongOvercardDraw && !premium) out = DrawClass::MediumOvercardDraw;
      else if (*out == DrawClass::MediumOvercardDraw) out = DrawClass::WeakOvercardDraw;
      else if (*out == DrawClass::WeakOvercardDraw) out.reset();
    } else if (pot == PotType::FourBetPlus) {
      bool ak_bd = oc == 2 && f.overcards[0] == 12 && f.overcards[1] == 11 &&
                   f.backdoor_count >= 1;
      if (*out == DrawClass::StrongOvercardDraw && !ak_bd) out = DrawClass::MediumOvercardDraw;
      else if (*out != DrawClass::StrongOvercardDraw) out.reset();
    }
  }
  return out;
}

// Board where no two ranks sit inside one straight window; used by the
// nuts gating for sets and straights.
bool board_disconnected(const std::set<int>& board_ranks) {
  for (const auto& w : straight_windows()) {
    int present = 0;
    for (int r : w)
      if (board_ranks.count(r)) ++present;
    if (present >= 2) return false;
  }
  return true;
}

}  // namespace

HandClassification classify_hand(const std::vector<Card>& hole,
                                 const std::vector<Card>& board,
                                 PotType pot, Street street) {
  if (street == Street::Preflop) throw std::invalid_argument("classify_hand is postflop only");
  if (hole.size() != 2) throw std::invalid_argument("need exactly 2 hole cards");
  BoardTexture tex = classify_board(board, street);
  std::vector<Card> all = hole;
  all.insert(all.end(), board.begin(), board.end());
  require_distinct(all);

  HandClassification out;
  HandRank best = evaluate_best5(hole, board);

  std::set<int> board_ranks, hero_ranks;
  for (Card c : board) board_ranks.insert(c.rank);
  for (Card c : hole) hero_ranks.insert(c.rank);
  int board_top = *board_ranks.rbegin();
  bool pocket = hole[0].rank == hole[1].rank;
  out.pocket_pair = pocket;

  // ---- special boards replace the normal ladder ----
  auto ps = tex.pair_structure;
  bool special = ps == PairStructure::TripsBoard || ps == PairStructure::DoublePaired ||
                 ps == PairStructure::QuadsBoard || ps == PairStructure::FullHouseBoard ||
                 tex.board_flush || tex.board_straight;
  if (special) {
    if (tex.board_flush) {
      out.special_board = SpecialBoard::BoardFlush;
      int hi = -1;
      for (Card c : hole)
        if (c.suit == tex.flush_suit) hi = std::max<int>(hi, c.rank);
      out.flush_rank = hi;
      out.special_tier = hi < 0 ? 99 : absent_rank_position(hi, board_ranks);
      out.made_class = out.special_tier == 1 ? MadeClass::Nuts : MadeClass::Flush;
      if (best.category >= HandCategory::FullHouse) out.made_class = MadeClass::Nuts;
    } else if (ps == PairStructure::QuadsBoard) {
      out.special_board = SpecialBoard::QuadsBoard;
      int hi = std::max(hole[0].rank, hole[1].rank);
      out.kicker_rank = hi;
      out.special_tier = absent_rank_position(hi, board_ranks);
      out.made_class = out.special_tier == 1 ? MadeClass::Nuts : MadeClass::WeakShowdown;
    } else if (ps == PairStructure::FullHouseBoard) {
      out.special_board = SpecialBoard::FullHouseBoard;
      bool improves = best.category == HandCategory::Quads;
      if (!improves && best.category == HandCategory::FullHouse) {
        // Better full house than the board's needs a hero card in the trips.
        for (Card c : hole)
          if (board_ranks.count(c.rank)) improves = true;
      }
      out.special_tier = improves ? 1 : 2;
      out.made_class = improves ? MadeClass::Nuts : MadeClass::WeakShowdown;
    } else if (ps == PairStructure::TripsBoard) {
      out.special_board = SpecialBoard::TripsBoard;
      bool quads_or_fh = best.category >= HandCategory::FullHouse;
      if (quads_or_fh) {
        out.special_tier = 0;
        out.made_class = MadeClass::Nuts;
      } else {
        int hi = std::max(hole[0].rank, hole[1].rank);
        out.kicker_rank = hi;
        out.special_tier = absent_rank_position(hi, board_ranks);
        out.made_class = out.special_tier == 1 ? MadeClass::NutsHigh
                       : out.special_tier == 2 ? MadeClass::SecondHigh
                                               : MadeClass::WeakShowdown;
      }
    } else if (ps == PairStructure::DoublePaired) {
      out.special_board = SpecialBoard::DoublePaired;
      if (best.category >= HandCategory::FullHouse) {
        int high_pair = -1;
        for (int r = 12; r >= 0; --r) {
          int cnt = 0;
          for (Card c : board)
            if (c.rank == r) ++cnt;
          if (cnt >= 2) { high_pair = r; break; }
        }
        bool top_boat = hero_ranks.count(high_pair) || (pocket && hole[0].rank > high_pair) ||
                        best.category == HandCategory::Quads;
        out.special_tier = top_boat ? 1 : 2;
        out.made_class = top_boat ? MadeClass::Nuts : MadeClass::Set;
      } else if (best.category == HandCategory::Flush || best.category == HandCategory::Straight) {
        out.special_tier = 3;
        out.made_class = best.category == HandCategory::Flush ? MadeClass::Flush
                                                              : MadeClass::Straight;
      } else {
        int hi = std::max(hole[0].rank, hole[1].rank);
        out.kicker_rank = hi;
        out.special_tier = 3 + absent_rank_position(hi, board_ranks);
        out.made_class = MadeClass::WeakShowdown;
      }
    } else if (tex.board_straight) {
      out.special_board = SpecialBoard::BoardStraight;
      bool improves = false;
      if (best.category >= HandCategory::Straight) {
        // Hero improves only when a private card extends the top end.
        HandRank board_only = evaluate5(board);
        improves = best > board_only;
      }
      out.special_tier = improves ? 1 : 2;
      out.made_class = improves ? MadeClass::Straight : MadeClass::WeakShowdown;
      out.top_end = improves;
    }
    if (street != Street::River) {
      DrawFeatures f = draw_features(hole, board, tex);
      out.draw_class = classify_draw(f, tex, pot);
    }
    std::string label = to_string(out.made_class);
    std::transform(label.begin(), label.end(), label.begin(), ::toupper);
    std::replace(label.begin(), label.end(), '_', ' ');
    out.summary = label + " (board-dominated)";
    return out;
  }

  // ---- normal ladder ----
  bool board_paired = ps == PairStructure::Paired;
  bool disconnected = board_disconnected(board_ranks);

  switch (best.category) {
    case HandCategory::StraightFlush:
      out.made_class = MadeClass::Nuts;
      break;
    case HandCategory::Quads:
    case HandCategory::FullHouse:
      out.made_class = MadeClass::Nuts;  // full house+ gating
      break;
    case HandCategory::Flush: {
      int hi = -1;
      for (Card c : hole)
        if (c.suit == tex.flush_suit) hi = std::max<int>(hi, c.rank);
      out.flush_rank = hi;
      std::set<int> suited_board;
      for (Card c : board)
        if (c.suit == tex.flush_suit) suited_board.insert(c.rank);
      out.flush_rank_tier = absent_rank_position(hi, suited_board);
      out.nut_variant = out.flush_rank_tier == 1;
      out.made_class = out.nut_variant && !board_paired ? MadeClass::Nuts : MadeClass::Flush;
      break;
    }
    case HandCategory::Straight: {
      int in_straight = 0;
      int straight_top_rank = best.tiebreak[0];
      for (Card c : hole) {
        int lo = straight_top_rank - 4;
        bool in = c.rank <= straight_top_rank && c.rank >= lo;
        if (straight_top_rank == 3 && c.rank == 12) in = true;  // wheel ace
        if (in && !board_ranks.count(c.rank)) ++in_straight;
      }
      out.two_card_straight = in_straight == 2;
      // Top end: no higher straight is possible for any opponent holding.
      bool higher_possible = false;
      for (const auto& w : straight_windows()) {
        int present = 0;
        int top = *w.rbegin() == 12 && w.count(0) ? 3 : *w.rbegin();
        if (top <= straight_top_rank) continue;
        for (int r : w)
          if (board_ranks.count(r)) ++present;
        if (present >= 3) { higher_possible = true; break; }
      }
      out.top_end = !higher_possible;
      out.nut_variant = out.top_end;
      bool no_flush = !tex.flush_possible();
      out.made_class = (out.top_end && no_flush && !board_paired) ? MadeClass::Nuts
                                                                  : MadeClass::Straight;
      break;
    }
    case HandCategory::Trips:
      if (pocket && board_ranks.count(hole[0].rank)) {
        out.made_class = MadeClass::Set;
        out.pair_rank = hole[0].rank;
        out.nut_variant = hole[0].rank == board_top;
        if (!tex.flush_possible() && disconnected && !board_paired)
          out.made_class = MadeClass::Nuts;  // set gating
      } else {
        out.made_class = MadeClass::Trip;
        for (Card c : hole) {
          if (board_ranks.count(c.rank)) out.pair_rank = c.rank;
          else out.kicker_rank = c.rank;
        }
        out.kicker_tier = out.kicker_rank >= 0
                              ? absent_rank_position(out.kicker_rank, board_ranks)
                              : 9;
      }
      break;
    case HandCategory::TwoPair: {
      if (board_paired) {
        // The board pair supplies one of the two pairs: real strength is the
        // hero pair, handled below with the pair ladder.
        break;
      }
      if (pocket) break;  // pocket pair + board pair handled by pair ladder
      out.made_class = MadeClass::TwoPair;
      // Rank of the two-pair combination among all board-rank pairs.
      std::vector<int> ranks(board_ranks.rbegin(), board_ranks.rend());
      int idx = 0, mine = -1;
      for (size_t i = 0; i < ranks.size(); ++i) {
        for (size_t j = i + 1; j < ranks.size(); ++j) {
          ++idx;
          if (hero_ranks.count(ranks[i]) && hero_ranks.count(ranks[j]) && mine < 0)
            mine = idx;
        }
      }
      out.kicker_tier = std::min(mine < 0 ? 10 : mine, 10);
      break;
    }
    default:
      break;
  }

  // Pair ladder for one-pair hands (and two-pair-via-board-pair cases).
  if (out.made_class == MadeClass::Trash &&
      (best.category == HandCategory::OnePair || best.category == HandCategory::TwoPair)) {
    int pr = -1;
    if (pocket) pr = hole[0].rank;
    else
      for (Card c : hole)
        if (board_ranks.count(c.rank)) pr = c.rank;
    if (pr < 0) {
      // Board pair only; hero plays two high cards. Fall through to high card.
    } else {
      out.pair_rank = pr;
      int above = 0;
      for (int r : board_ranks)
        if (r > pr) ++above;
      out.board_overcards = above;
      if (pocket && above == 0)
        out.made_class = MadeClass::Overpair;
      else if (above == 0)
        out.made_class = MadeClass::TopPair;
      else if (above == 1)
        out.made_class = MadeClass::SecondPair;
      else if (above == 2)
        out.made_class = MadeClass::ThirdPair;
      else
        out.made_class = MadeClass::FourthFifthPair;
      if (!pocket) {
        for (Card c : hole)
          if (c.rank != pr) out.kicker_rank = c.rank;
        out.kicker_tier = out.kicker_rank >= 0
                              ? absent_rank_position(out.kicker_rank, board_ranks)
                              : 9;
        // FourthFifthPair keeps 4th vs 5th distinction in kicker_tier slot.
        if (out.made_class == MadeClass::FourthFifthPair) out.kicker_tier = above <= 3 ? 4 : 5;
      }
    }
  }

  // High-card ladder.
  if (out.made_class == MadeClass::Trash && best.category <= HandCategory::OnePair &&
      out.pair_rank < 0) {
    int hi = std::max(hole[0].rank, hole[1].rank);
    int lo = std::min(hole[0].rank, hole[1].rank);
    int pos = absent_rank_position(hi, board_ranks);
    if (pos == 1 && hi > board_top)
      out.made_class = MadeClass::NutsHigh;
    else if (pos == 2 && hi > board_top && lo >= 8 && !board_paired)
      out.made_class = MadeClass::SecondHigh;
    else if (hi > board_top || hi >= 10)
      out.made_class = MadeClass::WeakShowdown;
    out.kicker_rank = hi;
    out.kicker_tier = pos;
  }

  if (street != Street::River) {
    DrawFeatures f = draw_features(hole, board, tex);
    out.draw_class = classify_draw(f, tex, pot);
  }

  if (out.made_class == MadeClass::Trash && out.draw_class &&
      *out.draw_class <= DrawClass::WeakDraw) {
    std::string label = to_string(*out.draw_class);
    std::transform(label.begin(), label.end(), label.begin(), ::toupper);
    std::replace(label.begin(), label.end(), '_', ' ');
    out.summary = label;
  } else {
    std::string label = to_string(out.made_class);
    std::transform(label.begin(), label.end(), label.begin(), ::toupper);
    std::replace(label.begin(), label.end(), '_', ' ');
    out.summary = label;
  }
  return out;
}

}  // namespace pokerskill
