#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pokerskill {

// Ranks: 0=2 .. 8=T, 9=J, 10=Q, 11=K, 12=A. Suits: 0=c, 1=d, 2=h, 3=s.
struct Card {
  int8_t rank = -1;
  int8_t suit = -1;

  Card() = default;
  Card(int r, int s) : rank(static_cast<int8_t>(r)), suit(static_cast<int8_t>(s)) {}

  int index() const { return rank * 4 + suit; }
  bool valid() const { return rank >= 0 && rank < 13 && suit >= 0 && suit < 4; }

  friend bool operator==(const Card&, const Card&) = default;
};

// Parses the two-character form, e.g. "5c", "Th", "As".
Card parse_card(const std::string& text);
std::string format_card(Card c);

// Parses a run of two-character cards, whitespace optional: "7s6hJc" or "7s 6h Jc".
std::vector<Card> parse_cards(const std::string& text);
std::string format_cards(const std::vector<Card>& cards);

char rank_char(int rank);
int rank_from_char(char c);

inline void require_distinct(const std::vector<Card>& cards) {
  for (size_t i = 0; i < cards.size(); ++i)
    for (size_t j = i + 1; j < cards.size(); ++j)
      if (cards[i] == cards[j])
        throw std::invalid_argument("duplicate card: " + format_card(cards[i]));
}

}  // namespace pokerskill
