#include "pokerskill/cards.hpp"

#include <cctype>

namespace pokerskill {

namespace {
constexpr const char* kRankChars = "23456789TJQKA";
constexpr const char* kSuitChars = "cdhs";
}  // namespace

char rank_char(int rank) {
  if (rank < 0 || rank > 12) throw std::invalid_argument("rank out of range");
  return kRankChars[rank];
}

int rank_from_char(char c) {
  for (int i = 0; i < 13; ++i)
    if (kRankChars[i] == std::toupper(static_cast<unsigned char>(c))) return i;
  throw std::invalid_argument(std::string("bad rank char: '") + c + "'");
}

Card parse_card(const std::string& text) {
  if (text.size() != 2)
    throw std::invalid_argument("bad card token: '" + text + "'");
  int rank = rank_from_char(text[0]);
  int suit = -1;
  for (int i = 0; i < 4; ++i)
    if (kSuitChars[i] == text[1]) suit = i;
  if (suit < 0)
    throw std::invalid_argument("bad card token: '" + text + "'");
  return Card(rank, suit);
}

std::string format_card(Card c) {
  if (!c.valid()) throw std::invalid_argument("invalid card");
  return std::string(1, kRankChars[c.rank]) + kSuitChars[c.suit];
}

std::vector<Card> parse_cards(const std::string& text) {
  std::vector<Card> out;
  std::string token;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') continue;
    token.push_back(ch);
    if (token.size() == 2) {
      out.push_back(parse_card(token));
      token.clear();
    }
  }
  if (!token.empty())
    throw std::invalid_argument("trailing card character: '" + token + "'");
  return out;
}

std::string format_cards(const std::vector<Card>& cards) {
  std::string out;
  for (size_t i = 0; i < cards.size(); ++i) {
    if (i) out.push_back(' ');
    out += format_card(cards[i]);
  }
  return out;
}

}  // namespace pokerskill
