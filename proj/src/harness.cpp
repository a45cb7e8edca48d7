#include "pokerskill/harness.hpp"

#include <cmath>
#include <random>

#include "pokerskill/llm_client.hpp"

namespace pokerskill {

namespace {

struct Deal {
  std::array<std::vector<Card>, 2> hole;
  std::vector<Card> runout;
};

Deal deal_hand(uint64_t seed) {
  std::vector<Card> deck;
  deck.reserve(52);
  for (int s = 0; s < 4; ++s)
    for (int r = 0; r < 13; ++r) deck.push_back({r, s});
  std::mt19937_64 rng(seed);
  for (size_t i = deck.size() - 1; i > 0; --i) {
    // Modulo keeps the shuffle identical across standard library versions.
    size_t j = static_cast<size_t>(rng() % (i + 1));
    std::swap(deck[i], deck[j]);
  }
  Deal out;
  out.hole[0] = {deck[0], deck[1]};
  out.hole[1] = {deck[2], deck[3]};
  out.runout = {deck[4], deck[5], deck[6], deck[7], deck[8]};
  return out;
}

}  // namespace

HandHistoryRecord play_hand(uint64_t seed, int index, Policy& a, Policy& b,
                            const SkillLibrary& lib, bool swap_holes) {
  uint64_t hand_seed = seed + static_cast<uint64_t>(index);
  if (swap_holes) hand_seed = seed + static_cast<uint64_t>(index - 1);
  Deal deal = deal_hand(hand_seed);
  if (swap_holes) std::swap(deal.hole[0], deal.hole[1]);
  int button = index % 2;

  GameState s = initial_state(button, deal.hole, deal.runout);
  a.begin_hand();
  b.begin_hand();

  HandHistoryRecord rec;
  rec.index = index;
  rec.seed = hand_seed;
  rec.button = button;
  rec.hole = {format_cards(deal.hole[0]), format_cards(deal.hole[1])};
  rec.runout = format_cards(deal.runout);
  rec.agents = {a.name(), b.name()};
  rec.manifest_hash = lib.manifest_hash;

  int guard = 0;
  while (!s.terminal) {
    if (++guard > 200) throw std::logic_error("hand did not terminate");
    int hero = s.to_act;
    Policy& policy = hero == 0 ? a : b;
    DecisionPrompt prompt = build_prompt(s, hero, lib);
    GroundingResult g;
    try {
      Decision d = policy.decide(prompt, s, hero);
      g = ground_decision(s, prompt, d);
    } catch (const std::exception&) {
      g.action = conservative_action(s, prompt);
      g.fell_back = true;
    }
    if (g.fell_back) ++rec.fallbacks[hero];
    s = apply(s, g.action);
  }

  rec.actions = s.history;
  auto res = s.results_bb_x100();
  rec.result_bb = {to_bb(res[0]), to_bb(res[1])};
  return rec;
}

MatchResult play_match(const MatchConfig& config, Policy& a, Policy& b,
                       const SkillLibrary& lib) {
  MatchResult out;
  out.records.reserve(config.hands);
  for (int i = 0; i < config.hands; ++i) {
    bool swap = config.duplicate && i % 2 == 1;
    out.records.push_back(play_hand(config.seed, i, a, b, lib, swap));
  }

  int n = static_cast<int>(out.records.size());
  double sum = 0, sumsq = 0;
  for (const auto& r : out.records) {
    sum += r.result_bb[0];
    sumsq += r.result_bb[0] * r.result_bb[0];
    out.stats.fallbacks_a += r.fallbacks[0];
    out.stats.fallbacks_b += r.fallbacks[1];
  }
  out.stats.hands = n;
  if (n > 0) {
    double mean = sum / n;
    out.stats.mbb_per_hand_a = mean * 1000.0;
    if (n > 1) {
      double var = (sumsq - n * mean * mean) / (n - 1);
      out.stats.stderr_mbb = std::sqrt(std::max(0.0, var) / n) * 1000.0;
    }
  }
  if (!config.out_path.empty()) write_history(config.out_path, out.records);
  return out;
}

Advice advise(const GameState& state, int hero, const SkillLibrary& lib, Policy& policy) {
  Advice out;
  out.prompt = build_prompt(state, hero, lib);
  try {
    out.decision = policy.decide(out.prompt, state, hero);
    out.grounding = ground_decision(state, out.prompt, out.decision);
  } catch (const LlmError&) {
    throw;  // single-shot advice: surface endpoint failures to the caller
  } catch (const std::exception& e) {
    out.grounding.action = conservative_action(state, out.prompt);
    out.grounding.fell_back = true;
    out.grounding.note = e.what();
  }
  return out;
}

}  // namespace pokerskill
