#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "pokerskill/skill_library.hpp"

using namespace pokerskill;
namespace fs = std::filesystem;

namespace {

fs::path copy_library(const std::string& tag) {
  fs::path dst = fs::temp_directory_path() / ("pokerskill_lib_" + tag);
  fs::remove_all(dst);
  fs::copy(default_data_dir(), dst, fs::copy_options::recursive);
  return dst;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

GameState preflop_state(Money stacks = 200 * kBB) {
  std::array<std::vector<Card>, 2> hole{parse_cards("As 2d"), parse_cards("5c 4c")};
  return initial_state(0, hole, parse_cards("7s 6h Jc 6c 9h"), stacks);
}

}  // namespace

TEST_CASE("default library loads with a stable manifest") {
  SkillLibrary lib = load_library(default_data_dir());
  CHECK(lib.fragments.size() >= 50);
  CHECK(lib.manifest_hash != 0);
  CHECK(lib.manifest_hash == manifest_hash(default_data_dir()));
  CHECK(lib.find(1, "attack-defense-notation") != nullptr);
  CHECK(lib.find(2, "range-3bet-pot") != nullptr);
  CHECK(lib.find(1, "no-such-fragment") == nullptr);
  CHECK(lint_library(default_data_dir()).empty());
}

TEST_CASE("duplicate (layer, name) pairs are rejected") {
  fs::path dir = copy_library("dup");
  write_file(dir / "p1" / "dup.skill",
             "@fragment attack-defense-notation\nlayer: P1\norder: 99\n---\nx\n@end\n");
  CHECK_THROWS_WITH_AS(load_library(dir.string()),
                       doctest::Contains("attack-defense-notation"), std::runtime_error);
  CHECK(!lint_library(dir.string()).empty());
  fs::remove_all(dir);
}

TEST_CASE("schema violations report file and line") {
  fs::path dir = copy_library("badhdr");
  write_file(dir / "p3" / "bad.skill",
             "@fragment broken\nlayer: P9\norder: 5\n---\nx\n@end\n");
  try {
    load_library(dir.string());
    FAIL("expected a schema error");
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("bad.skill") != std::string::npos);
    CHECK(msg.find(":2") != std::string::npos);  // the layer line
  }
  fs::remove_all(dir);
}

TEST_CASE("missing coverage fails atomically") {
  fs::path dir = copy_library("missing");
  fs::remove_all(dir / "p2");
  CHECK_THROWS_AS(load_library(dir.string()), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("preflop scenario catalog") {
  GameState s = preflop_state();
  CHECK(preflop_scenario(s) == "unopened_button");
  CHECK(preflop_scenario(apply(s, {ActionKind::Bet, from_bb(2)})) == "bb_vs_minraise");
  CHECK(preflop_scenario(apply(s, {ActionKind::Bet, from_bb(2.75)})) == "bb_vs_open");
  CHECK(preflop_scenario(apply(s, {ActionKind::Bet, from_bb(5)})) == "bb_vs_large_open");
  CHECK(preflop_scenario(apply(s, {ActionKind::Call})) == "limp_pot");

  GameState threebet = apply(apply(s, {ActionKind::Bet, from_bb(2.75)}),
                             {ActionKind::Bet, from_bb(9)});
  CHECK(preflop_scenario(threebet) == "3bet_pot");
  GameState fourbet = apply(threebet, {ActionKind::Bet, from_bb(21)});
  CHECK(preflop_scenario(fourbet) == "4bet_pot");
  CHECK(preflop_scenario(apply(fourbet, {ActionKind::Bet, from_bb(50)})) == "5bet_plus");
  CHECK(preflop_scenario(apply(s, {ActionKind::AllIn})) == "vs_allin");

  GameState shallow = preflop_state(from_bb(20));
  CHECK(preflop_scenario(shallow) == "shortstack_unopened");
  CHECK(preflop_scenario(apply(shallow, {ActionKind::AllIn})) == "shortstack_allin");
}

TEST_CASE("texture tags feed fragment matching") {
  auto turn = texture_tags(classify_board(parse_cards("7s 6h Jc 6c"), Street::Turn));
  CHECK(turn.count("two_tone"));
  CHECK(turn.count("paired"));
  CHECK(!turn.count("flush_possible"));

  auto ocf = texture_tags(classify_board(parse_cards("Ks 7s 2s 4s"), Street::Turn));
  CHECK(ocf.count("one_card_flush"));
  CHECK(ocf.count("flush_possible"));  // derived umbrella tag
}

TEST_CASE("fragment selection follows the layer rules") {
  SkillLibrary lib = load_library(default_data_dir());

  GameState pre = apply(preflop_state(), {ActionKind::Bet, from_bb(2.75)});
  auto pre_frags = select_fragments(lib, pre, 1, nullptr);
  REQUIRE(!pre_frags.empty());
  bool saw_scenario = false;
  for (const auto* f : pre_frags) {
    CHECK((f->layer == 1 || f->layer == 2));
    if (f->scenario == "bb_vs_open") saw_scenario = true;
  }
  CHECK(saw_scenario);

  GameState s = preflop_state();
  s = apply(s, {ActionKind::Bet, from_bb(2.75)});
  s = apply(s, {ActionKind::Bet, from_bb(9)});
  s = apply(s, {ActionKind::Call});
  ContextReport rep = build_context(s, 1);
  auto flop_frags = select_fragments(lib, s, 1, &rep);
  int strength = 0, p5 = 0;
  for (const auto* f : flop_frags) {
    if (f->layer == 4 && !f->hand_class.empty()) ++strength;
    if (f->layer == 5) ++p5;
  }
  CHECK(strength == 1);  // exactly one hand-strength fragment
  CHECK(p5 == 0);

  s = apply(s, {ActionKind::Bet, from_bb(5)});
  s = apply(s, {ActionKind::Call});
  s = apply(s, {ActionKind::Check});
  s = apply(s, {ActionKind::Check});
  ContextReport river_rep = build_context(s, 1);
  auto river_frags = select_fragments(lib, s, 1, &river_rep);
  bool saw_p5 = false;
  for (const auto* f : river_frags)
    if (f->layer == 5) saw_p5 = true;
  CHECK(saw_p5);

  // Selection is ordered by (layer, order, name).
  for (size_t i = 1; i < river_frags.size(); ++i) {
    auto key = [](const SkillFragment* f) {
      return std::tuple<int, int, std::string>(f->layer, f->order, f->name);
    };
    CHECK(key(river_frags[i - 1]) < key(river_frags[i]));
  }
}
