#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "pokerskill/history.hpp"

using namespace pokerskill;
namespace fs = std::filesystem;

namespace {

HandHistoryRecord golden_record() {
  HandHistoryRecord rec;
  rec.index = 3;
  rec.seed = 42;
  rec.button = 0;
  rec.hole = {"5c 4c", "As 2d"};
  rec.runout = "7s 6h Jc 6c 9h";
  rec.agents = {"rule", "rule"};
  rec.manifest_hash = 0xdeadbeefcafe1234ull;

  std::array<std::vector<Card>, 2> hole{parse_cards("5c 4c"), parse_cards("As 2d")};
  GameState s = initial_state(0, hole, parse_cards("7s 6h Jc 6c 9h"));
  s = apply(s, {ActionKind::Bet, from_bb(2.75)});
  s = apply(s, {ActionKind::Bet, from_bb(9)});
  s = apply(s, {ActionKind::Fold});
  rec.actions = s.history;
  auto res = s.results_bb_x100();
  rec.result_bb = {res[0] / 100.0, res[1] / 100.0};
  return rec;
}

}  // namespace

TEST_CASE("records round-trip through JSONL") {
  HandHistoryRecord rec = golden_record();
  std::string line = to_jsonl_line(rec);
  CHECK(line.find('\n') == std::string::npos);  // one line per hand

  HandHistoryRecord back = from_jsonl_line(line);
  CHECK(back.index == rec.index);
  CHECK(back.seed == rec.seed);
  CHECK(back.button == rec.button);
  CHECK(back.hole == rec.hole);
  CHECK(back.runout == rec.runout);
  CHECK(back.agents == rec.agents);
  CHECK(back.manifest_hash == rec.manifest_hash);
  CHECK(back.result_bb == rec.result_bb);
  REQUIRE(back.actions.size() == rec.actions.size());
  for (size_t i = 0; i < rec.actions.size(); ++i) {
    CHECK(back.actions[i].seat == rec.actions[i].seat);
    CHECK(back.actions[i].street == rec.actions[i].street);
    CHECK(back.actions[i].action.kind == rec.actions[i].action.kind);
    CHECK(back.actions[i].action.amount_to == rec.actions[i].action.amount_to);
  }
  // Serialization is stable.
  CHECK(to_jsonl_line(back) == line);
}

TEST_CASE("file round-trip and malformed lines name the line number") {
  fs::path path = fs::temp_directory_path() / "pokerskill_history_test.jsonl";
  std::vector<HandHistoryRecord> recs{golden_record(), golden_record()};
  recs[1].index = 4;
  write_history(path.string(), recs);

  auto back = read_history(path.string());
  REQUIRE(back.size() == 2);
  CHECK(back[1].index == 4);

  std::ofstream out(path, std::ios::app);
  out << "{not json\n";
  out.close();
  try {
    read_history(path.string());
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  fs::remove(path);

  CHECK_THROWS(read_history("/nonexistent/history.jsonl"));
}

TEST_CASE("verify_record replays and audits the outcome") {
  HandHistoryRecord rec = golden_record();
  GameState final_state = verify_record(rec);
  CHECK(final_state.terminal);

  HandHistoryRecord wrong_result = rec;
  wrong_result.result_bb[0] += 1.0;
  wrong_result.result_bb[1] -= 1.0;
  CHECK_THROWS(verify_record(wrong_result));

  HandHistoryRecord illegal = rec;
  illegal.actions.push_back({Street::Preflop, 0, {ActionKind::Check}});
  CHECK_THROWS(verify_record(illegal));
}
