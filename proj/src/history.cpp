#include "pokerskill/history.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

using json = nlohmann::json;

namespace pokerskill {

namespace {

ActionKind kind_from(const std::string& s) {
  if (s == "fold") return ActionKind::Fold;
  if (s == "check") return ActionKind::Check;
  if (s == "call") return ActionKind::Call;
  if (s == "bet") return ActionKind::Bet;
  if (s == "raise") return ActionKind::Raise;
  if (s == "all_in") return ActionKind::AllIn;
  throw std::runtime_error("unknown action kind '" + s + "'");
}

Street street_from(const std::string& s) {
  if (s == "preflop") return Street::Preflop;
  if (s == "flop") return Street::Flop;
  if (s == "turn") return Street::Turn;
  if (s == "river") return Street::River;
  throw std::runtime_error("unknown street '" + s + "'");
}

}  // namespace

std::string to_jsonl_line(const HandHistoryRecord& rec) {
  json actions = json::array();
  for (const auto& e : rec.actions)
    actions.push_back({{"street", to_string(e.street)},
                       {"seat", e.seat},
                       {"kind", to_string(e.action.kind)},
                       {"to", e.action.amount_to},
                       {"pot", e.action.pot_before}});
  json j{{"index", rec.index},
         {"seed", rec.seed},
         {"button", rec.button},
         {"hole", {rec.hole[0], rec.hole[1]}},
         {"runout", rec.runout},
         {"agents", {rec.agents[0], rec.agents[1]}},
         {"manifest", rec.manifest_hash},
         {"actions", actions},
         {"result_bb", {rec.result_bb[0], rec.result_bb[1]}},
         {"fallbacks", {rec.fallbacks[0], rec.fallbacks[1]}}};
  return j.dump();
}

HandHistoryRecord from_jsonl_line(const std::string& line) {
  json j = json::parse(line);
  HandHistoryRecord rec;
  rec.index = j.at("index").get<int>();
  rec.seed = j.at("seed").get<uint64_t>();
  rec.button = j.at("button").get<int>();
  rec.hole = {j.at("hole").at(0).get<std::string>(), j.at("hole").at(1).get<std::string>()};
  rec.runout = j.at("runout").get<std::string>();
  rec.agents = {j.at("agents").at(0).get<std::string>(),
                j.at("agents").at(1).get<std::string>()};
  rec.manifest_hash = j.at("manifest").get<uint64_t>();
  for (const auto& a : j.at("actions")) {
    HistoryEntry e;
    e.street = street_from(a.at("street").get<std::string>());
    e.seat = a.at("seat").get<int>();
    e.action.kind = kind_from(a.at("kind").get<std::string>());
    e.action.amount_to = a.at("to").get<Money>();
    e.action.pot_before = a.at("pot").get<Money>();
    rec.actions.push_back(e);
  }
  rec.result_bb = {j.at("result_bb").at(0).get<double>(),
                   j.at("result_bb").at(1).get<double>()};
  rec.fallbacks = {j.at("fallbacks").at(0).get<int>(), j.at("fallbacks").at(1).get<int>()};
  return rec;
}

void write_history(const std::string& path, const std::vector<HandHistoryRecord>& recs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& r : recs) out << to_jsonl_line(r) << "\n";
}

std::vector<HandHistoryRecord> read_history(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<HandHistoryRecord> recs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      recs.push_back(from_jsonl_line(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return recs;
}

GameState verify_record(const HandHistoryRecord& rec) {
  std::array<std::vector<Card>, 2> hole{parse_cards(rec.hole[0]), parse_cards(rec.hole[1])};
  GameState s = initial_state(rec.button, hole, parse_cards(rec.runout));
  s = replay(s, rec.actions);
  if (!s.terminal) throw std::runtime_error("record does not reach a terminal state");
  auto res = s.results_bb_x100();
  for (int i = 0; i < 2; ++i)
    if (std::abs(to_bb(res[i]) - rec.result_bb[i]) > 1e-9)
      throw std::runtime_error("replayed result differs for seat " + std::to_string(i));
  return s;
}

}  // namespace pokerskill
