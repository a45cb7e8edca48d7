#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pokerskill/harness.hpp"
#include "pokerskill/llm_client.hpp"

namespace py = pybind11;
using namespace pokerskill;

namespace {

std::vector<ActionRecord> parse_actions(const std::string& spec) {
  std::vector<ActionRecord> out;
  std::stringstream streets(spec);
  std::string street;
  while (std::getline(streets, street, '|')) {
    std::stringstream toks(street);
    std::string t;
    while (toks >> t) {
      if (t == "f") out.push_back({ActionKind::Fold});
      else if (t == "k") out.push_back({ActionKind::Check});
      else if (t == "c") out.push_back({ActionKind::Call});
      else if (t == "a") out.push_back({ActionKind::AllIn});
      else if (t[0] == 'b') out.push_back({ActionKind::Bet, from_bb(std::stod(t.substr(1)))});
      else throw std::invalid_argument("bad action token '" + t + "'");
    }
  }
  return out;
}

GameState make_state(int button, const std::string& hole0, const std::string& hole1,
                     const std::string& runout, const std::string& history) {
  GameState s = initial_state(button, {parse_cards(hole0), parse_cards(hole1)},
                              parse_cards(runout));
  for (const auto& a : parse_actions(history)) s = apply(s, a);
  return s;
}

py::dict context_dict(const GameState& s, int hero) {
  ContextReport r = build_context(s, hero);
  py::dict d;
  d["street"] = to_string(s.street);
  d["pot_type"] = to_string(r.pot);
  d["spr"] = display_spr(r.spr_value);
  d["texture"] = r.texture.describe();
  d["hand"] = r.cls.summary;
  d["scenario"] = r.scenario.code;
  d["role"] = to_string(r.scenario.role);
  d["attack"] = r.budget.att_reason;
  d["ruling"] = to_string(r.verdict.ruling);
  std::vector<std::string> opts;
  for (const auto& o : r.viable.options) opts.push_back(o.label);
  d["viable"] = opts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deterministic HUNL skill scaffold core";

  m.def("evaluate", [](const std::string& cards) {
    auto cs = parse_cards(cards);
    if (cs.size() < 5 || cs.size() > 7)
      throw std::invalid_argument("need 5 to 7 cards");
    HandRank r = cs.size() == 5 ? evaluate5(cs)
                                : evaluate_best5({cs[0], cs[1]}, {cs.begin() + 2, cs.end()});
    return py::make_tuple(to_string(r.category), r.tiebreak);
  }, py::arg("cards"), "Evaluate 5-7 cards; returns (category, tiebreak).");

  m.def("board_texture", [](const std::string& board) {
    auto b = parse_cards(board);
    Street st = b.size() == 3 ? Street::Flop : b.size() == 4 ? Street::Turn : Street::River;
    return classify_board(b, st).describe();
  }, py::arg("board"));

  m.def("context", [](int button, const std::string& hole0, const std::string& hole1,
                      const std::string& runout, const std::string& history, int hero) {
    return context_dict(make_state(button, hole0, hole1, runout, history), hero);
  }, py::arg("button"), py::arg("hole0"), py::arg("hole1"), py::arg("runout"),
     py::arg("history"), py::arg("hero"),
     "Full pipeline report for the seat to act.");

  m.def("prompt", [](int button, const std::string& hole0, const std::string& hole1,
                     const std::string& runout, const std::string& history, int hero,
                     const std::string& data_dir) {
    SkillLibrary lib = load_library(data_dir.empty() ? default_data_dir() : data_dir);
    return build_prompt(make_state(button, hole0, hole1, runout, history), hero, lib).text;
  }, py::arg("button"), py::arg("hole0"), py::arg("hole1"), py::arg("runout"),
     py::arg("history"), py::arg("hero"), py::arg("data_dir") = "");

  m.def("run_match", [](int hands, uint64_t seed, bool duplicate,
                        const std::string& data_dir, const std::string& out_path) {
    SkillLibrary lib = load_library(data_dir.empty() ? default_data_dir() : data_dir);
    auto a = make_rule_policy();
    auto b = make_rule_policy();
    MatchConfig cfg{hands, seed, duplicate, out_path};
    MatchResult res = play_match(cfg, *a, *b, lib);
    py::dict d;
    d["hands"] = res.stats.hands;
    d["mbb_per_hand_a"] = res.stats.mbb_per_hand_a;
    d["stderr_mbb"] = res.stats.stderr_mbb;
    d["fallbacks_a"] = res.stats.fallbacks_a;
    d["fallbacks_b"] = res.stats.fallbacks_b;
    return d;
  }, py::arg("hands"), py::arg("seed") = 42, py::arg("duplicate") = false,
     py::arg("data_dir") = "", py::arg("out_path") = "");

  m.def("lint_library", [](const std::string& dir) { return lint_library(dir); },
        py::arg("dir"));
  m.def("manifest_hash", [](const std::string& dir) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(manifest_hash(dir)));
    return std::string(buf);
  }, py::arg("dir"));
}
