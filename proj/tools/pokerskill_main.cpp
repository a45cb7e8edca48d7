#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pokerskill/harness.hpp"
#include "pokerskill/llm_client.hpp"

using namespace pokerskill;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNetwork = 3;

std::unique_ptr<Policy> make_agent(const std::string& spec) {
  if (spec == "rule") return make_rule_policy();
  if (spec.rfind("llm:", 0) == 0) return make_llm_policy(load_llm_config(spec.substr(4)));
  throw CLI::ValidationError("agent must be 'rule' or 'llm:<config.json>', got '" + spec + "'");
}

// History grammar: streets split by '|', tokens f k c a bN (N = BB level).
std::vector<ActionRecord> parse_history_spec(const std::string& spec) {
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
      else throw std::runtime_error("bad action token '" + t + "'");
    }
  }
  return out;
}

int run_match(int hands, uint64_t seed, bool duplicate, const std::string& agent_a,
              const std::string& agent_b, const std::string& out_path,
              const std::string& data_dir) {
  SkillLibrary lib = load_library(data_dir);
  load_budget_tables(data_dir + "/tables");
  auto a = make_agent(agent_a);
  auto b = make_agent(agent_b);
  MatchConfig cfg{hands, seed, duplicate, out_path};
  MatchResult res = play_match(cfg, *a, *b, lib);
  std::printf("hands: %d\n", res.stats.hands);
  std::printf("agent A (%s): %+.1f mbb/hand (SE %.1f)\n", a->name().c_str(),
              res.stats.mbb_per_hand_a, res.stats.stderr_mbb);
  std::printf("agent B (%s): %+.1f mbb/hand\n", b->name().c_str(),
              -res.stats.mbb_per_hand_a);
  std::printf("fallbacks: A=%d B=%d\n", res.stats.fallbacks_a, res.stats.fallbacks_b);
  if (!out_path.empty()) std::printf("history: %s\n", out_path.c_str());
  return kExitOk;
}

int run_replay(const std::string& path) {
  auto recs = read_history(path);
  double total_a = 0;
  for (const auto& rec : recs) {
    verify_record(rec);
    total_a += rec.result_bb[0];
  }
  std::printf("replayed %zu hands, all consistent\n", recs.size());
  if (!recs.empty())
    std::printf("agent A (%s): %+.1f mbb/hand over %zu hands\n", recs[0].agents[0].c_str(),
                total_a / recs.size() * 1000.0, recs.size());
  return kExitOk;
}

int run_advise(const std::string& hero_cards, const std::string& villain_cards,
               const std::string& board, int button, int hero,
               const std::string& history_spec, const std::string& llm_config,
               const std::string& data_dir, bool show_prompt) {
  SkillLibrary lib = load_library(data_dir);
  load_budget_tables(data_dir + "/tables");
  std::array<std::vector<Card>, 2> hole;
  hole[hero] = parse_cards(hero_cards);
  hole[1 - hero] = parse_cards(villain_cards);
  GameState s = initial_state(button, hole, parse_cards(board));
  for (const auto& a : parse_history_spec(history_spec)) s = apply(s, a);
  if (s.terminal) throw std::runtime_error("history reaches a terminal state");
  if (s.to_act != hero) throw std::runtime_error("it is not the hero's turn after this history");

  std::unique_ptr<Policy> policy =
      llm_config.empty() ? make_rule_policy() : make_llm_policy(load_llm_config(llm_config));
  policy->begin_hand();
  Advice adv = advise(s, hero, lib, *policy);
  if (show_prompt) std::printf("%s\n", adv.prompt.text.c_str());
  if (adv.prompt.report) {
    const auto& r = *adv.prompt.report;
    std::printf("scenario: %s (%s)\n", r.scenario.code.c_str(), to_string(r.scenario.role));
    std::printf("hand: %s | ruling: %s\n", r.cls.summary.c_str(), to_string(r.verdict.ruling));
  }
  const auto& act = adv.grounding.action;
  std::printf("advice: %s", to_string(act.kind));
  if (act.amount_to > 0) std::printf(" to %s BB", money_str(act.amount_to).c_str());
  if (adv.grounding.fell_back)
    std::printf(" (fallback: %s)", adv.grounding.note.c_str());
  std::printf("\n");
  return kExitOk;
}

int run_lint(const std::string& dir) {
  auto problems = lint_library(dir);
  if (problems.empty()) {
    SkillLibrary lib = load_library(dir);
    std::printf("ok: %zu fragments, manifest %016llx\n", lib.fragments.size(),
                static_cast<unsigned long long>(lib.manifest_hash));
    return kExitOk;
  }
  for (const auto& p : problems) std::fprintf(stderr, "error: %s\n", p.c_str());
  return kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic HUNL skill scaffold"};
  app.require_subcommand(1);
  std::string data_dir = default_data_dir();
  app.add_option("--data", data_dir, "Skill library root directory");

  auto* match = app.add_subcommand("match", "Run a self-play match");
  int hands = 100;
  uint64_t seed = 42;
  bool duplicate = false;
  std::string agent_a = "rule", agent_b = "rule", out_path;
  match->add_option("--hands", hands, "Number of hands")->check(CLI::PositiveNumber);
  match->add_option("--seed", seed, "Base RNG seed");
  match->add_flag("--duplicate", duplicate, "Duplicate dealing (mirrored pairs)");
  match->add_option("--agent-a", agent_a, "rule or llm:<config.json>");
  match->add_option("--agent-b", agent_b, "rule or llm:<config.json>");
  match->add_option("--out", out_path, "JSONL history output path");

  auto* replay_cmd = app.add_subcommand("replay", "Verify a JSONL history file");
  std::string replay_path;
  replay_cmd->add_option("file", replay_path, "History file")->required();

  auto* adv = app.add_subcommand("advise", "Advise one decision point");
  std::string hero_cards, villain_cards = "2h 2d", board, history_spec;
  int button = 0, hero = 1;
  std::string llm_config;
  bool show_prompt = false;
  adv->add_option("--hero-cards", hero_cards, "e.g. '5c 4c'")->required();
  adv->add_option("--villain-cards", villain_cards, "Placeholder villain cards");
  adv->add_option("--board", board, "Dealt board cards, e.g. '7s 6h Jc'");
  adv->add_option("--button", button, "Button seat (0 or 1)");
  adv->add_option("--hero", hero, "Hero seat (0 or 1)");
  adv->add_option("--history", history_spec, "Actions: 'b2.75 b9 c | b5 c | k k'");
  adv->add_option("--llm", llm_config, "LLM config JSON (default: rule policy)");
  adv->add_flag("--show-prompt", show_prompt, "Print the full prompt");

  auto* lint = app.add_subcommand("lint-library", "Validate a skill library");
  std::string lint_dir = data_dir;
  lint->add_option("dir", lint_dir, "Library root (default: --data)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*match)
      return run_match(hands, seed, duplicate, agent_a, agent_b, out_path, data_dir);
    if (*replay_cmd) return run_replay(replay_path);
    if (*adv)
      return run_advise(hero_cards, villain_cards, board, button, hero, history_spec,
                        llm_config, data_dir, show_prompt);
    if (*lint) return run_lint(lint->count("dir") ? lint_dir : data_dir);
  } catch (const LlmError& e) {
    std::fprintf(stderr, "network error: %s\n", e.what());
    return kExitNetwork;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
