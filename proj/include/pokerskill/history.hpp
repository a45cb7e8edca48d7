#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pokerskill/game_state.hpp"

namespace pokerskill {

// One completed hand, serialized as a single JSONL line.
struct HandHistoryRecord {
  int index = 0;
  uint64_t seed = 0;
  int button = 0;
  std::array<std::string, 2> hole;       // "5c 4c"
  std::string runout;                    // "7s 6h Jc 6c 9h"
  std::array<std::string, 2> agents;
  uint64_t manifest_hash = 0;            // skill library fingerprint
  std::vector<HistoryEntry> actions;
  std::array<double, 2> result_bb{};     // net outcome per seat
  std::array<int, 2> fallbacks{};        // grounding fallbacks per seat
};

std::string to_jsonl_line(const HandHistoryRecord& rec);
HandHistoryRecord from_jsonl_line(const std::string& line);

void write_history(const std::string& path, const std::vector<HandHistoryRecord>& recs);

// Throws std::runtime_error naming the 1-based line on malformed or
// truncated input.
std::vector<HandHistoryRecord> read_history(const std::string& path);

// Rebuilds the hand from the record and replays every action through the
// state machine; throws if any action is illegal or the results differ.
GameState verify_record(const HandHistoryRecord& rec);

}  // namespace pokerskill
