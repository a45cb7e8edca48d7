#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "pokerskill/policy.hpp"

namespace pokerskill {

// Chat-completions endpoint settings, loaded from a small JSON file:
// {"base_url": "http://127.0.0.1:8080", "model": "gpt-4o",
//  "api_key_env": "OPENAI_API_KEY", "timeout_ms": 30000, "max_retries": 3}
struct LlmConfig {
  std::string base_url;
  std::string model;
  std::string api_key_env;  // env var holding the bearer token; may be empty
  int timeout_ms = 30000;
  int max_retries = 3;
};

LlmConfig load_llm_config(const std::string& path);

struct LlmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Policy backed by an OpenAI-compatible chat-completions server. Keeps the
// conversation for the current hand; the decision schema is forced via a
// tool call. Network or parse failures raise LlmError, which the harness
// turns into the conservative fallback.
std::unique_ptr<Policy> make_llm_policy(const LlmConfig& config);

}  // namespace pokerskill
