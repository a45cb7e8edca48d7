#include "pokerskill/llm_client.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#define CPPHTTPLIB_NO_EXCEPTIONS 0
#include "httplib.h"
#include "json.hpp"

using json = nlohmann::json;

namespace pokerskill {

LlmConfig load_llm_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read llm config: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("bad llm config " + path + ": " + e.what());
  }
  LlmConfig c;
  if (!j.contains("base_url") || !j.contains("model"))
    throw std::runtime_error("llm config needs base_url and model: " + path);
  c.base_url = j["base_url"].get<std::string>();
  c.model = j["model"].get<std::string>();
  c.api_key_env = j.value("api_key_env", std::string());
  c.timeout_ms = j.value("timeout_ms", 30000);
  c.max_retries = j.value("max_retries", 3);
  return c;
}

namespace {

json decision_tool() {
  return json{
      {"type", "function"},
      {"function",
       {{"name", "act"},
        {"description", "Choose the poker action for this decision point."},
        {"parameters",
         {{"type", "object"},
          {"properties",
           {{"action",
             {{"type", "string"},
              {"enum", {"f", "k", "c", "b", "allin"}}}},
            {"amount", {{"type", "number"},
                        {"description", "Total bet level this street, in BB."}}},
            {"reasoning", {{"type", "string"}}}}},
          {"required", {"action"}}}}}}};
}

class LlmPolicy : public Policy {
 public:
  explicit LlmPolicy(LlmConfig config) : config_(std::move(config)) {}

  void begin_hand() override { messages_ = json::array(); }

  Decision decide(const DecisionPrompt& prompt, const GameState&, int) override {
    messages_.push_back({{"role", "user"}, {"content", prompt.text}});
    json body{{"model", config_.model},
              {"messages", messages_},
              {"tools", json::array({decision_tool()})},
              {"tool_choice", {{"type", "function"}, {"function", {{"name", "act"}}}}}};
    std::string reply = post_with_retries(body.dump());
    std::string args = extract_arguments(reply);
    messages_.push_back({{"role", "assistant"}, {"content", args}});
    try {
      return parse_decision(args);
    } catch (const std::exception& e) {
      throw LlmError(std::string("bad decision from model: ") + e.what());
    }
  }

  std::string name() const override { return "llm:" + config_.model; }

 private:
  std::string post_with_retries(const std::string& body) {
    httplib::Client cli(config_.base_url);
    cli.set_connection_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
    cli.set_read_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
    httplib::Headers headers;
    if (!config_.api_key_env.empty()) {
      const char* key = std::getenv(config_.api_key_env.c_str());
      if (!key)
        throw LlmError("api key env var not set: " + config_.api_key_env);
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    std::string last_error;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
      if (attempt > 0)
        std::this_thread::sleep_for(std::chrono::milliseconds(250 << (attempt - 1)));
      auto res = cli.Post("/v1/chat/completions", headers, body, "application/json");
      if (!res) {
        last_error = "connection failed: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status == 429 || res->status >= 500) {
        last_error = "http " + std::to_string(res->status);
        continue;  // transient: retry
      }
      if (res->status != 200)
        throw LlmError("http " + std::to_string(res->status) + ": " + res->body);
      return res->body;
    }
    throw LlmError("llm request failed after retries: " + last_error);
  }

  static std::string extract_arguments(const std::string& reply) {
    json j;
    try {
      j = json::parse(reply);
    } catch (const std::exception& e) {
      throw LlmError(std::string("bad completion JSON: ") + e.what());
    }
    try {
      const json& msg = j.at("choices").at(0).at("message");
      if (msg.contains("tool_calls") && !msg["tool_calls"].empty())
        return msg["tool_calls"][0].at("function").at("arguments").get<std::string>();
      if (msg.contains("content") && msg["content"].is_string())
        return msg["content"].get<std::string>();
    } catch (const std::exception& e) {
      throw LlmError(std::string("unexpected completion shape: ") + e.what());
    }
    throw LlmError("completion has neither tool call nor content");
  }

  LlmConfig config_;
  json messages_ = json::array();
};

}  // namespace

std::unique_ptr<Policy> make_llm_policy(const LlmConfig& config) {
  return std::make_unique<LlmPolicy>(config);
}

}  // namespace pokerskill
