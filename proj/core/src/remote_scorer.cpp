#include "lexsimp/remote_scorer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "lexsimp/errors.hpp"

namespace lexsimp {

namespace {

constexpr const char* kPath = "/v1/maskfill";
constexpr int kBackoffBaseMs = 100;

// Bounds in-flight requests across threads.
class Gate {
 public:
  explicit Gate(int slots) : slots_(slots > 0 ? slots : 1) {}
  void acquire() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return slots_ > 0; });
    --slots_;
  }
  void release() {
    {
      std::lock_guard lock(mu_);
      ++slots_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  int slots_;
};

struct GateGuard {
  explicit GateGuard(Gate& gate) : gate_(gate) { gate_.acquire(); }
  ~GateGuard() { gate_.release(); }
  Gate& gate_;
};

}  // namespace

struct RemoteScorer::Impl {
  RemoteScorerConfig cfg;
  mutable Gate gate;

  explicit Impl(RemoteScorerConfig c) : cfg(std::move(c)), gate(cfg.max_concurrent) {}

  std::vector<ScoredText> request(const std::string& endpoint,
                                  const nlohmann::json& body) const {
    GateGuard guard(gate);
    std::string payload = body.dump();
    std::string last_error;
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
      if (attempt > 0)
        std::this_thread::sleep_for(
            std::chrono::milliseconds(kBackoffBaseMs << (attempt - 1)));
      httplib::Client client(endpoint);
      client.set_connection_timeout(0, cfg.timeout_ms * 1000);
      client.set_read_timeout(cfg.timeout_ms / 1000, (cfg.timeout_ms % 1000) * 1000);
      auto res = client.Post(kPath, payload, "application/json");
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status < 200 || res->status >= 300) {
        last_error = "HTTP " + std::to_string(res->status) + ": " +
                     res->body.substr(0, 200);
        continue;
      }
      return parse_results(res->body);
    }
    throw BackendError("maskfill backend " + endpoint + " failed after " +
                       std::to_string(cfg.max_retries + 1) + " attempts; " +
                       last_error);
  }

  static std::vector<ScoredText> parse_results(const std::string& body) {
    nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("results") ||
        !doc["results"].is_array())
      throw BackendError("maskfill response is not a results document: " +
                         body.substr(0, 200));
    std::vector<ScoredText> out;
    for (const auto& item : doc["results"]) {
      if (!item.is_object() || !item.contains("text") ||
          !item["text"].is_string() || !item.contains("log_prob") ||
          !item["log_prob"].is_number())
        throw BackendError("malformed maskfill result item: " + item.dump());
      double lp = item["log_prob"].get<double>();
      if (!std::isfinite(lp))
        throw BackendError("non-finite log_prob in maskfill response");
      out.push_back({item["text"].get<std::string>(), lp});
    }
    return out;
  }
};

RemoteScorer::RemoteScorer(RemoteScorerConfig cfg)
    : impl_(std::make_unique<Impl>(std::move(cfg))) {
  if (impl_->cfg.endpoint.empty())
    throw BackendError("remote scorer configured without an endpoint");
}

RemoteScorer::~RemoteScorer() = default;

std::vector<ScoredText> RemoteScorer::generate(const MaskedContext& ctx,
                                               int top_n) const {
  nlohmann::json body = {{"mode", "generate"},
                         {"left", ctx.left},
                         {"right", ctx.right},
                         {"top_n", top_n}};
  const std::string& endpoint = impl_->cfg.generate_endpoint.empty()
                                    ? impl_->cfg.endpoint
                                    : impl_->cfg.generate_endpoint;
  auto results = impl_->request(endpoint, body);
  if (results.size() > static_cast<std::size_t>(std::max(top_n, 0)))
    throw BackendError("maskfill generate returned " +
                       std::to_string(results.size()) + " results for top_n=" +
                       std::to_string(top_n));
  std::stable_sort(results.begin(), results.end(),
                   [](const ScoredText& a, const ScoredText& b) {
                     if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
                     return a.text < b.text;
                   });
  return results;
}

std::vector<ScoredText> RemoteScorer::score(
    const MaskedContext& ctx, const std::vector<std::string>& texts) const {
  std::vector<ScoredText> out;
  out.reserve(texts.size());
  const std::size_t batch =
      impl_->cfg.max_batch > 0 ? static_cast<std::size_t>(impl_->cfg.max_batch) : 64;
  for (std::size_t begin = 0; begin < texts.size(); begin += batch) {
    std::size_t end = std::min(texts.size(), begin + batch);
    nlohmann::json body = {
        {"mode", "score"},
        {"left", ctx.left},
        {"right", ctx.right},
        {"candidates",
         std::vector<std::string>(texts.begin() + begin, texts.begin() + end)}};
    auto results = impl_->request(impl_->cfg.endpoint, body);
    if (results.size() != end - begin)
      throw BackendError("maskfill score returned " +
                         std::to_string(results.size()) + " results for " +
                         std::to_string(end - begin) + " candidates");
    for (auto& item : results) out.push_back(std::move(item));
  }
  return out;
}

}  // namespace lexsimp
