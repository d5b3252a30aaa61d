// Copyright 2026 The Rubriq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RUBRIQ_LLM_BACKEND_H_
#define RUBRIQ_LLM_BACKEND_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rubriq/error.h"

namespace rubriq {

inline constexpr std::string_view kDefaultSummarizerModel = "text-curie-001";
inline constexpr std::string_view kDefaultReviewerModel = "text-davinci-003";
inline constexpr std::int64_t kDefaultSummarizerBudget = 2048;
inline constexpr std::int64_t kDefaultReviewerBudget = 4000;

// ceil(code points / 4).
std::int64_t EstimateTokens(std::string_view text);

struct CompletionRequest {
  std::string model_id;
  std::string prompt;
  std::int64_t max_output_tokens = 512;
  double temperature = 0.0;
  std::optional<std::int64_t> seed;
};

struct CompletionResult {
  std::string text;
  std::int64_t prompt_token_estimate = 0;
  std::int64_t output_token_estimate = 0;
};

// Throws Error(kPrecondition) on an empty prompt, max_output_tokens < 1 or
// a negative temperature.
void ValidateRequest(const CompletionRequest& request);

// Context budget, in estimated tokens, per model id.
struct ModelBudgets {
  std::map<std::string, std::int64_t, std::less<>> per_model;
  std::int64_t fallback = kDefaultReviewerBudget;

  std::int64_t For(std::string_view model_id) const;
  // Throws Error(kBudgetExceeded) when the prompt does not fit.
  void Check(const CompletionRequest& request) const;

  static ModelBudgets Defaults();
};

// Implementations must accept concurrent Complete() calls.
class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  virtual CompletionResult Complete(const CompletionRequest& request) const = 0;
};

// ---------------------------------------------------------------------------
// Mock

struct MockOptions {
  ModelBudgets budgets = ModelBudgets::Defaults();
  // Requests to these models get summary-shaped output; everything else is
  // answered with a review ("RATING: k" line plus 2-5 sentences).
  std::set<std::string, std::less<>> summarizer_models = {
      std::string(kDefaultSummarizerModel)};
};

// Deterministic stand-in. Output is a pure function of (model, prompt, seed).
class MockBackend : public CompletionBackend {
 public:
  explicit MockBackend(MockOptions options = {});

  CompletionResult Complete(const CompletionRequest& request) const override;

  // The rating a review-shaped completion for this input carries.
  static int RatingFor(const CompletionRequest& request);

 private:
  MockOptions options_;
};

// Counts calls per model on the way through to `inner`.
class RecordingBackend : public CompletionBackend {
 public:
  explicit RecordingBackend(std::shared_ptr<const CompletionBackend> inner);

  CompletionResult Complete(const CompletionRequest& request) const override;

  std::int64_t CallCount(std::string_view model_id) const;
  std::int64_t TotalCalls() const;
  std::vector<CompletionRequest> Requests() const;
  void Reset();

 private:
  std::shared_ptr<const CompletionBackend> inner_;
  mutable std::mutex mu_;
  mutable std::vector<CompletionRequest> requests_;
};

// ---------------------------------------------------------------------------
// Retry

struct RetryPolicy {
  int max_attempts = 3;
  std::int64_t base_delay_ms = 500;
  double backoff_factor = 2.0;

  // Delay slept before retry number `retry` (1-based):
  // base_delay_ms * backoff_factor^(retry - 1).
  std::chrono::milliseconds DelayBeforeRetry(int retry) const;
  void Validate() const;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;
Sleeper RealSleeper();

// True for kRateLimited and kTransport.
bool IsRetryable(const Error& error);

// Runs `attempt` until it succeeds, a non-retryable Error escapes, or the
// policy's attempts are exhausted (the last error is rethrown).
CompletionResult RunWithRetry(const RetryPolicy& policy, const Sleeper& sleep,
                              const std::function<CompletionResult()>& attempt);

// ---------------------------------------------------------------------------
// Remote HTTP adapter

struct HttpRequest {
  std::string url;
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
  std::chrono::milliseconds timeout{60000};
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Throws Error(kTransport) when no response could be obtained.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse Post(const HttpRequest& request) const = 0;
};

// cpp-httplib client; supports http:// and https:// endpoints.
std::shared_ptr<const HttpTransport> MakeHttpTransport();

inline constexpr std::string_view kApiKeyEnv = "RUBRIQ_API_KEY";
inline constexpr std::string_view kApiUrlEnv = "RUBRIQ_API_URL";

struct RemoteOptions {
  std::string endpoint;
  std::string api_key;
  // JSON pointer to the completion text in the response. Empty returns the
  // whole body.
  std::string text_path = "/choices/0/text";
  RetryPolicy retry;
  ModelBudgets budgets = ModelBudgets::Defaults();
  std::chrono::milliseconds timeout{60000};

  // Fills endpoint and api_key from RUBRIQ_API_URL / RUBRIQ_API_KEY, leaving
  // fields empty when the variables are unset.
  static RemoteOptions FromEnvironment();
};

class RemoteBackend : public CompletionBackend {
 public:
  // Throws Error(kConfig) when endpoint or api_key is empty.
  RemoteBackend(RemoteOptions options,
                std::shared_ptr<const HttpTransport> transport,
                Sleeper sleeper = RealSleeper());

  CompletionResult Complete(const CompletionRequest& request) const override;

  // {"model", "prompt", "max_tokens", "temperature"[, "seed"]}
  static std::string EncodeRequest(const CompletionRequest& request);

 private:
  CompletionResult Attempt(const CompletionRequest& request,
                           const std::string& body) const;

  RemoteOptions options_;
  std::shared_ptr<const HttpTransport> transport_;
  Sleeper sleeper_;
};

}  // namespace rubriq

#endif  // RUBRIQ_LLM_BACKEND_H_
