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

#include "rubriq/llm_backend.h"

#include <array>
#include <cmath>
#include <random>
#include <thread>

#include "rubriq/error.h"
#include "rubriq/text.h"

namespace rubriq {
namespace {

// Criterion-feedback sentences for review-shaped mock output. The pool mixes
// praise, neutral observation and criticism so that downstream sentiment and
// readability numbers vary across reviews.
constexpr std::array<std::string_view, 24> kReviewPool = {
    "The work makes a clear and thoughtful case for its central idea.",
    "The discussion is well organized and easy to follow.",
    "Key terms are introduced, although several definitions remain vague.",
    "The argument would be stronger with concrete evidence from practice.",
    "This section offers an insightful connection between theory and "
    "classroom experience.",
    "Some claims are asserted without support, which weakens the analysis.",
    "The author draws on relevant research to extend the discussion.",
    "Consider adding an example that shows how the idea works in a real "
    "setting.",
    "The reasoning about causes and effects is careful and convincing.",
    "Alternative perspectives are mentioned but not examined in depth.",
    "The proposed application is practical and realistic.",
    "The conclusion is unclear and does not follow from the evidence "
    "presented.",
    "Citations are inconsistent and several sources are missing.",
    "The writing is engaging and the structure supports the argument.",
    "A more critical look at underlying assumptions would improve the work.",
    "The creative transfer of the idea to a new context is impressive.",
    "The section summarizes existing knowledge without adding new insight.",
    "The framework chosen is appropriate and applied consistently.",
    "Important stakeholders are overlooked in the analysis.",
    "The examples are helpful and illustrate the concepts effectively.",
    "The text describes the topic in general terms.",
    "Several paragraphs repeat the same point and could be condensed.",
    "The plan for implementation is detailed and well justified.",
    "The link between the literature and the author's own context is weak.",
};

constexpr std::array<std::string_view, 12> kSummaryPool = {
    "The section introduces the topic and its context.",
    "The author describes prior experience with the issue.",
    "Several research findings are reviewed.",
    "Key concepts are defined and compared.",
    "A theoretical framework is proposed.",
    "Causes and consequences of the problem are discussed.",
    "Different stakeholder perspectives are considered.",
    "A practical strategy for the classroom is outlined.",
    "An innovative application in a new setting is suggested.",
    "The section closes with reflections and open questions.",
    "Evidence from a case study is presented.",
    "Limitations of the approach are acknowledged.",
};

std::uint64_t RequestHash(const CompletionRequest& request) {
  std::string key = request.model_id;
  key.push_back('\x1f');
  key.append(request.prompt);
  key.push_back('\x1f');
  key.append(request.seed ? std::to_string(*request.seed) : "none");
  return text::StableHash(key);
}

template <std::size_t N>
std::vector<std::string_view> Pick(const std::array<std::string_view, N>& pool,
                                   std::size_t count, std::mt19937_64& rng) {
  std::array<std::size_t, N> idx;
  for (std::size_t i = 0; i < N; ++i) idx[i] = i;
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < count && i < N; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (N - i));
    std::swap(idx[i], idx[j]);
    out.push_back(pool[idx[i]]);
  }
  return out;
}

std::string JoinSentences(const std::vector<std::string_view>& sentences) {
  std::string out;
  for (auto s : sentences) {
    if (!out.empty()) out.push_back(' ');
    out.append(s);
  }
  return out;
}

// Cuts `s` to at most `max_chars` code points, backing off to a word break.
std::string TruncateAtWord(const std::string& s, std::size_t max_chars) {
  if (text::CountCodePoints(s) <= max_chars) return s;
  std::size_t bytes = 0;
  for (std::size_t n = 0; n < max_chars && bytes < s.size(); ++n) {
    bytes += text::DecodeAt(s, bytes).length;
  }
  std::string cut = s.substr(0, bytes);
  if (auto space = cut.find_last_of(' '); space != std::string::npos &&
                                          space > 0) {
    cut.resize(space);
  }
  return std::string(text::Trim(cut));
}

}  // namespace

std::int64_t EstimateTokens(std::string_view s) {
  const auto chars = static_cast<std::int64_t>(text::CountCodePoints(s));
  return (chars + 3) / 4;
}

void ValidateRequest(const CompletionRequest& request) {
  if (request.prompt.empty()) {
    throw Error(ErrorCode::kPrecondition, "completion prompt is empty");
  }
  if (request.max_output_tokens < 1) {
    throw Error(ErrorCode::kPrecondition, "max_output_tokens must be >= 1");
  }
  if (!(request.temperature >= 0.0)) {
    throw Error(ErrorCode::kPrecondition, "temperature must be >= 0");
  }
}

std::int64_t ModelBudgets::For(std::string_view model_id) const {
  auto it = per_model.find(model_id);
  return it == per_model.end() ? fallback : it->second;
}

void ModelBudgets::Check(const CompletionRequest& request) const {
  const std::int64_t estimate = EstimateTokens(request.prompt);
  const std::int64_t budget = For(request.model_id);
  if (estimate > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "prompt of ~" + std::to_string(estimate) +
                    " tokens exceeds the " + std::to_string(budget) +
                    "-token budget of model '" + request.model_id + "'");
  }
}

ModelBudgets ModelBudgets::Defaults() {
  ModelBudgets b;
  b.per_model.emplace(kDefaultSummarizerModel, kDefaultSummarizerBudget);
  b.per_model.emplace(kDefaultReviewerModel, kDefaultReviewerBudget);
  b.fallback = kDefaultReviewerBudget;
  return b;
}

// ---------------------------------------------------------------------------

MockBackend::MockBackend(MockOptions options) : options_(std::move(options)) {}

int MockBackend::RatingFor(const CompletionRequest& request) {
  return 1 + static_cast<int>(RequestHash(request) % 5);
}

CompletionResult MockBackend::Complete(const CompletionRequest& request) const {
  ValidateRequest(request);
  options_.budgets.Check(request);

  const std::uint64_t h = RequestHash(request);
  std::mt19937_64 rng(h);
  const std::size_t count = 2 + static_cast<std::size_t>(rng() % 4);

  CompletionResult result;
  if (options_.summarizer_models.contains(request.model_id)) {
    const auto limit =
        static_cast<std::size_t>(request.max_output_tokens) * 4;
    result.text = TruncateAtWord(JoinSentences(Pick(kSummaryPool, count, rng)),
                                 limit);
  } else {
    result.text = "RATING: " + std::to_string(1 + h % 5) + "\n" +
                  JoinSentences(Pick(kReviewPool, count, rng));
  }
  result.prompt_token_estimate = EstimateTokens(request.prompt);
  result.output_token_estimate = EstimateTokens(result.text);
  return result;
}

// ---------------------------------------------------------------------------

RecordingBackend::RecordingBackend(
    std::shared_ptr<const CompletionBackend> inner)
    : inner_(std::move(inner)) {}

CompletionResult RecordingBackend::Complete(
    const CompletionRequest& request) const {
  {
    std::lock_guard lock(mu_);
    requests_.push_back(request);
  }
  return inner_->Complete(request);
}

std::int64_t RecordingBackend::CallCount(std::string_view model_id) const {
  std::lock_guard lock(mu_);
  std::int64_t n = 0;
  for (const auto& r : requests_) n += r.model_id == model_id ? 1 : 0;
  return n;
}

std::int64_t RecordingBackend::TotalCalls() const {
  std::lock_guard lock(mu_);
  return static_cast<std::int64_t>(requests_.size());
}

std::vector<CompletionRequest> RecordingBackend::Requests() const {
  std::lock_guard lock(mu_);
  return requests_;
}

void RecordingBackend::Reset() {
  std::lock_guard lock(mu_);
  requests_.clear();
}

// ---------------------------------------------------------------------------

std::chrono::milliseconds RetryPolicy::DelayBeforeRetry(int retry) const {
  const double ms = static_cast<double>(base_delay_ms) *
                    std::pow(backoff_factor, std::max(0, retry - 1));
  return std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(ms)));
}

void RetryPolicy::Validate() const {
  if (max_attempts < 1) {
    throw Error(ErrorCode::kConfig, "retry max_attempts must be >= 1");
  }
  if (base_delay_ms < 0) {
    throw Error(ErrorCode::kConfig, "retry base_delay_ms must be >= 0");
  }
  if (!(backoff_factor >= 1.0)) {
    throw Error(ErrorCode::kConfig, "retry backoff_factor must be >= 1");
  }
}

Sleeper RealSleeper() {
  return [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

bool IsRetryable(const Error& error) {
  return error.code() == ErrorCode::kRateLimited ||
         error.code() == ErrorCode::kTransport;
}

CompletionResult RunWithRetry(
    const RetryPolicy& policy, const Sleeper& sleep,
    const std::function<CompletionResult()>& attempt) {
  policy.Validate();
  for (int n = 1;; ++n) {
    try {
      return attempt();
    } catch (const Error& e) {
      if (!IsRetryable(e) || n >= policy.max_attempts) throw;
    }
    if (sleep) sleep(policy.DelayBeforeRetry(n));
  }
}

}  // namespace rubriq
