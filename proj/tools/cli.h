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

#ifndef RUBRIQ_TOOLS_CLI_H_
#define RUBRIQ_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rubriq/analytics.h"
#include "rubriq/corpus.h"
#include "rubriq/llm_backend.h"
#include "rubriq/review_pipeline.h"
#include "rubriq/sentiment.h"

namespace rubriq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

enum class BackendKind { kMock, kRemote };

struct CliConfig {
  BackendKind backend = BackendKind::kMock;
  PipelineConfig pipeline;
  SentimentThresholds thresholds;
  std::optional<NormalizeMode> normalization;
  // Remote adapter settings; the API key only ever comes from the
  // environment.
  std::string endpoint;
  std::string text_path = "/choices/0/text";
  RetryPolicy retry;
  std::int64_t timeout_ms = 60000;
  std::string lexicon_path;
  std::string corpus_path;
  std::string rubric_path;
  std::string ontology_path;
};

// Parses the JSON config file format; unknown keys are rejected.
// Throws Error(kConfig).
CliConfig ParseCliConfig(std::string_view json);

struct DemoOptions {
  int works = 6;
  int groups = 2;
  int peer_reviews_per_work = 2;
  std::int64_t seed = 7;
};

// Synthetic corpus: works assembled from canned sentences, peer reviews from
// a mock "peer" persona, and AI reviews from the review pipeline.
ReviewCorpus GenerateDemoCorpus(const DemoOptions& options,
                                const CompletionBackend& backend,
                                const PipelineConfig& pipeline);

// argv[0] is the program name. Data goes to `out` (or --out), diagnostics to
// `err`. Returns 0 on success, 1 on a domain error, 2 on a usage error.
int Run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace rubriq::cli

#endif  // RUBRIQ_TOOLS_CLI_H_
