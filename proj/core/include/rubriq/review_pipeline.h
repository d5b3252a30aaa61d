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

#ifndef RUBRIQ_REVIEW_PIPELINE_H_
#define RUBRIQ_REVIEW_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rubriq/corpus.h"
#include "rubriq/llm_backend.h"

namespace rubriq {

inline constexpr std::string_view kDefaultSystemInstructions =
    "You are an experienced reviewer giving formative feedback on a "
    "student's extended written work. Be specific, constructive and honest, "
    "and refer to the text you are given.";

inline constexpr std::string_view kDefaultSummaryInstructions =
    "Summarize the following section of a student's work in a few "
    "sentences. Keep the author's main claims, evidence and examples.";

inline constexpr std::string_view kDefaultEpistemicPreamble =
    "Review the work against one criterion of a rubric grounded in a theory "
    "of knowledge. Frame your feedback in terms of the kind of "
    "knowledge-making the criterion describes, and use its level "
    "descriptors to judge how well the work performs.";

inline constexpr std::string_view kDefaultEmpiricalNotice =
    "Only comment on facts, claims and examples that appear in the supplied "
    "text. Do not introduce outside facts or invent sources.";

inline constexpr std::string_view kClosingInstruction =
    "Respond with a first line of the form RATING: <1-5> giving the level "
    "that best fits the work, then write your narrative review.";

struct OntologyTerm {
  std::string term;
  std::string definition;

  friend bool operator==(const OntologyTerm&, const OntologyTerm&) = default;
};

// Recalibration frames wrapped around every criterion prompt.
struct FrameConfig {
  // Frames the criterion in terms of the theory of knowledge behind it.
  std::string epistemic_preamble{kDefaultEpistemicPreamble};
  // Restricts critique to facts present in the supplied text.
  std::string empirical_notice{kDefaultEmpiricalNotice};
  // Disciplinary glossary injected verbatim when present.
  std::optional<std::vector<OntologyTerm>> ontology_terms;
};

// Reads `term<TAB>definition` lines. Blank lines and '#' comments are skipped.
// Throws Error(kMalformedLine) or Error(kConfig) on a repeated term.
std::vector<OntologyTerm> ParseOntologyTerms(std::string_view tsv);

struct PipelineConfig {
  std::string summarizer_model{kDefaultSummarizerModel};
  std::string reviewer_model{kDefaultReviewerModel};
  std::string system_instructions{kDefaultSystemInstructions};
  std::string summary_instructions{kDefaultSummaryInstructions};
  bool always_summarize = false;
  std::int64_t context_budget_tokens = kDefaultReviewerBudget;
  int parallelism = 4;
  FrameConfig frames;
  // Store criterion nodes without a rating instead of failing the review
  // when a response carries no usable RATING line.
  bool lenient = false;
  std::optional<std::int64_t> seed;
  double temperature = 0.0;
  std::int64_t review_max_output_tokens = 1024;

  // Throws Error(kConfig).
  void Validate() const;
};

inline constexpr int kMaxSummaryRounds = 3;

struct WorkSummary {
  std::string work_id;
  std::vector<std::string> section_summaries;
  std::string concatenated;  // summaries joined with blank lines
  int rounds = 0;            // 0 when the text was passed through
};

// Budget-gated summarization. When the full text fits in
// context_budget_tokens - reserved_tokens (and always_summarize is off) each
// section passes through verbatim. Otherwise every section is summarized
// once per round, up to kMaxSummaryRounds rounds, until the concatenation
// fits. Throws Error(kBudgetUnreachable) after the last round.
WorkSummary SummarizeWork(const Work& work, const CompletionBackend& backend,
                          const PipelineConfig& cfg,
                          std::int64_t reserved_tokens = 0);

std::string BuildReviewPrompt(const Criterion& criterion,
                              const WorkSummary& summary,
                              const PipelineConfig& cfg);

struct CriterionResponse {
  int rating = 0;
  std::string narrative;
};

// The first line of the form "RATING: k" supplies the rating; the rest of
// the text, trimmed, is the narrative. Throws Error(kRatingUnparseable).
CriterionResponse ParseCriterionResponse(std::string_view text);

// One criterion node per rubric criterion, in rubric order. Criterion
// requests fan out over up to cfg.parallelism threads.
ReviewMap GenerateAiReview(const Work& work, const Rubric& rubric,
                           const CompletionBackend& backend,
                           const PipelineConfig& cfg);

}  // namespace rubriq

#endif  // RUBRIQ_REVIEW_PIPELINE_H_
