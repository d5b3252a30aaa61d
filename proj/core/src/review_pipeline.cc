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

#include "rubriq/review_pipeline.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <unordered_set>

#include "parallel.h"
#include "rubriq/error.h"
#include "rubriq/text.h"

namespace rubriq {
namespace {

constexpr std::string_view kBlankLine = "\n\n";
constexpr std::string_view kRatingPrefix = "RATING:";

std::int64_t ConcatenatedTokens(const std::vector<std::string>& parts) {
  return EstimateTokens(text::Join(parts, kBlankLine));
}

std::string SummaryPrompt(const PipelineConfig& cfg, const Section& section,
                          const std::string& body) {
  std::string prompt = cfg.summary_instructions;
  if (!section.heading.empty()) {
    prompt += "\n\nSection: ";
    prompt += section.heading;
  }
  prompt += "\n\n";
  prompt += body;
  return prompt;
}

void AppendBlock(std::string& out, std::string_view block) {
  if (block.empty()) return;
  if (!out.empty()) out.append(kBlankLine);
  out.append(block);
}

std::string Hex32(std::uint64_t h) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(h >> 32));
  return buf;
}

}  // namespace

std::vector<OntologyTerm> ParseOntologyTerms(std::string_view tsv) {
  std::vector<OntologyTerm> terms;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  for (std::string_view line : text::SplitLines(tsv)) {
    ++line_no;
    if (text::IsBlank(line) || text::Trim(line).front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "ontology line " + std::to_string(line_no) +
                      " has no tab separator");
    }
    OntologyTerm t{std::string(text::Trim(line.substr(0, tab))),
                   std::string(text::Trim(line.substr(tab + 1)))};
    if (t.term.empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  "ontology line " + std::to_string(line_no) +
                      " has an empty term");
    }
    if (!seen.insert(t.term).second) {
      throw Error(ErrorCode::kConfig, "ontology term '" + t.term +
                                          "' is defined more than once");
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

void PipelineConfig::Validate() const {
  if (parallelism < 1) {
    throw Error(ErrorCode::kConfig, "parallelism must be >= 1");
  }
  if (context_budget_tokens < 64) {
    throw Error(ErrorCode::kConfig, "context_budget_tokens must be >= 64");
  }
  if (review_max_output_tokens < 1) {
    throw Error(ErrorCode::kConfig, "review_max_output_tokens must be >= 1");
  }
  if (summarizer_model.empty() || reviewer_model.empty()) {
    throw Error(ErrorCode::kConfig, "model ids must not be empty");
  }
  if (frames.ontology_terms) {
    std::unordered_set<std::string> seen;
    for (const auto& t : *frames.ontology_terms) {
      if (!seen.insert(t.term).second) {
        throw Error(ErrorCode::kConfig, "ontology term '" + t.term +
                                            "' is defined more than once");
      }
    }
  }
}

WorkSummary SummarizeWork(const Work& work, const CompletionBackend& backend,
                          const PipelineConfig& cfg,
                          std::int64_t reserved_tokens) {
  cfg.Validate();
  if (work.sections.empty()) {
    throw Error(ErrorCode::kPrecondition, "work '" + work.id +
                                              "' has no sections");
  }
  const std::int64_t budget = cfg.context_budget_tokens - reserved_tokens;
  if (budget < 1) {
    throw Error(ErrorCode::kBudgetUnreachable,
                "prompt scaffolding (~" + std::to_string(reserved_tokens) +
                    " tokens) leaves no room in the " +
                    std::to_string(cfg.context_budget_tokens) +
                    "-token budget");
  }

  WorkSummary summary;
  summary.work_id = work.id;
  summary.section_summaries.reserve(work.sections.size());
  for (const auto& s : work.sections) {
    summary.section_summaries.push_back(s.Text());
  }

  const bool fits = ConcatenatedTokens(summary.section_summaries) <= budget;
  if (!fits || cfg.always_summarize) {
    const std::size_t n = work.sections.size();
    // Each section gets an equal share of the budget, net of separators.
    const std::int64_t separator_chars =
        static_cast<std::int64_t>(kBlankLine.size() * (n > 0 ? n - 1 : 0));
    const std::int64_t share = std::max<std::int64_t>(
        1, (budget * 4 - separator_chars) / 4 / static_cast<std::int64_t>(n));

    bool done = false;
    for (int round = 1; round <= kMaxSummaryRounds && !done; ++round) {
      std::vector<std::string> next(n);
      internal::ParallelFor(n, cfg.parallelism, [&](std::size_t i) {
        CompletionRequest request;
        request.model_id = cfg.summarizer_model;
        request.prompt = SummaryPrompt(cfg, work.sections[i],
                                       summary.section_summaries[i]);
        request.max_output_tokens = share;
        request.temperature = cfg.temperature;
        request.seed = cfg.seed;
        next[i] = std::string(text::Trim(backend.Complete(request).text));
      });
      summary.section_summaries = std::move(next);
      summary.rounds = round;
      done = ConcatenatedTokens(summary.section_summaries) <= budget;
    }
    if (!done) {
      throw Error(ErrorCode::kBudgetUnreachable,
                  "summary of work '" + work.id + "' still exceeds " +
                      std::to_string(budget) + " tokens after " +
                      std::to_string(kMaxSummaryRounds) + " rounds");
    }
  }
  summary.concatenated = text::Join(summary.section_summaries, kBlankLine);
  return summary;
}

std::string BuildReviewPrompt(const Criterion& criterion,
                              const WorkSummary& summary,
                              const PipelineConfig& cfg) {
  std::string prompt;
  AppendBlock(prompt, cfg.system_instructions);
  AppendBlock(prompt, cfg.frames.epistemic_preamble);

  std::string block = "Criterion: " + criterion.name + " (" + criterion.code +
                      ")\nDefinition: " + criterion.definition;
  if (!criterion.reviewer_advice.empty()) {
    block += "\nAdvice to reviewers: " + criterion.reviewer_advice;
  }
  if (!criterion.marker_words.empty()) {
    block += "\nMarker words: " + text::Join(criterion.marker_words, ", ");
  }
  block += "\nRating levels:";
  for (std::size_t k = 0; k < kLevelCount; ++k) {
    block += "\n" + std::to_string(k + 1) + ". " +
             criterion.level_descriptors[k];
  }
  AppendBlock(prompt, block);

  AppendBlock(prompt, cfg.frames.empirical_notice);

  if (cfg.frames.ontology_terms && !cfg.frames.ontology_terms->empty()) {
    std::string glossary = "Glossary:";
    for (const auto& t : *cfg.frames.ontology_terms) {
      glossary += "\n- " + t.term + ": " + t.definition;
    }
    AppendBlock(prompt, glossary);
  }

  AppendBlock(prompt, "Work summary:\n" + summary.concatenated);
  AppendBlock(prompt, kClosingInstruction);
  return prompt;
}

CriterionResponse ParseCriterionResponse(std::string_view response) {
  const auto lines = text::SplitLines(response);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = text::Trim(lines[i]);
    if (!line.starts_with(kRatingPrefix)) continue;
    const std::string_view value = text::Trim(line.substr(kRatingPrefix.size()));
    int k = 0;
    const auto [end, ec] =
        std::from_chars(value.data(), value.data() + value.size(), k);
    if (ec != std::errc() || end != value.data() + value.size()) continue;
    if (k < kMinRating || k > kMaxRating) {
      throw Error(ErrorCode::kRatingUnparseable,
                  "rating " + std::to_string(k) + " is outside 1..5");
    }
    std::vector<std::string> rest;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j != i) rest.emplace_back(lines[j]);
    }
    return {k, std::string(text::Trim(text::Join(rest, "\n")))};
  }
  throw Error(ErrorCode::kRatingUnparseable, "response has no RATING line");
}

ReviewMap GenerateAiReview(const Work& work, const Rubric& rubric,
                           const CompletionBackend& backend,
                           const PipelineConfig& cfg) {
  if (rubric.criteria.empty()) {
    throw Error(ErrorCode::kPrecondition, "rubric '" + rubric.id +
                                              "' has no criteria");
  }
  cfg.Validate();

  // Reserve room for the largest criterion scaffold so every prompt fits.
  const WorkSummary empty;
  std::int64_t reserved = 0;
  for (const auto& c : rubric.criteria) {
    reserved = std::max(reserved, EstimateTokens(BuildReviewPrompt(c, empty, cfg)));
  }
  const WorkSummary summary = SummarizeWork(work, backend, cfg, reserved);

  std::vector<Node> nodes(rubric.criteria.size());
  internal::ParallelFor(rubric.criteria.size(), cfg.parallelism,
                        [&](std::size_t i) {
    const Criterion& criterion = rubric.criteria[i];
    CompletionRequest request;
    request.model_id = cfg.reviewer_model;
    request.prompt = BuildReviewPrompt(criterion, summary, cfg);
    request.max_output_tokens = cfg.review_max_output_tokens;
    request.temperature = cfg.temperature;
    request.seed = cfg.seed;
    const CompletionResult result = backend.Complete(request);

    CriterionNode node{criterion.code, std::nullopt, {}};
    try {
      auto parsed = ParseCriterionResponse(result.text);
      node.rating = parsed.rating;
      node.narrative = std::move(parsed.narrative);
    } catch (const Error& e) {
      if (!cfg.lenient || e.code() != ErrorCode::kRatingUnparseable) throw;
      node.narrative = std::string(text::Trim(result.text));
    }
    nodes[i] = Node{"criterion:" + criterion.code, std::move(node)};
  });

  std::string key = work.id + '\x1f' + rubric.id + '\x1f' + cfg.reviewer_model +
                    '\x1f' + (cfg.seed ? std::to_string(*cfg.seed) : "none");

  ReviewMap map;
  map.id = "ai-" + work.id + "-" + Hex32(text::StableHash(key));
  map.work_id = work.id;
  map.rubric_id = rubric.id;
  map.kind = ReviewKind::kAI;
  map.reviewer_alias = "ai:" + cfg.reviewer_model;
  map.nodes = std::move(nodes);
  return map;
}

}  // namespace rubriq
