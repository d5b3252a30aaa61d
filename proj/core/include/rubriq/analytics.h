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

#ifndef RUBRIQ_ANALYTICS_H_
#define RUBRIQ_ANALYTICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rubriq/corpus.h"
#include "rubriq/sentiment.h"

namespace rubriq {

// ---------------------------------------------------------------------------
// Statistics primitives. Standard deviation and covariance use the sample
// (n - 1) denominator.

enum class NormalizeMode {
  kMinMax,       // (x - min) / (max - min)
  kRangeDivide,  // x / (max - min)
};

std::string_view NormalizeModeName(NormalizeMode mode);
std::optional<NormalizeMode> ParseNormalizeMode(std::string_view name);

// Constant input maps to all zeros under either mode. Throws
// Error(kDegenerateInput) on empty input.
std::vector<double> Normalize(std::span<const double> values,
                              NormalizeMode mode = NormalizeMode::kMinMax);

struct DescriptiveStats {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const DescriptiveStats&,
                         const DescriptiveStats&) = default;
};

// Throws Error(kDegenerateInput) on empty input.
DescriptiveStats Describe(std::span<const double> values);

// Throws Error(kDegenerateInput) for n < 2, mismatched lengths, or (pearson)
// a constant vector.
double Pearson(std::span<const double> x, std::span<const double> y);
double Covariance(std::span<const double> x, std::span<const double> y);

// ---------------------------------------------------------------------------
// Element tables

enum class Metric { kRating, kSentimentScore, kSentimentMagnitude };

std::string_view MetricName(Metric metric);
std::optional<Metric> ParseMetric(std::string_view name);

struct ElementStatsRow {
  ReportingElement element = ReportingElement::kExperiential;
  std::size_t n = 0;    // reviews contributing a value
  double value = 0.0;   // mean over reviews
  double median = 0.0;
  double sd = 0.0;
  // Against the per-review overall average; absent when undefined
  // (fewer than two values, or a constant vector for correlation).
  std::optional<double> correlation;
  std::optional<double> covariance;

  friend bool operator==(const ElementStatsRow&,
                         const ElementStatsRow&) = default;
};

// Per-review element values: criterion values averaged within each element.
// Review overall = mean of its available element values. Correlation and
// covariance pair each element's values with the overall of the same
// reviews. When `normalization` is set, the pooled element values of all
// reviews are rescaled by the pooled range before any statistic. Rows are
// emitted in element order for elements with at least one value. Throws
// Error(kInsufficientData) with fewer than two reviews of `kind`.
std::vector<ElementStatsRow> ElementTable(
    const ReviewCorpus& corpus, ReviewKind kind, Metric metric,
    const Lexicon& lexicon,
    std::optional<NormalizeMode> normalization = std::nullopt);

// Mean of the row values.
double OverallAverage(const std::vector<ElementStatsRow>& rows);

// ---------------------------------------------------------------------------
// Corpus summary

// Per-criterion averages divide review length by eight.
inline constexpr double kPerCriterionDivisor = 8.0;

std::size_t ReviewWordCount(const ReviewMap& review);

struct CorpusSummaryRow {
  std::string group;
  std::size_t works = 0;
  std::size_t work_words = 0;
  double avg_work_words = 0.0;
  std::size_t peer_reviews = 0;
  std::size_t peer_words = 0;
  double avg_peer_words = 0.0;
  std::size_t ai_reviews = 0;
  std::size_t ai_words = 0;
  double avg_ai_words = 0.0;
  double peer_words_per_criterion = 0.0;
  double ai_words_per_criterion = 0.0;

  friend bool operator==(const CorpusSummaryRow&,
                         const CorpusSummaryRow&) = default;
};

struct CorpusSummary {
  std::vector<CorpusSummaryRow> groups;  // sorted by group label
  // Counts are summed; each average is the mean of the group averages over
  // the groups that have items of that kind.
  CorpusSummaryRow total;

  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

CorpusSummary SummarizeCorpus(const ReviewCorpus& corpus);

// ---------------------------------------------------------------------------
// Comparison report

struct MetricTable {
  Metric metric = Metric::kRating;
  std::vector<ElementStatsRow> human;
  double human_average = 0.0;
  std::vector<ElementStatsRow> ai;
  double ai_average = 0.0;

  friend bool operator==(const MetricTable&, const MetricTable&) = default;
};

struct ComparisonReport {
  std::optional<NormalizeMode> normalization;
  CorpusSummary corpus;
  std::vector<MetricTable> tables;  // rating, sentiment score, magnitude
  // Composite grade level of each review's text.
  std::optional<DescriptiveStats> human_readability;
  std::optional<DescriptiveStats> ai_readability;

  const MetricTable* Table(Metric metric) const;

  friend bool operator==(const ComparisonReport&,
                         const ComparisonReport&) = default;
};

// Human = peer reviews. Throws Error(kInsufficientData) unless the corpus
// has at least two peer and two AI reviews.
ComparisonReport Compare(
    const ReviewCorpus& corpus, const Lexicon& lexicon,
    std::optional<NormalizeMode> normalization = std::nullopt);

// Aligned plain-text tables: corpus extent, ratings, readability, sentiment
// score, sentiment magnitude.
std::string RenderReportText(const ComparisonReport& report);
std::string ReportToJson(const ComparisonReport& report);
// Throws Error(kSerialization).
ComparisonReport ReportFromJson(std::string_view json);

}  // namespace rubriq

#endif  // RUBRIQ_ANALYTICS_H_
