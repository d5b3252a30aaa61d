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

#include "rubriq/analytics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "rubriq/error.h"
#include "rubriq/readability.h"
#include "rubriq/text.h"

namespace rubriq {
namespace {

constexpr std::size_t kElementCount = kReportingElements.size();

using ElementValues = std::array<std::optional<double>, kElementCount>;

double Mean(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

void RequirePaired(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDegenerateInput,
                "vectors differ in length (" + std::to_string(x.size()) +
                    " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) {
    throw Error(ErrorCode::kDegenerateInput, "need at least two pairs");
  }
}

struct CentredSums {
  double xy = 0.0;
  double xx = 0.0;
  double yy = 0.0;
};

CentredSums Centred(std::span<const double> x, std::span<const double> y) {
  const double mx = Mean(x);
  const double my = Mean(y);
  CentredSums s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    s.xy += dx * dy;
    s.xx += dx * dx;
    s.yy += dy * dy;
  }
  return s;
}

std::optional<double> MetricValue(const CriterionNode& node, Metric metric,
                                  const Lexicon& lexicon) {
  switch (metric) {
    case Metric::kRating:
      if (!node.rating) return std::nullopt;
      return static_cast<double>(*node.rating);
    case Metric::kSentimentScore:
      return AnalyzeSentiment(node.narrative, lexicon).score;
    case Metric::kSentimentMagnitude:
      return AnalyzeSentiment(node.narrative, lexicon).magnitude;
  }
  return std::nullopt;
}

std::vector<ElementValues> CollectElementValues(const ReviewCorpus& corpus,
                                                ReviewKind kind, Metric metric,
                                                const Lexicon& lexicon) {
  std::vector<ElementValues> out;
  for (const auto& review : corpus.reviews) {
    if (review.kind != kind) continue;
    std::array<double, kElementCount> sums{};
    std::array<std::size_t, kElementCount> counts{};
    for (const auto& node : review.nodes) {
      const auto* c = std::get_if<CriterionNode>(&node.body);
      if (c == nullptr) continue;
      const Criterion* criterion = corpus.rubric.Find(c->criterion_code);
      if (criterion == nullptr) continue;
      if (auto v = MetricValue(*c, metric, lexicon)) {
        const auto e = static_cast<std::size_t>(criterion->element);
        sums[e] += *v;
        ++counts[e];
      }
    }
    ElementValues values;
    bool any = false;
    for (std::size_t e = 0; e < kElementCount; ++e) {
      if (counts[e] > 0) {
        values[e] = sums[e] / static_cast<double>(counts[e]);
        any = true;
      }
    }
    if (any) out.push_back(values);
  }
  return out;
}

}  // namespace

std::string_view NormalizeModeName(NormalizeMode mode) {
  return mode == NormalizeMode::kMinMax ? "min_max" : "range_divide";
}

std::optional<NormalizeMode> ParseNormalizeMode(std::string_view name) {
  if (name == "min_max") return NormalizeMode::kMinMax;
  if (name == "range_divide") return NormalizeMode::kRangeDivide;
  return std::nullopt;
}

std::vector<double> Normalize(std::span<const double> values,
                              NormalizeMode mode) {
  if (values.empty()) {
    throw Error(ErrorCode::kDegenerateInput, "cannot normalize an empty list");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo;
  const double range = *hi - *lo;
  std::vector<double> out(values.size(), 0.0);
  if (range == 0.0) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = mode == NormalizeMode::kMinMax ? (values[i] - min) / range
                                            : values[i] / range;
  }
  return out;
}

DescriptiveStats Describe(std::span<const double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kDegenerateInput, "cannot describe an empty list");
  }
  DescriptiveStats d;
  d.n = values.size();
  d.mean = Mean(values);
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  d.min = sorted.front();
  d.max = sorted.back();
  const std::size_t mid = d.n / 2;
  d.median = d.n % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
  if (d.n > 1) {
    double ss = 0.0;
    for (double x : values) ss += (x - d.mean) * (x - d.mean);
    d.sd = std::sqrt(ss / static_cast<double>(d.n - 1));
  }
  return d;
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  RequirePaired(x, y);
  const CentredSums s = Centred(x, y);
  if (s.xx == 0.0 || s.yy == 0.0) {
    throw Error(ErrorCode::kDegenerateInput,
                "correlation is undefined for a constant vector");
  }
  return std::clamp(s.xy / std::sqrt(s.xx * s.yy), -1.0, 1.0);
}

double Covariance(std::span<const double> x, std::span<const double> y) {
  RequirePaired(x, y);
  return Centred(x, y).xy / static_cast<double>(x.size() - 1);
}

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kRating: return "rating";
    case Metric::kSentimentScore: return "sentiment_score";
    case Metric::kSentimentMagnitude: return "sentiment_magnitude";
  }
  return "unknown";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  for (Metric m : {Metric::kRating, Metric::kSentimentScore,
                   Metric::kSentimentMagnitude}) {
    if (MetricName(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<ElementStatsRow> ElementTable(
    const ReviewCorpus& corpus, ReviewKind kind, Metric metric,
    const Lexicon& lexicon, std::optional<NormalizeMode> normalization) {
  std::vector<ElementValues> reviews =
      CollectElementValues(corpus, kind, metric, lexicon);
  if (reviews.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "need at least two " + std::string(ReviewKindName(kind)) +
                    " reviews with " + std::string(MetricName(metric)) +
                    " values, found " + std::to_string(reviews.size()));
  }

  if (normalization) {
    std::vector<double> pooled;
    for (const auto& r : reviews) {
      for (const auto& v : r) {
        if (v) pooled.push_back(*v);
      }
    }
    const std::vector<double> scaled = Normalize(pooled, *normalization);
    std::size_t k = 0;
    for (auto& r : reviews) {
      for (auto& v : r) {
        if (v) v = scaled[k++];
      }
    }
  }

  std::vector<double> overall;
  overall.reserve(reviews.size());
  for (const auto& r : reviews) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& v : r) {
      if (v) {
        sum += *v;
        ++n;
      }
    }
    overall.push_back(sum / static_cast<double>(n));
  }

  std::vector<ElementStatsRow> rows;
  for (std::size_t e = 0; e < kElementCount; ++e) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t r = 0; r < reviews.size(); ++r) {
      if (reviews[r][e]) {
        xs.push_back(*reviews[r][e]);
        ys.push_back(overall[r]);
      }
    }
    if (xs.empty()) continue;
    const DescriptiveStats d = Describe(xs);
    ElementStatsRow row;
    row.element = kReportingElements[e];
    row.n = d.n;
    row.value = d.mean;
    row.median = d.median;
    row.sd = d.sd;
    if (xs.size() >= 2) {
      row.covariance = Covariance(xs, ys);
      try {
        row.correlation = Pearson(xs, ys);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kDegenerateInput) throw;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

double OverallAverage(const std::vector<ElementStatsRow>& rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kInsufficientData, "no element rows to average");
  }
  double sum = 0.0;
  for (const auto& r : rows) sum += r.value;
  return sum / static_cast<double>(rows.size());
}

std::size_t ReviewWordCount(const ReviewMap& review) {
  return CountWords(review.Text());
}

CorpusSummary SummarizeCorpus(const ReviewCorpus& corpus) {
  std::map<std::string, CorpusSummaryRow> groups;
  auto row_for = [&](const std::string& group) -> CorpusSummaryRow& {
    auto& row = groups[group];
    row.group = group;
    return row;
  };

  for (const auto& work : corpus.works) {
    auto& row = row_for(corpus.GroupOf(work.id));
    ++row.works;
    row.work_words += CountWords(work);
  }
  for (const auto& review : corpus.reviews) {
    auto& row = row_for(corpus.GroupOf(review.work_id));
    const std::size_t words = ReviewWordCount(review);
    if (review.kind == ReviewKind::kPeer) {
      ++row.peer_reviews;
      row.peer_words += words;
    } else if (review.kind == ReviewKind::kAI) {
      ++row.ai_reviews;
      row.ai_words += words;
    }
  }

  auto ratio = [](std::size_t total, std::size_t count) {
    return count == 0 ? 0.0
                      : static_cast<double>(total) / static_cast<double>(count);
  };

  CorpusSummary summary;
  CorpusSummaryRow& total = summary.total;
  total.group = "Total or Average";
  double work_avg_sum = 0.0, peer_avg_sum = 0.0, ai_avg_sum = 0.0;
  std::size_t work_groups = 0, peer_groups = 0, ai_groups = 0;

  for (auto& [name, row] : groups) {
    row.avg_work_words = ratio(row.work_words, row.works);
    row.avg_peer_words = ratio(row.peer_words, row.peer_reviews);
    row.avg_ai_words = ratio(row.ai_words, row.ai_reviews);
    row.peer_words_per_criterion = row.avg_peer_words / kPerCriterionDivisor;
    row.ai_words_per_criterion = row.avg_ai_words / kPerCriterionDivisor;

    total.works += row.works;
    total.work_words += row.work_words;
    total.peer_reviews += row.peer_reviews;
    total.peer_words += row.peer_words;
    total.ai_reviews += row.ai_reviews;
    total.ai_words += row.ai_words;
    if (row.works > 0) {
      work_avg_sum += row.avg_work_words;
      ++work_groups;
    }
    if (row.peer_reviews > 0) {
      peer_avg_sum += row.avg_peer_words;
      ++peer_groups;
    }
    if (row.ai_reviews > 0) {
      ai_avg_sum += row.avg_ai_words;
      ++ai_groups;
    }
    summary.groups.push_back(row);
  }

  total.avg_work_words = work_groups ? work_avg_sum / work_groups : 0.0;
  total.avg_peer_words = peer_groups ? peer_avg_sum / peer_groups : 0.0;
  total.avg_ai_words = ai_groups ? ai_avg_sum / ai_groups : 0.0;
  total.peer_words_per_criterion = total.avg_peer_words / kPerCriterionDivisor;
  total.ai_words_per_criterion = total.avg_ai_words / kPerCriterionDivisor;
  return summary;
}

const MetricTable* ComparisonReport::Table(Metric metric) const {
  for (const auto& t : tables) {
    if (t.metric == metric) return &t;
  }
  return nullptr;
}

ComparisonReport Compare(const ReviewCorpus& corpus, const Lexicon& lexicon,
                         std::optional<NormalizeMode> normalization) {
  ComparisonReport report;
  report.normalization = normalization;
  report.corpus = SummarizeCorpus(corpus);

  for (Metric metric : {Metric::kRating, Metric::kSentimentScore,
                        Metric::kSentimentMagnitude}) {
    MetricTable table;
    table.metric = metric;
    table.human =
        ElementTable(corpus, ReviewKind::kPeer, metric, lexicon, normalization);
    table.human_average = OverallAverage(table.human);
    table.ai =
        ElementTable(corpus, ReviewKind::kAI, metric, lexicon, normalization);
    table.ai_average = OverallAverage(table.ai);
    report.tables.push_back(std::move(table));
  }

  auto grades = [&](ReviewKind kind) -> std::optional<DescriptiveStats> {
    std::vector<double> values;
    for (const auto& review : corpus.reviews) {
      if (review.kind != kind) continue;
      const std::string body = review.Text();
      if (CountWords(body) == 0) continue;
      values.push_back(CompositeGrade(body).composite);
    }
    if (values.empty()) return std::nullopt;
    return Describe(values);
  };
  report.human_readability = grades(ReviewKind::kPeer);
  report.ai_readability = grades(ReviewKind::kAI);
  return report;
}

}  // namespace rubriq
