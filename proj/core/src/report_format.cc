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

#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "rubriq/analytics.h"
#include "rubriq/error.h"

namespace rubriq {
namespace {

using ordered_json = nlohmann::ordered_json;

// 309506 -> "309,506"
std::string Thousands(double value) {
  const long long n = std::llround(value);
  std::string digits = std::to_string(n < 0 ? -n : n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return n < 0 ? "-" + out : out;
}

std::string Fixed(std::optional<double> v) {
  return v ? fmt::format("{:.2f}", *v) : "n/a";
}

std::string_view MetricTitle(Metric metric) {
  switch (metric) {
    case Metric::kRating: return "Ratings on review criteria";
    case Metric::kSentimentScore: return "Sentiment score on review criteria";
    case Metric::kSentimentMagnitude:
      return "Sentiment magnitude on review criteria";
  }
  return "";
}

std::string_view MetricColumn(Metric metric) {
  switch (metric) {
    case Metric::kRating: return "Score";
    case Metric::kSentimentScore: return "Sentiment";
    case Metric::kSentimentMagnitude: return "Magnitude";
  }
  return "";
}

const ElementStatsRow* FindRow(const std::vector<ElementStatsRow>& rows,
                               ReportingElement e) {
  for (const auto& r : rows) {
    if (r.element == e) return &r;
  }
  return nullptr;
}

void RenderCorpus(std::string& out, const CorpusSummary& summary) {
  out += "Extent of the textual corpus\n";
  out += fmt::format("{:<20} {:>6} {:>12} {:>9} {:>7} {:>11} {:>9} {:>7} "
                     "{:>11} {:>9}\n",
                     "Group", "Works", "Work words", "Avg/work", "Peer",
                     "Peer words", "Avg/peer", "AI", "AI words", "Avg/AI");
  auto line = [&](const CorpusSummaryRow& r) {
    out += fmt::format(
        "{:<20} {:>6} {:>12} {:>9} {:>7} {:>11} {:>9} {:>7} {:>11} {:>9}\n",
        r.group, r.works, Thousands(static_cast<double>(r.work_words)),
        Thousands(r.avg_work_words), r.peer_reviews,
        Thousands(static_cast<double>(r.peer_words)),
        Thousands(r.avg_peer_words), r.ai_reviews,
        Thousands(static_cast<double>(r.ai_words)), Thousands(r.avg_ai_words));
  };
  for (const auto& r : summary.groups) line(r);
  line(summary.total);
  out += fmt::format("Words per criterion: peer {:.1f}, AI {:.1f}\n",
                     summary.total.peer_words_per_criterion,
                     summary.total.ai_words_per_criterion);
}

void RenderMetric(std::string& out, const MetricTable& table) {
  out += MetricTitle(table.metric);
  out += "\n";
  constexpr std::string_view kCells = "{:>9} {:>13} {:>11} {:>10}";
  const auto header = fmt::format(fmt::runtime(kCells), MetricColumn(table.metric),
                                  "Median (SD)", "Correlation", "Covariance");
  out += fmt::format("{:<15} {:<46} {:<46}\n", "", "Human review",
                     "AI review");
  out += fmt::format("{:<15} {}   {}\n", "Element", header, header);

  auto cells = [&](const ElementStatsRow* r) {
    if (r == nullptr) {
      return fmt::format(fmt::runtime(kCells), "-", "-", "-", "-");
    }
    return fmt::format(fmt::runtime(kCells), Fixed(r->value),
                       fmt::format("{:.2f} ({:.2f})", r->median, r->sd),
                       Fixed(r->correlation), Fixed(r->covariance));
  };
  for (ReportingElement e : kReportingElements) {
    const auto* h = FindRow(table.human, e);
    const auto* a = FindRow(table.ai, e);
    if (h == nullptr && a == nullptr) continue;
    out += fmt::format("{:<15} {}   {}\n", ElementName(e), cells(h), cells(a));
  }
  auto average = [&](double v) {
    return fmt::format(fmt::runtime(kCells), fmt::format("{:.2f}", v), "-",
                       "-", "-");
  };
  out += fmt::format("{:<15} {}   {}\n", "Average",
                     average(table.human_average), average(table.ai_average));
}

void RenderReadability(std::string& out, const ComparisonReport& report) {
  out += "Readability grade level (mean of Flesch-Kincaid, Coleman-Liau, "
         "ARI)\n";
  out += fmt::format("{:<20} {:>12} {:>12}\n", "", "Human review",
                     "AI review");
  auto cell = [](const std::optional<DescriptiveStats>& d, auto field) {
    return d ? fmt::format("{:.2f}", field(*d)) : std::string("n/a");
  };
  const auto& h = report.human_readability;
  const auto& a = report.ai_readability;
  auto row = [&](std::string_view label, auto field) {
    out += fmt::format("{:<20} {:>12} {:>12}\n", label, cell(h, field),
                       cell(a, field));
  };
  row("Mean", [](const DescriptiveStats& d) { return d.mean; });
  row("Median", [](const DescriptiveStats& d) { return d.median; });
  row("Maximum", [](const DescriptiveStats& d) { return d.max; });
  row("Standard Deviation", [](const DescriptiveStats& d) { return d.sd; });
}

// JSON ----------------------------------------------------------------------

ordered_json OptionalNumber(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json CorpusRowJson(const CorpusSummaryRow& r) {
  ordered_json j;
  j["group"] = r.group;
  j["works"] = r.works;
  j["work_words"] = r.work_words;
  j["avg_work_words"] = r.avg_work_words;
  j["peer_reviews"] = r.peer_reviews;
  j["peer_words"] = r.peer_words;
  j["avg_peer_words"] = r.avg_peer_words;
  j["ai_reviews"] = r.ai_reviews;
  j["ai_words"] = r.ai_words;
  j["avg_ai_words"] = r.avg_ai_words;
  j["peer_words_per_criterion"] = r.peer_words_per_criterion;
  j["ai_words_per_criterion"] = r.ai_words_per_criterion;
  return j;
}

ordered_json RowsJson(const std::vector<ElementStatsRow>& rows,
                      double average) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["element"] = ElementName(r.element);
    row["n"] = r.n;
    row["value"] = r.value;
    row["median"] = r.median;
    row["sd"] = r.sd;
    row["correlation"] = OptionalNumber(r.correlation);
    row["covariance"] = OptionalNumber(r.covariance);
    j["rows"].push_back(std::move(row));
  }
  j["average"] = average;
  return j;
}

ordered_json StatsJson(const std::optional<DescriptiveStats>& d) {
  if (!d) return nullptr;
  ordered_json j;
  j["n"] = d->n;
  j["mean"] = d->mean;
  j["median"] = d->median;
  j["sd"] = d->sd;
  j["min"] = d->min;
  j["max"] = d->max;
  return j;
}

std::optional<double> ReadOptional(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

CorpusSummaryRow CorpusRowFrom(const nlohmann::json& j) {
  CorpusSummaryRow r;
  r.group = j.at("group").get<std::string>();
  r.works = j.at("works").get<std::size_t>();
  r.work_words = j.at("work_words").get<std::size_t>();
  r.avg_work_words = j.at("avg_work_words").get<double>();
  r.peer_reviews = j.at("peer_reviews").get<std::size_t>();
  r.peer_words = j.at("peer_words").get<std::size_t>();
  r.avg_peer_words = j.at("avg_peer_words").get<double>();
  r.ai_reviews = j.at("ai_reviews").get<std::size_t>();
  r.ai_words = j.at("ai_words").get<std::size_t>();
  r.avg_ai_words = j.at("avg_ai_words").get<double>();
  r.peer_words_per_criterion = j.at("peer_words_per_criterion").get<double>();
  r.ai_words_per_criterion = j.at("ai_words_per_criterion").get<double>();
  return r;
}

std::vector<ElementStatsRow> RowsFrom(const nlohmann::json& j,
                                      double& average) {
  std::vector<ElementStatsRow> rows;
  for (const auto& item : j.at("rows")) {
    ElementStatsRow r;
    const auto name = item.at("element").get<std::string>();
    auto element = ParseElement(name);
    if (!element) {
      throw Error(ErrorCode::kSerialization, "unknown element '" + name + "'");
    }
    r.element = *element;
    r.n = item.at("n").get<std::size_t>();
    r.value = item.at("value").get<double>();
    r.median = item.at("median").get<double>();
    r.sd = item.at("sd").get<double>();
    r.correlation = ReadOptional(item.at("correlation"));
    r.covariance = ReadOptional(item.at("covariance"));
    rows.push_back(r);
  }
  average = j.at("average").get<double>();
  return rows;
}

std::optional<DescriptiveStats> StatsFrom(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  DescriptiveStats d;
  d.n = j.at("n").get<std::size_t>();
  d.mean = j.at("mean").get<double>();
  d.median = j.at("median").get<double>();
  d.sd = j.at("sd").get<double>();
  d.min = j.at("min").get<double>();
  d.max = j.at("max").get<double>();
  return d;
}

}  // namespace

std::string RenderReportText(const ComparisonReport& report) {
  std::string out;
  if (report.normalization) {
    out += fmt::format("Normalization: {}\n\n",
                       NormalizeModeName(*report.normalization));
  }
  RenderCorpus(out, report.corpus);
  if (const auto* t = report.Table(Metric::kRating)) {
    out += "\n";
    RenderMetric(out, *t);
  }
  out += "\n";
  RenderReadability(out, report);
  for (Metric m : {Metric::kSentimentScore, Metric::kSentimentMagnitude}) {
    if (const auto* t = report.Table(m)) {
      out += "\n";
      RenderMetric(out, *t);
    }
  }
  return out;
}

std::string ReportToJson(const ComparisonReport& report) {
  ordered_json j;
  j["normalization"] =
      report.normalization
          ? ordered_json(std::string(NormalizeModeName(*report.normalization)))
          : ordered_json(nullptr);
  ordered_json corpus;
  corpus["groups"] = ordered_json::array();
  for (const auto& r : report.corpus.groups) {
    corpus["groups"].push_back(CorpusRowJson(r));
  }
  corpus["total"] = CorpusRowJson(report.corpus.total);
  j["corpus"] = std::move(corpus);
  j["tables"] = ordered_json::array();
  for (const auto& t : report.tables) {
    ordered_json table;
    table["metric"] = MetricName(t.metric);
    table["human"] = RowsJson(t.human, t.human_average);
    table["ai"] = RowsJson(t.ai, t.ai_average);
    j["tables"].push_back(std::move(table));
  }
  j["readability"]["human"] = StatsJson(report.human_readability);
  j["readability"]["ai"] = StatsJson(report.ai_readability);
  return j.dump(2) + "\n";
}

ComparisonReport ReportFromJson(std::string_view source) {
  try {
    const auto j = nlohmann::json::parse(source);
    ComparisonReport report;
    if (const auto& n = j.at("normalization"); !n.is_null()) {
      const auto name = n.get<std::string>();
      report.normalization = ParseNormalizeMode(name);
      if (!report.normalization) {
        throw Error(ErrorCode::kSerialization,
                    "unknown normalization '" + name + "'");
      }
    }
    for (const auto& g : j.at("corpus").at("groups")) {
      report.corpus.groups.push_back(CorpusRowFrom(g));
    }
    report.corpus.total = CorpusRowFrom(j.at("corpus").at("total"));
    for (const auto& t : j.at("tables")) {
      MetricTable table;
      const auto name = t.at("metric").get<std::string>();
      auto metric = ParseMetric(name);
      if (!metric) {
        throw Error(ErrorCode::kSerialization, "unknown metric '" + name + "'");
      }
      table.metric = *metric;
      table.human = RowsFrom(t.at("human"), table.human_average);
      table.ai = RowsFrom(t.at("ai"), table.ai_average);
      report.tables.push_back(std::move(table));
    }
    report.human_readability = StatsFrom(j.at("readability").at("human"));
    report.ai_readability = StatsFrom(j.at("readability").at("ai"));
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSerialization, e.what());
  }
}

}  // namespace rubriq
