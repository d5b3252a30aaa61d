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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "generators.h"
#include "rubriq/analytics.h"
#include "rubriq/error.h"
#include "rubriq/llm_backend.h"
#include "rubriq/readability.h"
#include "rubriq/review_pipeline.h"
#include "rubriq/sentiment.h"
#include "rubriq/storage.h"
#include "stats_oracle.h"

namespace rubriq {
namespace {

namespace fs = std::filesystem;

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  void Near(double got, double want, double tol, const std::string& what) {
    Expect(std::abs(got - want) <= tol,
           fmt::format("{}: got {:.12g}, want {:.12g} +/- {:g}", what, got,
                       want, tol));
  }
  bool ok() const { return failures_ == 0; }
  int checks() const { return checks_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
};

struct AcceptanceCriterion {
  const char* id;
  const char* title;
  std::function<void(Check&)> body;
};

// ---------------------------------------------------------------------------
// AC1

struct PublishedTable {
  Metric metric;
  std::array<double, 5> human;
  double human_average;
  std::array<double, 5> ai;
  double ai_average;
};

const PublishedTable kPublished[] = {
    {Metric::kRating, {3.54, 4.01, 3.77, 3.83, 3.97}, 3.82,
     {3.00, 3.13, 3.10, 3.19, 3.48}, 3.18},
    {Metric::kSentimentScore, {0.24, 0.43, 0.25, 0.33, 0.40}, 0.33,
     {0.19, 0.28, 0.23, 0.20, 0.20}, 0.22},
    {Metric::kSentimentMagnitude, {0.89, 1.09, 0.93, 0.90, 1.58}, 1.08,
     {3.83, 3.48, 2.57, 2.62, 2.45}, 2.99},
};

std::vector<ElementStatsRow> Rows(const std::array<double, 5>& values) {
  std::vector<ElementStatsRow> rows;
  for (std::size_t e = 0; e < values.size(); ++e) {
    ElementStatsRow row;
    row.element = kReportingElements[e];
    row.value = values[e];
    rows.push_back(row);
  }
  return rows;
}

// First criterion of each element in the default rubric.
std::array<std::string, 5> ElementCodes() {
  std::array<std::string, 5> codes;
  for (const auto& c : DefaultRubric().criteria) {
    auto& slot = codes[static_cast<std::size_t>(c.element)];
    if (slot.empty()) slot = c.code;
  }
  return codes;
}

// A corpus whose per-element means equal `values` for the given metric.
// Ratings use 100 reviews mixing floor and ceiling ratings; sentiment uses
// one token per element whose lexicon valence carries the value.
ReviewCorpus CorpusWithMeans(const std::array<double, 5>& values, Metric metric,
                             ReviewKind kind, Lexicon& lexicon) {
  ReviewCorpus corpus;
  corpus.rubric = DefaultRubric();
  corpus.works.push_back(ParseWork("# Work\n\nBody text.", "w"));
  const auto codes = ElementCodes();
  const int reviews = metric == Metric::kRating ? 100 : 2;
  for (int r = 0; r < reviews; ++r) {
    ReviewMap map{"r" + std::to_string(r), "w", corpus.rubric.id, kind, "x",
                  {}, {}};
    for (std::size_t e = 0; e < 5; ++e) {
      const std::string token = "element" + std::to_string(e);
      CriterionNode node{codes[e], std::nullopt, {}};
      if (metric == Metric::kRating) {
        const int lo = static_cast<int>(std::floor(values[e]));
        const int above = static_cast<int>(std::lround((values[e] - lo) * 100));
        node.rating = r < above ? lo + 1 : lo;
      } else if (metric == Metric::kSentimentScore) {
        lexicon.Set(token, values[e]);
        node.narrative = token + ".";
      } else {
        // Whole sentences of valence one, then the remainder.
        const int whole = static_cast<int>(std::floor(values[e]));
        for (int k = 0; k < whole; ++k) node.narrative += "unit. ";
        lexicon.Set("unit", 1.0);
        lexicon.Set(token, values[e] - whole);
        node.narrative += token + ".";
      }
      map.nodes.push_back({"criterion:" + codes[e], node});
    }
    corpus.reviews.push_back(std::move(map));
  }
  return corpus;
}

void AggregationAnchors(Check& c) {
  for (const auto& t : kPublished) {
    const std::string name(MetricName(t.metric));
    c.Near(OverallAverage(Rows(t.human)), t.human_average, 0.005,
           name + " human average");
    c.Near(OverallAverage(Rows(t.ai)), t.ai_average, 0.005,
           name + " AI average");

    for (const auto& [values, average, kind] :
         {std::tuple{t.human, t.human_average, ReviewKind::kPeer},
          std::tuple{t.ai, t.ai_average, ReviewKind::kAI}}) {
      Lexicon lexicon;
      const ReviewCorpus corpus = CorpusWithMeans(values, t.metric, kind, lexicon);
      const auto rows = ElementTable(corpus, kind, t.metric, lexicon);
      c.Expect(rows.size() == 5, name + " corpus yields five element rows");
      for (std::size_t e = 0; e < rows.size(); ++e) {
        c.Near(rows[e].value, values[e], 1e-9, name + " element mean");
      }
      c.Near(OverallAverage(rows), average, 0.005,
             name + " average through element tables");
    }
  }
}

// ---------------------------------------------------------------------------
// AC2

// Adds `count` AI reviews of `work` totalling exactly `words` words.
void AddAiReviews(ReviewCorpus& corpus, const std::string& work, int count,
                  std::size_t words) {
  for (int i = 0; i < count; ++i) {
    const std::size_t share =
        words / count + (static_cast<std::size_t>(i) < words % count ? 1 : 0);
    std::string text;
    text.reserve(share * 5);
    for (std::size_t k = 0; k < share; ++k) text += k ? " word" : "Word";
    corpus.reviews.push_back({fmt::format("ai-{}-{}", work, i), work,
                              corpus.rubric.id, ReviewKind::kAI, "ai",
                              {{"c", CommentNode{text}}}, {}});
  }
}

void CorpusArithmetic(Check& c) {
  ReviewCorpus corpus;
  corpus.rubric = DefaultRubric();
  corpus.works.push_back(ParseWork("# A\n\nText.", "afl"));
  corpus.works.push_back(ParseWork("# B\n\nText.", "nml"));
  corpus.work_groups = {{"afl", "Assessment for Learning"},
                        {"nml", "New Media and Literacies"}};
  AddAiReviews(corpus, "afl", 33, 42163);
  AddAiReviews(corpus, "nml", 29, 29 * 1393);

  const CorpusSummary s = SummarizeCorpus(corpus);
  const CorpusSummaryRow* afl = nullptr;
  for (const auto& row : s.groups) {
    if (row.group == "Assessment for Learning") afl = &row;
  }
  c.Expect(afl != nullptr, "group row present");
  if (afl == nullptr) return;
  c.Expect(afl->ai_reviews == 33 && afl->ai_words == 42163,
           fmt::format("counted {} reviews, {} words", afl->ai_reviews,
                       afl->ai_words));
  c.Expect(std::lround(afl->avg_ai_words) == 1278,
           fmt::format("average {:.3f} rounds to 1278", afl->avg_ai_words));
  c.Near(1335.5 / kPerCriterionDivisor, 166.9, 0.05, "1335.5 per criterion");
  c.Near(s.total.ai_words_per_criterion, 166.9, 0.05,
         "total row words per criterion");
}

// ---------------------------------------------------------------------------
// AC3

struct Fixture {
  const char* text;
  std::size_t words, sentences, letters, characters, syllables;
  double fk, cl, ari;
};

constexpr Fixture kFixtures[] = {
#include "readability_fixtures.inc"
};

void ReadabilityOracle(Check& c) {
  c.Expect(std::size(kFixtures) == 20, "twenty fixtures");
  for (const auto& f : kFixtures) {
    const auto r = CompositeGrade(f.text);
    c.Near(r.flesch_kincaid, f.fk, 1e-6, std::string("FK ") + f.text);
    c.Near(r.coleman_liau, f.cl, 1e-6, std::string("CL ") + f.text);
    c.Near(r.ari, f.ari, 1e-6, std::string("ARI ") + f.text);
    c.Near(r.composite, (r.flesch_kincaid + r.coleman_liau + r.ari) / 3.0,
           1e-12, "composite is the mean");
  }
  const auto cat = CompositeGrade("The cat sat on the mat.");
  c.Near(cat.flesch_kincaid, -1.45, 1e-6, "cat FK");
  c.Near(cat.coleman_liau, -4.0733333333, 1e-6, "cat CL");
  c.Near(cat.ari, -5.085, 1e-6, "cat ARI");
}

// ---------------------------------------------------------------------------
// AC4

void StatisticsOracle(Check& c) {
  testing::Gen g(4004);
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(g.Int(2, 50));
    const auto x = g.Doubles(n, -100, 100);
    const auto y = g.Doubles(n, -100, 100);
    const auto d = Describe(x);
    c.Near(d.mean, static_cast<double>(oracle::Mean(x)), 1e-9, "mean");
    c.Near(d.median, oracle::Median(x), 1e-9, "median");
    c.Near(d.sd, static_cast<double>(oracle::SampleSd(x)), 1e-9, "sd");
    c.Near(Pearson(x, y), static_cast<double>(oracle::Correlation(x, y)), 1e-9,
           "pearson");
    c.Near(Covariance(x, y),
           static_cast<double>(oracle::SampleCovariance(x, y)), 1e-9,
           "covariance");
    c.Near(Pearson(x, x), 1.0, 1e-9, "pearson(x, x)");
    c.Near(Covariance(x, y), Pearson(x, y) * d.sd * Describe(y).sd, 1e-9,
           "cov = r sd sd");
  }
}

// ---------------------------------------------------------------------------
// AC5

void PipelineStructure(Check& c) {
  testing::Gen g(5005);
  for (int i = 0; i < 40; ++i) {
    const Rubric rubric = testing::RandomRubric(g, 1, 20);
    const Work work = testing::RandomWork(g, "w" + std::to_string(i), 1, 10);
    const auto sections = static_cast<std::int64_t>(work.sections.size());

    PipelineConfig cfg;
    cfg.seed = g.Int(0, 1 << 20);
    std::int64_t reserved = 0;
    for (const auto& cr : rubric.criteria) {
      reserved = std::max(
          reserved, EstimateTokens(BuildReviewPrompt(cr, WorkSummary{}, cfg)));
    }
    const std::int64_t full = EstimateTokens(work.FullText());
    const std::int64_t room = std::max<std::int64_t>(full / 2, 4 * sections);
    cfg.always_summarize = room >= full;
    cfg.context_budget_tokens = reserved + room;

    RecordingBackend rec(std::make_shared<MockBackend>());
    const ReviewMap map = GenerateAiReview(work, rubric, rec, cfg);
    bool in_order = map.nodes.size() == rubric.criteria.size();
    for (std::size_t k = 0; in_order && k < map.nodes.size(); ++k) {
      const auto* node = std::get_if<CriterionNode>(&map.nodes[k].body);
      in_order = node && node->criterion_code == rubric.criteria[k].code;
    }
    c.Expect(in_order, "one criterion node per criterion, in rubric order");
    c.Expect(rec.CallCount(cfg.reviewer_model) ==
                 static_cast<std::int64_t>(rubric.criteria.size()),
             "reviewer calls equal criterion count");
    c.Expect(rec.CallCount(cfg.summarizer_model) == sections,
             fmt::format("summarizer calls {} for {} sections",
                         rec.CallCount(cfg.summarizer_model), sections));

    const MockBackend mock;
    c.Expect(GenerateAiReview(work, rubric, mock, cfg) == map,
             "same seed, same map");
    for (int p : {1, 4, 8}) {
      PipelineConfig q = cfg;
      q.parallelism = p;
      c.Expect(GenerateAiReview(work, rubric, mock, q) == map,
               fmt::format("parallelism {} changes nothing", p));
    }
  }
}

// ---------------------------------------------------------------------------
// AC6

void SentimentProperties(Check& c) {
  testing::Gen g(6006);
  const Lexicon& lex = DefaultLexicon();
  const Lexicon neg = lex.Negated();
  for (int i = 0; i < 500; ++i) {
    const std::string t = g.Sentences(1, 6, 0.35);
    const auto once = AnalyzeSentiment(t, lex);
    const auto twice = AnalyzeSentiment(t + " " + t, lex);
    c.Near(twice.score, once.score, 1e-9, "duplication keeps the score");
    c.Expect(twice.magnitude >= once.magnitude,
             "duplication does not shrink magnitude");
    const auto flipped = AnalyzeSentiment(t, neg);
    bool exact = flipped.sentences.size() == once.sentences.size();
    for (std::size_t k = 0; exact && k < once.sentences.size(); ++k) {
      exact = flipped.sentences[k].score == -once.sentences[k].score;
    }
    c.Expect(exact, "negated lexicon negates every sentence score");
  }
  const SentimentThresholds t;
  using SC = SentimentCategory;
  c.Expect(Categorize(0.25, t) == SC::kEncouraging, "0.25 is encouraging");
  c.Expect(Categorize(std::nextafter(0.25, 0.0), t) == SC::kInformational,
           "just below 0.25 is informational");
  c.Expect(Categorize(-0.25, t) == SC::kCritical, "-0.25 is critical");
  c.Expect(Categorize(std::nextafter(-0.25, 0.0), t) == SC::kInformational,
           "just above -0.25 is informational");
}

// ---------------------------------------------------------------------------
// AC7

void RoundTrips(Check& c) {
  testing::Gen g(7007);
  const fs::path root = fs::temp_directory_path() /
                        ("rubriq-acceptance-" + std::to_string(::getpid()));
  for (int i = 0; i < 200; ++i) {
    fs::remove_all(root);
    const ReviewCorpus corpus = testing::RandomCorpus(g);
    SaveCorpus(corpus, root);
    c.Expect(LoadCorpus(root) == corpus,
             fmt::format("corpus {} survives save and load", i));
    const Rubric rubric = testing::RandomRubric(g);
    c.Expect(ParseRubric(SerializeRubric(rubric)) == rubric,
             "rubric round trip");
    const Work work = testing::RandomWork(g, "w");
    c.Expect(ParseWork(SerializeWork(work), "w").sections == work.sections,
             "work round trip");
  }
  fs::remove_all(root);
  c.Expect(ParseRubric(SerializeRubric(DefaultRubric())) == DefaultRubric(),
           "default rubric round trip");
}

// ---------------------------------------------------------------------------
// AC8

class Scripted : public HttpTransport {
 public:
  explicit Scripted(std::vector<int> statuses) : statuses_(std::move(statuses)) {}
  HttpResponse Post(const HttpRequest&) const override {
    const int status = statuses_.at(calls_++);
    return {status, status == 200 ? R"({"choices":[{"text":"ok"}]})" : ""};
  }
  int calls() const { return calls_; }

 private:
  std::vector<int> statuses_;
  mutable int calls_ = 0;
};

void RetryContract(Check& c) {
  RemoteOptions options;
  options.endpoint = "https://completions.invalid/v1";
  options.api_key = "key";
  options.retry = RetryPolicy{3, 500, 2.0};
  CompletionRequest request;
  request.model_id = "m";
  request.prompt = "p";

  {
    auto transport = std::make_shared<Scripted>(std::vector{429, 429, 200});
    std::vector<std::int64_t> delays;
    RemoteBackend backend(options, transport, [&](std::chrono::milliseconds d) {
      delays.push_back(d.count());
    });
    const auto result = backend.Complete(request);
    c.Expect(result.text == "ok", "third attempt succeeds");
    c.Expect(transport->calls() == 3, "exactly three attempts");
    c.Expect(delays == std::vector<std::int64_t>{500, 1000},
             "geometric delays 500 ms then 1000 ms");
  }
  {
    auto transport = std::make_shared<Scripted>(std::vector{401, 200});
    std::vector<std::int64_t> delays;
    RemoteBackend backend(options, transport, [&](std::chrono::milliseconds d) {
      delays.push_back(d.count());
    });
    bool auth = false;
    try {
      backend.Complete(request);
    } catch (const Error& e) {
      auth = e.code() == ErrorCode::kAuth;
    }
    c.Expect(auth, "401 surfaces as an auth error");
    c.Expect(transport->calls() == 1 && delays.empty(), "401 never retries");
  }
}

}  // namespace
}  // namespace rubriq

int main() {
  using rubriq::Check;
  const std::vector<rubriq::AcceptanceCriterion> criteria = {
      {"AC1", "aggregation anchors", rubriq::AggregationAnchors},
      {"AC2", "corpus arithmetic anchor", rubriq::CorpusArithmetic},
      {"AC3", "readability oracle", rubriq::ReadabilityOracle},
      {"AC4", "statistics oracle", rubriq::StatisticsOracle},
      {"AC5", "pipeline structure", rubriq::PipelineStructure},
      {"AC6", "sentiment properties", rubriq::SentimentProperties},
      {"AC7", "round trips", rubriq::RoundTrips},
      {"AC8", "retry contract", rubriq::RetryContract},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    std::string error;
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = check.ok() && error.empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion.id << " "
              << criterion.title << " (" << check.checks() << " checks)\n";
    for (const auto& m : check.messages()) std::cout << "       " << m << "\n";
    if (!error.empty()) std::cout << "       exception: " << error << "\n";
    failed += ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed\n"
                            : fmt::format("{} criteria failed\n", failed));
  return failed;
}
