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

// Hand-rolled random generators for property tests. Every generator draws
// from a caller-owned Gen so failures reproduce from the printed seed.

#ifndef RUBRIQ_TESTS_GENERATORS_H_
#define RUBRIQ_TESTS_GENERATORS_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rubriq/corpus.h"

namespace rubriq::testing {

inline constexpr std::array<std::string_view, 40> kPlainWords = {
    "student", "teacher", "lesson",  "idea",    "project", "class",
    "reading", "writing", "example", "source",  "claim",   "reason",
    "school",  "theory",  "method",  "learner", "draft",   "topic",
    "group",   "report",  "the",     "a",       "of",      "and",
    "to",      "in",      "is",      "was",     "this",    "that",
    "with",    "for",     "on",      "by",      "we",      "it",
    "models",  "data",    "2024",    "well-known",
};

// Words with non-zero valence in the default lexicon.
inline constexpr std::array<std::string_view, 16> kFeedbackWords = {
    "excellent", "clear",    "strong",  "good",      "insightful",
    "great",     "helpful",  "thoughtful", "unclear", "weak",
    "confusing", "missing",  "poor",    "vague",     "incorrect",
    "careless",
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  std::size_t Index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  double Real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  bool Coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <typename C>
  const auto& Pick(const C& c) {
    return c[Index(c.size())];
  }

  std::string Word() { return std::string(Pick(kPlainWords)); }

  // Space-separated words; never empty.
  std::string Phrase(int lo, int hi) {
    std::string out;
    for (int i = Int(lo, hi); i > 0; --i) {
      if (!out.empty()) out.push_back(' ');
      out += Word();
    }
    return out;
  }

  // A terminated sentence, optionally sprinkled with feedback words.
  std::string Sentence(double feedback_rate = 0.0) {
    std::string out;
    for (int i = Int(2, 12); i > 0; --i) {
      if (!out.empty()) out.push_back(' ');
      out += Coin(feedback_rate) ? std::string(Pick(kFeedbackWords)) : Word();
    }
    out[0] = static_cast<char>(out[0] >= 'a' && out[0] <= 'z'
                                   ? out[0] - 'a' + 'A'
                                   : out[0]);
    out.push_back(Pick(std::string_view(".!?")));
    return out;
  }

  std::string Sentences(int lo, int hi, double feedback_rate = 0.0) {
    std::string out;
    for (int i = Int(lo, hi); i > 0; --i) {
      if (!out.empty()) out.push_back(' ');
      out += Sentence(feedback_rate);
    }
    return out;
  }

  std::vector<double> Doubles(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = Real(lo, hi);
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Work RandomWork(Gen& g, std::string id, int min_sections = 1,
                       int max_sections = 10) {
  Work work;
  work.id = std::move(id);
  for (int s = g.Int(min_sections, max_sections); s > 0; --s) {
    Section section;
    section.level = g.Int(1, 6);
    section.heading = g.Phrase(1, 4);
    for (int p = g.Int(1, 4); p > 0; --p) {
      section.paragraphs.push_back(g.Sentences(1, 5));
    }
    work.sections.push_back(std::move(section));
  }
  work.title = work.sections.front().heading;
  return work;
}

inline Rubric RandomRubric(Gen& g, int min_criteria = 1,
                           int max_criteria = 20) {
  Rubric rubric;
  rubric.id = "rubric-" + std::to_string(g.Int(0, 9999));
  rubric.name = g.Phrase(1, 3);
  const int n = g.Int(min_criteria, max_criteria);
  for (int i = 0; i < n; ++i) {
    Criterion c;
    c.code = "c" + std::to_string(i) + "-" + g.Word();
    c.name = g.Phrase(1, 3);
    c.definition = g.Sentences(1, 2);
    c.reviewer_advice = g.Sentences(1, 2);
    for (int m = g.Int(0, 4); m > 0; --m) c.marker_words.push_back(g.Word());
    for (auto& level : c.level_descriptors) level = g.Sentence();
    c.element = g.Pick(kReportingElements);
    rubric.criteria.push_back(std::move(c));
  }
  return rubric;
}

inline ReviewMap RandomReview(Gen& g, const Work& work, const Rubric& rubric,
                              std::string id, ReviewKind kind) {
  ReviewMap review;
  review.id = std::move(id);
  review.work_id = work.id;
  review.rubric_id = rubric.id;
  review.kind = kind;
  review.reviewer_alias = "reviewer-" + std::to_string(g.Int(1, 99));
  for (const auto& c : rubric.criteria) {
    if (!g.Coin(0.85)) continue;
    std::optional<int> rating;
    if (g.Coin(0.9)) rating = g.Int(kMinRating, kMaxRating);
    review.nodes.push_back({"criterion:" + c.code,
                            CriterionNode{c.code, rating,
                                          g.Sentences(1, 3, 0.3)}});
  }
  const auto& codes = StandardAnnotationCodes();
  for (int a = g.Int(0, 3); a > 0; --a) {
    const std::size_t si = g.Index(work.sections.size());
    const std::size_t len = work.sections[si].Text().size();
    const std::size_t start = g.Index(len);
    const std::size_t end =
        start + 1 + g.Index(std::min<std::size_t>(len - start, 40));
    review.nodes.push_back({"annotation-" + std::to_string(a),
                            AnnotationNode{g.Pick(codes), Anchor{si, start, end},
                                           g.Sentence(0.3)}});
  }
  if (g.Coin()) {
    review.nodes.push_back({"comment", CommentNode{g.Sentences(1, 2, 0.3)}});
  }
  if (g.Coin()) {
    std::optional<int> rating;
    if (g.Coin()) rating = g.Int(kMinRating, kMaxRating);
    review.nodes.push_back({"overall", OverallNode{g.Sentence(0.3), rating}});
  }
  if (review.nodes.size() >= 2) {
    for (int e = g.Int(0, 4); e > 0; --e) {
      const std::size_t from = g.Index(review.nodes.size());
      std::size_t to = g.Index(review.nodes.size() - 1);
      if (to >= from) ++to;
      review.edges.push_back({review.nodes[from].id, review.nodes[to].id});
    }
  }
  return review;
}

inline ReviewCorpus RandomCorpus(Gen& g) {
  ReviewCorpus corpus;
  corpus.rubric = RandomRubric(g, 1, 9);
  const int works = g.Int(1, 4);
  for (int w = 0; w < works; ++w) {
    corpus.works.push_back(RandomWork(g, "w" + std::to_string(w), 1, 4));
    corpus.works.back().author_alias = "author-" + std::to_string(w);
    if (g.Coin()) {
      corpus.work_groups[corpus.works.back().id] =
          "group-" + std::to_string(g.Int(1, 3));
    }
  }
  const int reviews = g.Int(0, 6);
  for (int r = 0; r < reviews; ++r) {
    const Work& work = g.Pick(corpus.works);
    const ReviewKind kind =
        g.Pick(std::array{ReviewKind::kPeer, ReviewKind::kAI,
                          ReviewKind::kSelf, ReviewKind::kInstructor});
    corpus.reviews.push_back(RandomReview(g, work, corpus.rubric,
                                          "r" + std::to_string(r), kind));
  }
  return corpus;
}

}  // namespace rubriq::testing

#endif  // RUBRIQ_TESTS_GENERATORS_H_
