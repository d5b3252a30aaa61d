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

#include <array>
#include <random>
#include <string>

#include <fmt/format.h>

#include "cli.h"
#include "rubriq/error.h"
#include "rubriq/text.h"

namespace rubriq::cli {
namespace {

constexpr std::array<std::string_view, 8> kTopics = {
    "project-based learning",   "formative assessment",
    "digital literacy",         "multilingual classrooms",
    "peer feedback",            "inquiry science",
    "restorative practice",     "universal design for learning",
};

constexpr std::array<std::string_view, 6> kHeadings = {
    "Introduction", "My experience", "What the research says",
    "Key concepts", "Putting it into practice", "Conclusion",
};

// "{}" is replaced with the work's topic.
constexpr std::array<std::string_view, 30> kSentences = {
    "This work explores {} and why it matters for the students I teach.",
    "In my classroom I have seen how {} changes the way learners engage.",
    "Many teachers are familiar with {} but few have studied it closely.",
    "Research shows that {} can improve outcomes when it is implemented "
    "with care.",
    "A recent case study observed students working with {} over a full "
    "semester.",
    "Survey data suggest that teachers value {} but lack time to plan for it.",
    "The term {} refers to a family of practices rather than a single method.",
    "It is useful to classify approaches to {} by who controls the learning.",
    "According to sociocultural theory, learning happens through "
    "participation in shared practices.",
    "The framework I use connects {} to the ways knowledge is made and "
    "shared.",
    "Because students take ownership of their work, motivation tends to rise.",
    "As a result, the role of the teacher shifts from instructor to "
    "facilitator.",
    "We should ask whose interests are served when schools adopt {}.",
    "Some perspectives, especially those of families, are often missing from "
    "the discussion.",
    "In practice, a teacher can start with one small unit and build from "
    "there.",
    "A lesson plan for {} should include clear goals and regular check-ins.",
    "An innovative approach would be to transfer {} into community settings.",
    "Students could reimagine the project as a service to their "
    "neighbourhood.",
    "The evidence is mixed, and some studies report no effect at all.",
    "Critics argue that {} demands resources that many schools do not have.",
    "My own attempts were uneven, but each one taught me something new.",
    "Assessment remains the hardest part of making {} work well.",
    "Clear criteria help students understand what quality looks like.",
    "Collaboration between colleagues made the biggest difference in my "
    "school.",
    "Technology can support {}, although it is not a requirement.",
    "The district policy does not yet mention {} explicitly.",
    "Students reported that they enjoyed the greater freedom to choose.",
    "Several learners struggled with the open structure at first.",
    "Over time the quality of student reflection improved noticeably.",
    "In conclusion, {} is worth pursuing when it is planned thoughtfully.",
};

constexpr std::array<std::string_view, 8> kAnnotationComments = {
    "This claim needs a source.",
    "Great example here.",
    "Could you define this term?",
    "This sentence is unclear.",
    "Nice connection to your own practice.",
    "Consider another perspective on this point.",
    "This is a strong argument.",
    "Repetitive with the previous paragraph.",
};

std::size_t Draw(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

std::string Sentence(std::mt19937_64& rng, std::string_view topic) {
  std::string s(kSentences[Draw(rng, kSentences.size())]);
  if (auto pos = s.find("{}"); pos != std::string::npos) {
    s.replace(pos, 2, topic);
  }
  return s;
}

Work MakeWork(int index, std::mt19937_64& rng) {
  const std::string_view topic = kTopics[Draw(rng, kTopics.size())];
  Work work;
  work.id = fmt::format("work-{:02d}", index + 1);
  work.author_alias = fmt::format("student-{:02d}", index + 1);
  work.title = "Notes on " + std::string(topic);
  for (std::string_view heading : kHeadings) {
    Section section{heading == kHeadings.front() ? 1 : 2, std::string(heading),
                    {}};
    const std::size_t paragraphs = 3 + Draw(rng, 4);
    for (std::size_t p = 0; p < paragraphs; ++p) {
      std::string para;
      const std::size_t sentences = 4 + Draw(rng, 5);
      for (std::size_t s = 0; s < sentences; ++s) {
        if (!para.empty()) para.push_back(' ');
        para += Sentence(rng, topic);
      }
      section.paragraphs.push_back(std::move(para));
    }
    work.sections.push_back(std::move(section));
  }
  return work;
}

ReviewMap MakePeerReview(const Work& work, const Rubric& rubric,
                         const CompletionBackend& backend, int reviewer,
                         std::int64_t seed, std::mt19937_64& rng) {
  ReviewMap review;
  review.id = fmt::format("peer-{}-{}", work.id, reviewer + 1);
  review.work_id = work.id;
  review.rubric_id = rubric.id;
  review.kind = ReviewKind::kPeer;
  review.reviewer_alias = fmt::format("peer-{:02d}", Draw(rng, 60) + 1);

  for (const auto& criterion : rubric.criteria) {
    CompletionRequest request;
    request.model_id = "peer-simulator";
    request.prompt = "Peer review by " + review.reviewer_alias + " of " +
                     work.id + " on " + criterion.code;
    request.seed = seed;
    const auto parsed = ParseCriterionResponse(backend.Complete(request).text);
    // Peers write less than the model: keep one or two sentences.
    auto sentences = SplitSentences(parsed.narrative);
    sentences.resize(std::min<std::size_t>(sentences.size(),
                                           1 + Draw(rng, 2)));
    review.nodes.push_back({"criterion:" + criterion.code,
                            CriterionNode{criterion.code, parsed.rating,
                                          text::Join(sentences, " ")}});
  }

  const std::size_t annotations = 1 + Draw(rng, 2);
  for (std::size_t a = 0; a < annotations; ++a) {
    const std::size_t si = Draw(rng, work.sections.size());
    const std::size_t length = work.sections[si].Text().size();
    if (length < 2) continue;
    const std::size_t start = Draw(rng, length - 1);
    const std::size_t end = std::min(length, start + 20 + Draw(rng, 60));
    const auto& codes = StandardAnnotationCodes();
    const std::string id = fmt::format("annotation-{}", a + 1);
    review.nodes.push_back(
        {id, AnnotationNode{codes[Draw(rng, codes.size())],
                            Anchor{si, start, end},
                            std::string(kAnnotationComments[Draw(
                                rng, kAnnotationComments.size())])}});
    const auto& target = rubric.criteria[Draw(rng, rubric.criteria.size())];
    review.edges.push_back({id, "criterion:" + target.code});
  }
  review.nodes.push_back(
      {"overall", OverallNode{"Thanks for sharing this work.", std::nullopt}});
  return review;
}

}  // namespace

ReviewCorpus GenerateDemoCorpus(const DemoOptions& options,
                                const CompletionBackend& backend,
                                const PipelineConfig& pipeline) {
  if (options.works < 1 || options.groups < 1 ||
      options.peer_reviews_per_work < 0) {
    throw Error(ErrorCode::kConfig,
                "demo needs at least one work and one group");
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(options.seed));
  ReviewCorpus corpus;
  corpus.rubric = DefaultRubric();

  for (int i = 0; i < options.works; ++i) {
    Work work = MakeWork(i, rng);
    corpus.work_groups[work.id] =
        fmt::format("Course {}", static_cast<char>('A' + i % options.groups));

    for (int r = 0; r < options.peer_reviews_per_work; ++r) {
      corpus.reviews.push_back(MakePeerReview(work, corpus.rubric, backend, r,
                                              options.seed, rng));
    }
    PipelineConfig cfg = pipeline;
    cfg.seed = options.seed + i;
    corpus.reviews.push_back(
        GenerateAiReview(work, corpus.rubric, backend, cfg));
    corpus.works.push_back(std::move(work));
  }
  return corpus;
}

}  // namespace rubriq::cli
