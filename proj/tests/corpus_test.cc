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

#include <gtest/gtest.h>

#include <set>

#include "generators.h"
#include "rubriq/corpus.h"
#include "rubriq/error.h"
#include "rubriq/text.h"

namespace rubriq {
namespace {

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kPrecondition;
}

TEST(Text, WordsKeepInternalJoiners) {
  const auto words = text::Words("Isn't it well-formed -- 'quoted' x2 rock'n'roll?");
  std::vector<std::string> got(words.begin(), words.end());
  EXPECT_EQ(got, (std::vector<std::string>{"Isn't", "it", "well-formed",
                                           "quoted", "x2", "rock'n'roll"}));
}

TEST(Text, NonAsciiLettersAndTypographicJoiners) {
  EXPECT_EQ(text::CountWords("café naïve"), 2u);
  EXPECT_EQ(text::CountWords("don’t"), 1u);
  EXPECT_EQ(text::CountWords("Schüler \u2014 Lehrer"), 2u);
  EXPECT_EQ(text::CountCodePoints("café"), 4u);
}

TEST(Text, MalformedUtf8NeverAborts) {
  const std::string bad = "ok \xff\xfe bytes \xe2\x82";
  EXPECT_GE(text::CountWords(bad), 2u);
  // One replacement per stray byte.
  EXPECT_EQ(text::CountCodePoints(bad), 14u);
}

TEST(Text, SplitLinesDropsCarriageReturns) {
  const auto lines = text::SplitLines("a\r\nb\n\nc");
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "a");
  EXPECT_EQ(lines[2], "");
}

TEST(Text, StableHashIsFnv1a) {
  EXPECT_EQ(text::StableHash(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(text::StableHash("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(ParseWork, HeadingsSectionsAndParagraphs) {
  const Work w = ParseWork(
      "# Title here\n\nFirst para\ncontinues.\n\nSecond.\n\n"
      "## Sub\n#hashtag is text\n\n####### seven is text\n  ### Indented\n",
      "w1");
  EXPECT_EQ(w.id, "w1");
  EXPECT_EQ(w.title, "Title here");
  ASSERT_EQ(w.sections.size(), 3u);
  EXPECT_EQ(w.sections[2].heading, "Indented");
  EXPECT_EQ(w.sections[2].level, 3);
  EXPECT_EQ(w.sections[0].paragraphs,
            (std::vector<std::string>{"First para\ncontinues.", "Second."}));
  EXPECT_EQ(w.sections[1].level, 2);
  EXPECT_EQ(w.sections[1].paragraphs,
            (std::vector<std::string>{"#hashtag is text",
                                      "####### seven is text"}));
}

TEST(ParseWork, PreambleAndEmptyDocument) {
  const Work w = ParseWork("Intro text.\n# Body\nMore.");
  ASSERT_EQ(w.sections.size(), 2u);
  EXPECT_EQ(w.sections[0].heading, kPreambleHeading);
  EXPECT_EQ(w.sections[0].level, 1);
  EXPECT_EQ(CodeOf([] { ParseWork("  \n\n\t"); }), ErrorCode::kEmptyDocument);
  EXPECT_EQ(CodeOf([] { ParseWork(""); }), ErrorCode::kEmptyDocument);
}

TEST(ParseWork, RoundTripsGeneratedWorks) {
  testing::Gen g(11);
  for (int i = 0; i < 300; ++i) {
    const Work w = testing::RandomWork(g, "w");
    ASSERT_TRUE(CheckWork(w).empty());
    const Work back = ParseWork(SerializeWork(w), "w");
    EXPECT_EQ(back.sections, w.sections) << "iteration " << i;
    EXPECT_EQ(SerializeWork(back), SerializeWork(w));
  }
}

TEST(ParseWork, TotalAndIdempotentOnArbitraryText) {
  testing::Gen g(12);
  const std::string alphabet = "ab #\n\n\r\t.'-";
  for (int i = 0; i < 500; ++i) {
    std::string s = "x";
    for (int k = g.Int(0, 80); k > 0; --k) s.push_back(g.Pick(alphabet));
    const Work once = ParseWork(s);
    EXPECT_TRUE(CheckWork(once).empty()) << "input: " << s;
    const Work twice = ParseWork(SerializeWork(once));
    EXPECT_EQ(once.sections, twice.sections) << "input: " << s;
  }
}

TEST(CountWords, WorkEqualsSumOfParagraphs) {
  testing::Gen g(13);
  for (int i = 0; i < 200; ++i) {
    const Work w = testing::RandomWork(g, "w");
    std::size_t sum = 0;
    for (const auto& s : w.sections) {
      for (const auto& p : s.paragraphs) sum += CountWords(p);
    }
    EXPECT_EQ(CountWords(w), sum);
  }
}

TEST(CheckWork, FlagsNonRoundTrippableValues) {
  Work w{"w", "t", "a", {Section{1, "H", {" padded"}}}};
  EXPECT_FALSE(CheckWork(w).empty());
  w.sections[0].paragraphs = {"a\n\nb"};
  EXPECT_FALSE(CheckWork(w).empty());
  w.sections[0].paragraphs = {"ok\n# heading"};
  EXPECT_FALSE(CheckWork(w).empty());
  w.sections[0].level = 7;
  w.sections[0].paragraphs = {"ok"};
  EXPECT_FALSE(CheckWork(w).empty());
  EXPECT_FALSE(CheckWork(Work{}).empty());
}

TEST(Rubric, DefaultRubricPartitionsKnowledgeProcesses) {
  const Rubric& r = DefaultRubric();
  EXPECT_TRUE(CheckRubric(r).empty());
  ASSERT_EQ(r.criteria.size(), 9u);
  std::map<ReportingElement, int> per_element;
  for (const auto& c : r.criteria) ++per_element[c.element];
  EXPECT_EQ(per_element[ReportingElement::kExperiential], 2);
  EXPECT_EQ(per_element[ReportingElement::kConceptual], 2);
  EXPECT_EQ(per_element[ReportingElement::kAnalytical], 2);
  EXPECT_EQ(per_element[ReportingElement::kApplied], 2);
  EXPECT_EQ(per_element[ReportingElement::kCommunication], 1);
  EXPECT_EQ(r.criteria[0].code, "experiencing-the-known");
  EXPECT_EQ(r.criteria[8].code, "communication");
  EXPECT_EQ(ParseRubric(SerializeRubric(r)), r);
}

TEST(Rubric, RoundTripsGeneratedRubrics) {
  testing::Gen g(14);
  for (int i = 0; i < 200; ++i) {
    const Rubric r = testing::RandomRubric(g);
    EXPECT_EQ(ParseRubric(SerializeRubric(r)), r);
  }
}

TEST(Rubric, ParseErrors) {
  const std::string ok_criterion =
      R"({"code":"a","name":"A","definition":"d","reviewer_advice":"r",)"
      R"("marker_words":[],"level_descriptors":["1","2","3","4","5"],)"
      R"("element":"applied"})";
  EXPECT_NO_THROW(ParseRubric(R"({"id":"r","name":"R","criteria":[)" +
                              ok_criterion + "]}"));
  EXPECT_EQ(CodeOf([&] {
              ParseRubric(R"({"id":"r","name":"R","criteria":[)" +
                          ok_criterion + "," + ok_criterion + "]}");
            }),
            ErrorCode::kDuplicateCriterionCode);
  EXPECT_EQ(CodeOf([] {
              ParseRubric(
                  R"({"id":"r","name":"R","criteria":[{"code":"a","name":"A",)"
                  R"("definition":"d","reviewer_advice":"r","marker_words":[],)"
                  R"("level_descriptors":["1","2","3","4"],"element":"applied"}]})");
            }),
            ErrorCode::kMissingLevelDescriptors);
  EXPECT_EQ(CodeOf([] {
              ParseRubric(
                  R"({"id":"r","name":"R","criteria":[{"code":"a","name":"A",)"
                  R"("definition":"d","reviewer_advice":"r","marker_words":[],)"
                  R"("level_descriptors":["1","2","3","4","5"],"element":"x"}]})");
            }),
            ErrorCode::kUnknownElement);
  EXPECT_EQ(CodeOf([] { ParseRubric("{"); }), ErrorCode::kMalformedRubric);
  EXPECT_EQ(CodeOf([] { ParseRubric(R"({"id":"r"})"); }),
            ErrorCode::kMalformedRubric);
}

TEST(Elements, NamesRoundTrip) {
  for (ReportingElement e : kReportingElements) {
    EXPECT_EQ(ParseElement(ElementName(e)), e);
  }
  EXPECT_EQ(ParseElement("Conceptual"), ReportingElement::kConceptual);
  EXPECT_FALSE(ParseElement("unknown"));
  EXPECT_EQ(ParseReviewKind("human"), ReviewKind::kPeer);
  EXPECT_EQ(ParseReviewKind("ai"), ReviewKind::kAI);
}

TEST(Annotations, CodePattern) {
  EXPECT_TRUE(IsAnnotationCode("STR-"));
  EXPECT_TRUE(IsAnnotationCode("EXPA+"));
  EXPECT_FALSE(IsAnnotationCode("S-"));
  EXPECT_FALSE(IsAnnotationCode("STRUC-"));
  EXPECT_FALSE(IsAnnotationCode("str-"));
  EXPECT_FALSE(IsAnnotationCode("STR"));
  EXPECT_EQ(StandardAnnotationCodes().size(), 12u);
  for (const auto& c : StandardAnnotationCodes()) EXPECT_TRUE(IsAnnotationCode(c));
}

class ReviewMapValidation : public ::testing::Test {
 protected:
  Work work = ParseWork("# A\n\nHello world.\n\n# B\n\nSecond section.", "w");
  Rubric rubric = DefaultRubric();
  ReviewMap map{"r", "w", rubric.id, ReviewKind::kPeer, "p", {}, {}};

  std::set<ViolationKind> Kinds() {
    std::set<ViolationKind> out;
    for (const auto& v : ValidateReviewMap(map, work, rubric)) out.insert(v.kind);
    return out;
  }
};

TEST_F(ReviewMapValidation, ValidMapHasNoViolations) {
  map.nodes = {{"c", CriterionNode{"communication", 3, "Fine."}},
               {"a", AnnotationNode{"STR-", Anchor{1, 0, 6}, "Nice."}}};
  map.edges = {{"a", "c"}};
  EXPECT_TRUE(Kinds().empty());
}

TEST_F(ReviewMapValidation, ReportsEachViolationKind) {
  map.work_id = "other";
  map.rubric_id = "other";
  map.nodes = {{"c", CriterionNode{"communication", 6, ""}},
               {"c", CommentNode{"dup"}},
               {"d", CriterionNode{"communication", 2, ""}},
               {"e", CriterionNode{"nope", 2, ""}},
               {"f", AnnotationNode{"bad", Anchor{0, 0, 1}, ""}},
               {"g", AnnotationNode{"STR-", Anchor{0, 5, 5}, ""}},
               {"h", AnnotationNode{"STR-", Anchor{9, 0, 1}, ""}}};
  map.edges = {{"c", "zz"}, {"d", "d"}};
  EXPECT_EQ(Kinds(), (std::set<ViolationKind>{
                         ViolationKind::kWorkMismatch,
                         ViolationKind::kRubricMismatch,
                         ViolationKind::kDuplicateNodeId,
                         ViolationKind::kDanglingEdge,
                         ViolationKind::kSelfLoop,
                         ViolationKind::kDuplicateCriterionNode,
                         ViolationKind::kUnknownCriterion,
                         ViolationKind::kRatingOutOfRange,
                         ViolationKind::kBadAnnotationCode,
                         ViolationKind::kAnchorOutOfBounds}));
}

TEST_F(ReviewMapValidation, AnchorBoundsAreInclusiveOfSectionEnd) {
  const std::size_t len = work.sections[0].Text().size();
  map.nodes = {{"a", AnnotationNode{"EXP+", Anchor{0, 0, len}, ""}}};
  EXPECT_TRUE(Kinds().empty());
  map.nodes = {{"a", AnnotationNode{"EXP+", Anchor{0, 0, len + 1}, ""}}};
  EXPECT_EQ(Kinds(), std::set{ViolationKind::kAnchorOutOfBounds});
}

TEST(ValidateCorpus, GeneratedCorporaAreValid) {
  testing::Gen g(15);
  for (int i = 0; i < 200; ++i) {
    const ReviewCorpus c = testing::RandomCorpus(g);
    const auto violations = ValidateCorpus(c);
    EXPECT_TRUE(violations.empty())
        << (violations.empty() ? "" : violations[0].detail);
  }
}

TEST(ValidateCorpus, UnknownWorkAndDuplicateIds) {
  ReviewCorpus c;
  c.rubric = DefaultRubric();
  c.works.push_back(ParseWork("# A\n\nText.", "w"));
  c.reviews.push_back({"r", "w", c.rubric.id, ReviewKind::kPeer, "p", {}, {}});
  c.reviews.push_back({"r", "w", c.rubric.id, ReviewKind::kPeer, "p", {}, {}});
  c.reviews.push_back({"s", "gone", c.rubric.id, ReviewKind::kPeer, "p", {}, {}});
  std::set<ViolationKind> kinds;
  for (const auto& v : ValidateCorpus(c)) kinds.insert(v.kind);
  EXPECT_EQ(kinds, (std::set{ViolationKind::kUnknownWork,
                             ViolationKind::kDuplicateReviewId}));
  EXPECT_EQ(c.GroupOf("w"), kDefaultGroup);
}

}  // namespace
}  // namespace rubriq
