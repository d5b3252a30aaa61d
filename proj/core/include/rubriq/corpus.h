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

#ifndef RUBRIQ_CORPUS_H_
#define RUBRIQ_CORPUS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace rubriq {

// ---------------------------------------------------------------------------
// Works
// ---------------------------------------------------------------------------

struct Section {
  int level = 1;
  std::string heading;
  std::vector<std::string> paragraphs;

  // Paragraphs joined with a blank line. Annotation anchors index into this.
  std::string Text() const;

  friend bool operator==(const Section&, const Section&) = default;
};

struct Work {
  std::string id;
  std::string title;
  std::string author_alias;
  std::vector<Section> sections;

  // Section texts joined with a blank line; headings excluded.
  std::string FullText() const;

  friend bool operator==(const Work&, const Work&) = default;
};

inline constexpr std::string_view kPreambleHeading = "Preamble";

// Parses heading-based markup: a line of 1-6 '#' followed by whitespace (or
// nothing) opens a section, ignoring indentation; blank lines separate
// paragraphs. A lone carriage return counts as a space and trailing
// whitespace on a line is dropped. Text before the first heading lands in a
// level-1 "Preamble" section. The title defaults to the first section
// heading. Throws Error(kEmptyDocument).
Work ParseWork(std::string_view source, std::string id = {});

// Inverse of ParseWork for the section structure. Title and author are not
// part of the markup.
std::string SerializeWork(const Work& work);

// Problems that would stop the work from surviving SerializeWork/ParseWork
// unchanged: no sections, levels outside 1-6, untrimmed or multi-line
// headings, empty or untrimmed paragraphs, paragraphs containing blank lines
// or heading-like lines.
std::vector<std::string> CheckWork(const Work& work);

std::size_t CountWords(std::string_view text);
std::size_t CountWords(const Work& work);

// ---------------------------------------------------------------------------
// Rubrics
// ---------------------------------------------------------------------------

enum class ReportingElement {
  kExperiential,
  kConceptual,
  kAnalytical,
  kApplied,
  kCommunication,
};

inline constexpr std::array<ReportingElement, 5> kReportingElements = {
    ReportingElement::kExperiential, ReportingElement::kConceptual,
    ReportingElement::kAnalytical, ReportingElement::kApplied,
    ReportingElement::kCommunication};

std::string_view ElementName(ReportingElement element);
std::optional<ReportingElement> ParseElement(std::string_view name);

inline constexpr int kMinRating = 1;
inline constexpr int kMaxRating = 5;
inline constexpr std::size_t kLevelCount = 5;

struct Criterion {
  std::string code;
  std::string name;
  std::string definition;
  std::string reviewer_advice;
  std::vector<std::string> marker_words;
  // level_descriptors[k - 1] describes rating k.
  std::array<std::string, kLevelCount> level_descriptors;
  ReportingElement element = ReportingElement::kExperiential;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

struct Rubric {
  std::string id;
  std::string name;
  std::vector<Criterion> criteria;

  const Criterion* Find(std::string_view code) const;

  friend bool operator==(const Rubric&, const Rubric&) = default;
};

// Parses the JSON rubric format. Throws Error with kMalformedRubric,
// kMissingLevelDescriptors, kDuplicateCriterionCode or kUnknownElement.
Rubric ParseRubric(std::string_view json);
std::string SerializeRubric(const Rubric& rubric);

// The eight knowledge-process criteria plus communication, grouped into the
// five reporting elements.
const Rubric& DefaultRubric();

// ---------------------------------------------------------------------------
// Review maps
// ---------------------------------------------------------------------------

enum class ReviewKind { kPeer, kAI, kSelf, kInstructor };

std::string_view ReviewKindName(ReviewKind kind);
std::optional<ReviewKind> ParseReviewKind(std::string_view name);

struct Anchor {
  std::size_t section_index = 0;
  std::size_t start_char = 0;  // byte offsets into Section::Text()
  std::size_t end_char = 0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct CriterionNode {
  std::string criterion_code;
  std::optional<int> rating;
  std::string narrative;

  friend bool operator==(const CriterionNode&, const CriterionNode&) = default;
};

struct AnnotationNode {
  std::string code;  // e.g. "STR-"
  Anchor anchor;
  std::string comment;

  friend bool operator==(const AnnotationNode&,
                         const AnnotationNode&) = default;
};

struct CommentNode {
  std::string text;

  friend bool operator==(const CommentNode&, const CommentNode&) = default;
};

struct OverallNode {
  std::string narrative;
  std::optional<int> rating;

  friend bool operator==(const OverallNode&, const OverallNode&) = default;
};

using NodeBody =
    std::variant<CriterionNode, AnnotationNode, CommentNode, OverallNode>;

struct Node {
  std::string id;
  NodeBody body;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  std::string from;
  std::string to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct ReviewMap {
  std::string id;
  std::string work_id;
  std::string rubric_id;
  ReviewKind kind = ReviewKind::kPeer;
  std::string reviewer_alias;
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  // All narrative text of the review (criterion narratives, annotation
  // comments, comments, overall narrative) in node order.
  std::string Text() const;

  friend bool operator==(const ReviewMap&, const ReviewMap&) = default;
};

// Matches [A-Z]{2,4}[+-].
bool IsAnnotationCode(std::string_view code);

// Suggested annotation codes; any string matching IsAnnotationCode is valid.
const std::vector<std::string>& StandardAnnotationCodes();

enum class ViolationKind {
  kWorkMismatch,
  kRubricMismatch,
  kDuplicateNodeId,
  kDanglingEdge,
  kSelfLoop,
  kDuplicateCriterionNode,
  kUnknownCriterion,
  kRatingOutOfRange,
  kBadAnnotationCode,
  kAnchorOutOfBounds,
  kUnknownWork,
  kDuplicateReviewId,
};

std::string_view ViolationName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

// Returns an empty list iff the map is consistent with the work and rubric.
std::vector<Violation> ValidateReviewMap(const ReviewMap& map, const Work& work,
                                         const Rubric& rubric);

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

struct ReviewCorpus {
  std::vector<Work> works;
  std::vector<ReviewMap> reviews;
  Rubric rubric;
  // Optional course/group label per work id; unlabeled works are grouped
  // under kDefaultGroup in corpus summaries.
  std::map<std::string, std::string> work_groups;

  const Work* FindWork(std::string_view id) const;
  std::string GroupOf(std::string_view work_id) const;

  friend bool operator==(const ReviewCorpus&, const ReviewCorpus&) = default;
};

inline constexpr std::string_view kDefaultGroup = "All";

// Validates every review against its work and the corpus rubric. Reviews
// that reference an unknown work are reported as kUnknownWork.
std::vector<Violation> ValidateCorpus(const ReviewCorpus& corpus);

// Checks the rubric invariants on an already-constructed value (the parser
// enforces the same rules). Returns human-readable problems.
std::vector<std::string> CheckRubric(const Rubric& rubric);

}  // namespace rubriq

#endif  // RUBRIQ_CORPUS_H_
