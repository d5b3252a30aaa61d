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

#include "rubriq/corpus.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "rubriq/error.h"
#include "rubriq/text.h"

namespace rubriq {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kParagraphSeparator = "\n\n";

// Returns the heading level of `line`, or 0 when it is not a heading.
// Surrounding whitespace is ignored so a trimmed paragraph can never turn
// into a heading.
int HeadingLevel(std::string_view line) {
  line = text::Trim(line);
  std::size_t hashes = 0;
  while (hashes < line.size() && line[hashes] == '#') ++hashes;
  if (hashes == 0 || hashes > 6) return 0;
  if (hashes < line.size() && line[hashes] != ' ' && line[hashes] != '\t') {
    return 0;
  }
  return static_cast<int>(hashes);
}

std::string RequireString(const nlohmann::json& obj, const char* key,
                          std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(ErrorCode::kMalformedRubric,
                std::string(where) + ": missing string field '" + key + "'");
  }
  return it->get<std::string>();
}

std::string OptionalString(const nlohmann::json& obj, const char* key,
                           std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw Error(ErrorCode::kMalformedRubric,
                std::string(where) + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> StringArray(const nlohmann::json& value,
                                     std::string_view where) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kMalformedRubric,
                std::string(where) + " must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kMalformedRubric,
                  std::string(where) + " must be an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

bool IsRating(int r) { return r >= kMinRating && r <= kMaxRating; }

}  // namespace

// ---------------------------------------------------------------------------
// Works

std::string Section::Text() const {
  return text::Join(paragraphs, kParagraphSeparator);
}

std::string Work::FullText() const {
  std::vector<std::string> parts;
  parts.reserve(sections.size());
  for (const auto& s : sections) parts.push_back(s.Text());
  return text::Join(parts, kParagraphSeparator);
}

Work ParseWork(std::string_view source, std::string id) {
  if (text::IsBlank(source)) {
    throw Error(ErrorCode::kEmptyDocument, "document has no content");
  }

  Work work;
  work.id = std::move(id);
  std::vector<std::string_view> pending;  // lines of the open paragraph

  auto flush = [&] {
    if (pending.empty()) return;
    std::string para;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (i > 0) para.push_back('\n');
      para.append(pending[i]);
    }
    pending.clear();
    if (work.sections.empty()) {
      work.sections.push_back({1, std::string(kPreambleHeading), {}});
    }
    work.sections.back().paragraphs.emplace_back(text::Trim(para));
  };

  std::vector<std::string> lines;
  for (std::string_view raw : text::SplitLines(source)) {
    // A stray carriage return is whitespace, so the result never carries
    // one and a re-parse of the serialized form is a fixed point.
    std::string line(raw);
    std::replace(line.begin(), line.end(), '\r', ' ');
    line.erase(line.find_last_not_of(" \t\f\v") + 1);
    lines.push_back(std::move(line));
  }

  for (std::string_view line : lines) {
    if (int level = HeadingLevel(line); level > 0) {
      flush();
      work.sections.push_back(
          {level, std::string(text::Trim(text::Trim(line).substr(level))), {}});
    } else if (text::IsBlank(line)) {
      flush();
    } else {
      pending.push_back(line);
    }
  }
  flush();

  work.title = work.sections.front().heading;
  return work;
}

std::string SerializeWork(const Work& work) {
  std::vector<std::string> blocks;
  for (const auto& section : work.sections) {
    if (section.level < 1 || section.level > 6) {
      throw Error(ErrorCode::kSerialization,
                  "section level " + std::to_string(section.level) +
                      " cannot be written as markup");
    }
    blocks.push_back(std::string(section.level, '#') + " " + section.heading);
    for (const auto& p : section.paragraphs) blocks.push_back(p);
  }
  return text::Join(blocks, kParagraphSeparator) + "\n";
}

std::vector<std::string> CheckWork(const Work& work) {
  std::vector<std::string> problems;
  if (work.sections.empty()) problems.push_back("work has no sections");
  for (std::size_t i = 0; i < work.sections.size(); ++i) {
    const Section& s = work.sections[i];
    const std::string where = "section " + std::to_string(i);
    if (s.level < 1 || s.level > 6) {
      problems.push_back(where + ": level " + std::to_string(s.level) +
                         " outside 1-6");
    }
    if (text::Trim(s.heading) != s.heading ||
        s.heading.find('\n') != std::string::npos) {
      problems.push_back(where + ": heading is not a trimmed single line");
    }
    for (const auto& p : s.paragraphs) {
      if (p.empty() || text::Trim(p) != p) {
        problems.push_back(where + ": empty or untrimmed paragraph");
        continue;
      }
      for (std::string_view line : text::SplitLines(p)) {
        if (text::IsBlank(line) || HeadingLevel(line) > 0) {
          problems.push_back(where +
                             ": paragraph contains a blank or heading line");
          break;
        }
      }
      if (p.find('\r') != std::string::npos) {
        problems.push_back(where + ": paragraph contains a carriage return");
      }
    }
  }
  return problems;
}

std::size_t CountWords(std::string_view s) { return text::CountWords(s); }

std::size_t CountWords(const Work& work) {
  std::size_t n = 0;
  for (const auto& s : work.sections) {
    for (const auto& p : s.paragraphs) n += text::CountWords(p);
  }
  return n;
}

// ---------------------------------------------------------------------------
// Rubrics

std::string_view ElementName(ReportingElement element) {
  switch (element) {
    case ReportingElement::kExperiential: return "Experiential";
    case ReportingElement::kConceptual: return "Conceptual";
    case ReportingElement::kAnalytical: return "Analytical";
    case ReportingElement::kApplied: return "Applied";
    case ReportingElement::kCommunication: return "Communication";
  }
  return "Unknown";
}

std::optional<ReportingElement> ParseElement(std::string_view name) {
  const std::string lower = text::ToLowerAscii(name);
  for (ReportingElement e : kReportingElements) {
    if (text::ToLowerAscii(ElementName(e)) == lower) return e;
  }
  return std::nullopt;
}

const Criterion* Rubric::Find(std::string_view code) const {
  for (const auto& c : criteria) {
    if (c.code == code) return &c;
  }
  return nullptr;
}

Rubric ParseRubric(std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedRubric, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedRubric, "rubric must be a JSON object");
  }

  Rubric rubric;
  rubric.id = RequireString(doc, "id", "rubric");
  rubric.name = OptionalString(doc, "name", "rubric");
  auto criteria = doc.find("criteria");
  if (criteria == doc.end() || !criteria->is_array() || criteria->empty()) {
    throw Error(ErrorCode::kMalformedRubric,
                "rubric needs a non-empty 'criteria' array");
  }

  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < criteria->size(); ++i) {
    const auto& item = (*criteria)[i];
    const std::string where = "criteria[" + std::to_string(i) + "]";
    if (!item.is_object()) {
      throw Error(ErrorCode::kMalformedRubric, where + " must be an object");
    }
    Criterion c;
    c.code = RequireString(item, "code", where);
    if (c.code.empty()) {
      throw Error(ErrorCode::kMalformedRubric, where + ": empty code");
    }
    if (!seen.insert(c.code).second) {
      throw Error(ErrorCode::kDuplicateCriterionCode,
                  "criterion code '" + c.code + "' appears more than once");
    }
    c.name = RequireString(item, "name", where);
    c.definition = RequireString(item, "definition", where);
    c.reviewer_advice = OptionalString(item, "reviewer_advice", where);
    if (auto mw = item.find("marker_words"); mw != item.end()) {
      c.marker_words = StringArray(*mw, where + ".marker_words");
    }

    auto levels = item.find("level_descriptors");
    if (levels == item.end()) {
      throw Error(ErrorCode::kMissingLevelDescriptors,
                  "criterion '" + c.code + "' has no level_descriptors");
    }
    auto descriptors = StringArray(*levels, where + ".level_descriptors");
    if (descriptors.size() != kLevelCount) {
      throw Error(ErrorCode::kMissingLevelDescriptors,
                  "criterion '" + c.code + "' has " +
                      std::to_string(descriptors.size()) +
                      " level descriptors, expected 5");
    }
    std::move(descriptors.begin(), descriptors.end(),
              c.level_descriptors.begin());

    const std::string element = RequireString(item, "element", where);
    auto parsed = ParseElement(element);
    if (!parsed) {
      throw Error(ErrorCode::kUnknownElement,
                  "criterion '" + c.code + "' names unknown element '" +
                      element + "'");
    }
    c.element = *parsed;
    rubric.criteria.push_back(std::move(c));
  }
  return rubric;
}

std::string SerializeRubric(const Rubric& rubric) {
  ordered_json doc;
  doc["id"] = rubric.id;
  doc["name"] = rubric.name;
  doc["criteria"] = ordered_json::array();
  for (const auto& c : rubric.criteria) {
    ordered_json item;
    item["code"] = c.code;
    item["name"] = c.name;
    item["definition"] = c.definition;
    item["reviewer_advice"] = c.reviewer_advice;
    item["marker_words"] = c.marker_words;
    item["level_descriptors"] = ordered_json::array();
    for (const auto& d : c.level_descriptors) {
      item["level_descriptors"].push_back(d);
    }
    item["element"] = ElementName(c.element);
    doc["criteria"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::vector<std::string> CheckRubric(const Rubric& rubric) {
  std::vector<std::string> problems;
  if (rubric.criteria.empty()) problems.push_back("rubric has no criteria");
  std::unordered_set<std::string> seen;
  for (const auto& c : rubric.criteria) {
    if (c.code.empty()) problems.push_back("criterion with empty code");
    if (!seen.insert(c.code).second) {
      problems.push_back("duplicate criterion code '" + c.code + "'");
    }
    for (std::size_t k = 0; k < kLevelCount; ++k) {
      if (text::IsBlank(c.level_descriptors[k])) {
        problems.push_back("criterion '" + c.code + "' level " +
                           std::to_string(k + 1) + " descriptor is empty");
      }
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Review maps

std::string_view ReviewKindName(ReviewKind kind) {
  switch (kind) {
    case ReviewKind::kPeer: return "peer";
    case ReviewKind::kAI: return "ai";
    case ReviewKind::kSelf: return "self";
    case ReviewKind::kInstructor: return "instructor";
  }
  return "unknown";
}

std::optional<ReviewKind> ParseReviewKind(std::string_view name) {
  const std::string lower = text::ToLowerAscii(name);
  for (ReviewKind k : {ReviewKind::kPeer, ReviewKind::kAI, ReviewKind::kSelf,
                       ReviewKind::kInstructor}) {
    if (ReviewKindName(k) == lower) return k;
  }
  if (lower == "human") return ReviewKind::kPeer;
  return std::nullopt;
}

std::string ReviewMap::Text() const {
  std::vector<std::string> parts;
  for (const auto& node : nodes) {
    std::visit(
        [&](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, CriterionNode> ||
                        std::is_same_v<T, OverallNode>) {
            if (!body.narrative.empty()) parts.push_back(body.narrative);
          } else if constexpr (std::is_same_v<T, AnnotationNode>) {
            if (!body.comment.empty()) parts.push_back(body.comment);
          } else {
            if (!body.text.empty()) parts.push_back(body.text);
          }
        },
        node.body);
  }
  return text::Join(parts, kParagraphSeparator);
}

bool IsAnnotationCode(std::string_view code) {
  if (code.size() < 3 || code.size() > 5) return false;
  const char sign = code.back();
  if (sign != '+' && sign != '-') return false;
  return std::all_of(code.begin(), code.end() - 1,
                     [](char c) { return c >= 'A' && c <= 'Z'; });
}

const std::vector<std::string>& StandardAnnotationCodes() {
  static const std::vector<std::string> codes = [] {
    std::vector<std::string> out;
    for (const char* stem : {"EXP", "CON", "ANA", "APP", "STR", "COM"}) {
      out.push_back(std::string(stem) + "+");
      out.push_back(std::string(stem) + "-");
    }
    return out;
  }();
  return codes;
}

std::string_view ViolationName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kWorkMismatch: return "WorkMismatch";
    case ViolationKind::kRubricMismatch: return "RubricMismatch";
    case ViolationKind::kDuplicateNodeId: return "DuplicateNodeId";
    case ViolationKind::kDanglingEdge: return "DanglingEdge";
    case ViolationKind::kSelfLoop: return "SelfLoop";
    case ViolationKind::kDuplicateCriterionNode: return "DuplicateCriterionNode";
    case ViolationKind::kUnknownCriterion: return "UnknownCriterion";
    case ViolationKind::kRatingOutOfRange: return "RatingOutOfRange";
    case ViolationKind::kBadAnnotationCode: return "BadAnnotationCode";
    case ViolationKind::kAnchorOutOfBounds: return "AnchorOutOfBounds";
    case ViolationKind::kUnknownWork: return "UnknownWork";
    case ViolationKind::kDuplicateReviewId: return "DuplicateReviewId";
  }
  return "Unknown";
}

std::vector<Violation> ValidateReviewMap(const ReviewMap& map, const Work& work,
                                         const Rubric& rubric) {
  std::vector<Violation> out;
  auto add = [&](ViolationKind kind, std::string detail) {
    out.push_back({kind, std::move(detail)});
  };

  if (map.work_id != work.id) {
    add(ViolationKind::kWorkMismatch,
        "review references work '" + map.work_id + "', expected '" + work.id +
            "'");
  }
  if (map.rubric_id != rubric.id) {
    add(ViolationKind::kRubricMismatch,
        "review references rubric '" + map.rubric_id + "', expected '" +
            rubric.id + "'");
  }

  std::vector<std::size_t> section_lengths;
  section_lengths.reserve(work.sections.size());
  for (const auto& s : work.sections) section_lengths.push_back(s.Text().size());

  std::unordered_set<std::string> node_ids;
  std::unordered_set<std::string> criterion_codes;
  for (const auto& node : map.nodes) {
    if (!node_ids.insert(node.id).second) {
      add(ViolationKind::kDuplicateNodeId, "node id '" + node.id + "'");
    }
    if (const auto* c = std::get_if<CriterionNode>(&node.body)) {
      if (rubric.Find(c->criterion_code) == nullptr) {
        add(ViolationKind::kUnknownCriterion,
            "node '" + node.id + "' uses criterion '" + c->criterion_code +
                "'");
      }
      if (!criterion_codes.insert(c->criterion_code).second) {
        add(ViolationKind::kDuplicateCriterionNode,
            "criterion '" + c->criterion_code + "' has more than one node");
      }
      if (c->rating && !IsRating(*c->rating)) {
        add(ViolationKind::kRatingOutOfRange,
            "node '" + node.id + "' rating " + std::to_string(*c->rating));
      }
    } else if (const auto* o = std::get_if<OverallNode>(&node.body)) {
      if (o->rating && !IsRating(*o->rating)) {
        add(ViolationKind::kRatingOutOfRange,
            "node '" + node.id + "' rating " + std::to_string(*o->rating));
      }
    } else if (const auto* a = std::get_if<AnnotationNode>(&node.body)) {
      if (!IsAnnotationCode(a->code)) {
        add(ViolationKind::kBadAnnotationCode,
            "node '" + node.id + "' code '" + a->code + "'");
      }
      const Anchor& anchor = a->anchor;
      if (anchor.section_index >= section_lengths.size()) {
        add(ViolationKind::kAnchorOutOfBounds,
            "node '" + node.id + "' section " +
                std::to_string(anchor.section_index) + " of " +
                std::to_string(section_lengths.size()));
      } else if (anchor.start_char >= anchor.end_char ||
                 anchor.end_char > section_lengths[anchor.section_index]) {
        add(ViolationKind::kAnchorOutOfBounds,
            "node '" + node.id + "' span [" +
                std::to_string(anchor.start_char) + ", " +
                std::to_string(anchor.end_char) + ") in section of length " +
                std::to_string(section_lengths[anchor.section_index]));
      }
    }
  }

  for (const auto& edge : map.edges) {
    if (!node_ids.contains(edge.from) || !node_ids.contains(edge.to)) {
      add(ViolationKind::kDanglingEdge,
          "edge " + edge.from + " -> " + edge.to);
    }
    if (edge.from == edge.to) {
      add(ViolationKind::kSelfLoop, "edge " + edge.from + " -> " + edge.to);
    }
  }
  return out;
}

const Work* ReviewCorpus::FindWork(std::string_view id) const {
  for (const auto& w : works) {
    if (w.id == id) return &w;
  }
  return nullptr;
}

std::string ReviewCorpus::GroupOf(std::string_view work_id) const {
  auto it = work_groups.find(std::string(work_id));
  return it == work_groups.end() ? std::string(kDefaultGroup) : it->second;
}

std::vector<Violation> ValidateCorpus(const ReviewCorpus& corpus) {
  std::vector<Violation> out;
  std::unordered_set<std::string> review_ids;
  for (const auto& review : corpus.reviews) {
    if (!review_ids.insert(review.id).second) {
      out.push_back({ViolationKind::kDuplicateReviewId,
                     "review id '" + review.id + "' appears more than once"});
    }
    const Work* work = corpus.FindWork(review.work_id);
    if (work == nullptr) {
      out.push_back({ViolationKind::kUnknownWork,
                     "review '" + review.id + "' references unknown work '" +
                         review.work_id + "'"});
      continue;
    }
    for (auto& v : ValidateReviewMap(review, *work, corpus.rubric)) {
      v.detail = "review '" + review.id + "': " + v.detail;
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace rubriq
