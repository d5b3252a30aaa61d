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

#include "rubriq/storage.h"

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace rubriq {
namespace fs = std::filesystem;

namespace {

using ordered_json = nlohmann::ordered_json;

std::string DescribeViolations(const std::vector<Violation>& violations) {
  std::string out = std::to_string(violations.size()) + " violation(s)";
  for (const auto& v : violations) {
    out += "\n  ";
    out += ViolationName(v.kind);
    out += ": ";
    out += v.detail;
  }
  return out;
}

std::string ErrnoText(int err) { return std::strerror(err); }

ordered_json OptionalRating(const std::optional<int>& r) {
  return r ? ordered_json(*r) : ordered_json(nullptr);
}

std::optional<int> ReadRating(const nlohmann::json& node) {
  auto it = node.find("rating");
  if (it == node.end() || it->is_null()) return std::nullopt;
  return it->get<int>();
}

void RequireSafeId(std::string_view id, std::string_view what) {
  if (!IsSafeId(id)) {
    throw Error(ErrorCode::kSerialization,
                std::string(what) + " id '" + std::string(id) +
                    "' cannot be used as a file name");
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::kValidationFailed, DescribeViolations(violations)),
      violations_(std::move(violations)) {}

bool IsSafeId(std::string_view id) {
  if (id.empty() || id == "." || id == "..") return false;
  for (char c : id) {
    if (c == '/' || c == '\\' || static_cast<unsigned char>(c) < 0x20) {
      return false;
    }
  }
  return true;
}

std::string FormatTimestamp(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string ReadFile(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    throw Error(ErrorCode::kMissingFile, path.string() + " does not exist");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return buf.str();
}

void WriteFileAtomic(const fs::path& path, std::string_view data,
                     const BeforeRename& before_rename) {
  static std::atomic<unsigned> counter{0};
  fs::path temp = path;
  temp += ".tmp." + std::to_string(::getpid()) + "." +
          std::to_string(counter.fetch_add(1));

  const int fd = ::open(temp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC,
                        0644);
  if (fd < 0) {
    throw Error(ErrorCode::kIo,
                "cannot create " + temp.string() + ": " + ErrnoText(errno));
  }
  std::size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      ::unlink(temp.c_str());
      throw Error(ErrorCode::kIo,
                  "cannot write " + temp.string() + ": " + ErrnoText(err));
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) {
    const int err = errno;
    ::unlink(temp.c_str());
    throw Error(ErrorCode::kIo,
                "cannot flush " + temp.string() + ": " + ErrnoText(err));
  }

  if (before_rename) before_rename(temp, path);

  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into " + path.string());
  }
}

// ---------------------------------------------------------------------------

std::string ReviewMapToJson(const ReviewMap& review) {
  ordered_json j;
  j["id"] = review.id;
  j["work_id"] = review.work_id;
  j["rubric_id"] = review.rubric_id;
  j["kind"] = ReviewKindName(review.kind);
  j["reviewer_alias"] = review.reviewer_alias;
  j["nodes"] = ordered_json::array();
  for (const auto& node : review.nodes) {
    ordered_json n;
    n["id"] = node.id;
    std::visit(
        [&](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, CriterionNode>) {
            n["type"] = "criterion";
            n["criterion_code"] = body.criterion_code;
            n["rating"] = OptionalRating(body.rating);
            n["narrative"] = body.narrative;
          } else if constexpr (std::is_same_v<T, AnnotationNode>) {
            n["type"] = "annotation";
            n["code"] = body.code;
            n["anchor"]["section_index"] = body.anchor.section_index;
            n["anchor"]["start_char"] = body.anchor.start_char;
            n["anchor"]["end_char"] = body.anchor.end_char;
            n["comment"] = body.comment;
          } else if constexpr (std::is_same_v<T, CommentNode>) {
            n["type"] = "comment";
            n["text"] = body.text;
          } else {
            n["type"] = "overall";
            n["rating"] = OptionalRating(body.rating);
            n["narrative"] = body.narrative;
          }
        },
        node.body);
    j["nodes"].push_back(std::move(n));
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : review.edges) {
    j["edges"].push_back(ordered_json::array({e.from, e.to}));
  }
  return j.dump(2) + "\n";
}

ReviewMap ReviewMapFromJson(std::string_view source) {
  try {
    const auto j = nlohmann::json::parse(source);
    ReviewMap review;
    review.id = j.at("id").get<std::string>();
    review.work_id = j.at("work_id").get<std::string>();
    review.rubric_id = j.at("rubric_id").get<std::string>();
    const auto kind = j.at("kind").get<std::string>();
    auto parsed = ParseReviewKind(kind);
    if (!parsed) {
      throw Error(ErrorCode::kSerialization,
                  "unknown review kind '" + kind + "'");
    }
    review.kind = *parsed;
    review.reviewer_alias = j.value("reviewer_alias", std::string());
    for (const auto& n : j.at("nodes")) {
      Node node;
      node.id = n.at("id").get<std::string>();
      const auto type = n.at("type").get<std::string>();
      if (type == "criterion") {
        node.body = CriterionNode{n.at("criterion_code").get<std::string>(),
                                  ReadRating(n),
                                  n.value("narrative", std::string())};
      } else if (type == "annotation") {
        const auto& a = n.at("anchor");
        node.body = AnnotationNode{
            n.at("code").get<std::string>(),
            Anchor{a.at("section_index").get<std::size_t>(),
                   a.at("start_char").get<std::size_t>(),
                   a.at("end_char").get<std::size_t>()},
            n.value("comment", std::string())};
      } else if (type == "comment") {
        node.body = CommentNode{n.at("text").get<std::string>()};
      } else if (type == "overall") {
        node.body = OverallNode{n.value("narrative", std::string()),
                                ReadRating(n)};
      } else {
        throw Error(ErrorCode::kSerialization,
                    "unknown node type '" + type + "'");
      }
      review.nodes.push_back(std::move(node));
    }
    if (auto edges = j.find("edges"); edges != j.end()) {
      for (const auto& e : *edges) {
        if (!e.is_array() || e.size() != 2) {
          throw Error(ErrorCode::kSerialization,
                      "edges must be [from, to] pairs");
        }
        review.edges.push_back(
            {e[0].get<std::string>(), e[1].get<std::string>()});
      }
    }
    return review;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSerialization,
                std::string("malformed review: ") + e.what());
  }
}

std::string ManifestToJson(const CorpusManifest& m) {
  ordered_json j;
  j["version"] = m.version;
  j["created_at"] = m.created_at;
  j["rubric_id"] = m.rubric_id;
  j["work_ids"] = m.work_ids;
  j["review_ids"] = m.review_ids;
  j["works"] = ordered_json::array();
  for (const auto& w : m.works) {
    ordered_json item;
    item["id"] = w.id;
    item["title"] = w.title;
    item["author_alias"] = w.author_alias;
    item["group"] = w.group ? ordered_json(*w.group) : ordered_json(nullptr);
    j["works"].push_back(std::move(item));
  }
  return j.dump(2) + "\n";
}

CorpusManifest ManifestFromJson(std::string_view source) {
  try {
    const auto j = nlohmann::json::parse(source);
    CorpusManifest m;
    const auto& version = j.at("version");
    m.version = version.is_string() ? version.get<std::string>()
                                    : version.dump();
    if (m.version != kFormatVersion) {
      throw Error(ErrorCode::kFormatVersionMismatch,
                  "corpus format version '" + m.version + "', expected '" +
                      std::string(kFormatVersion) + "'");
    }
    m.created_at = j.value("created_at", std::string());
    m.rubric_id = j.at("rubric_id").get<std::string>();
    m.work_ids = j.at("work_ids").get<std::vector<std::string>>();
    m.review_ids = j.at("review_ids").get<std::vector<std::string>>();
    if (auto works = j.find("works"); works != j.end()) {
      for (const auto& w : *works) {
        WorkMetadata meta;
        meta.id = w.at("id").get<std::string>();
        meta.title = w.value("title", std::string());
        meta.author_alias = w.value("author_alias", std::string());
        if (auto g = w.find("group"); g != w.end() && !g->is_null()) {
          meta.group = g->get<std::string>();
        }
        m.works.push_back(std::move(meta));
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSerialization,
                std::string("malformed manifest: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

CorpusManifest SaveCorpus(const ReviewCorpus& corpus, const fs::path& root,
                          const SaveOptions& options) {
  RequireSafeId(corpus.rubric.id, "rubric");
  if (auto problems = CheckRubric(corpus.rubric); !problems.empty()) {
    throw Error(ErrorCode::kSerialization, "rubric: " + problems.front());
  }

  CorpusManifest manifest;
  manifest.rubric_id = corpus.rubric.id;
  std::unordered_set<std::string> seen;
  for (const auto& w : corpus.works) {
    RequireSafeId(w.id, "work");
    if (!seen.insert(w.id).second) {
      throw Error(ErrorCode::kSerialization,
                  "work id '" + w.id + "' appears more than once");
    }
    if (auto problems = CheckWork(w); !problems.empty()) {
      throw Error(ErrorCode::kSerialization,
                  "work '" + w.id + "': " + problems.front());
    }
    manifest.work_ids.push_back(w.id);
    WorkMetadata meta{w.id, w.title, w.author_alias, std::nullopt};
    if (auto g = corpus.work_groups.find(w.id); g != corpus.work_groups.end()) {
      meta.group = g->second;
    }
    manifest.works.push_back(std::move(meta));
  }
  seen.clear();
  for (const auto& r : corpus.reviews) {
    RequireSafeId(r.id, "review");
    if (!seen.insert(r.id).second) {
      throw Error(ErrorCode::kSerialization,
                  "review id '" + r.id + "' appears more than once");
    }
    manifest.review_ids.push_back(r.id);
  }

  std::error_code ec;
  fs::create_directories(root / "works", ec);
  if (!ec) fs::create_directories(root / "reviews", ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create corpus layout under " + root.string() + ": " +
                    ec.message());
  }

  const auto& hook = options.before_rename;
  WriteFileAtomic(root / "rubric.json", SerializeRubric(corpus.rubric), hook);
  for (const auto& w : corpus.works) {
    WriteFileAtomic(root / "works" / (w.id + ".md"), SerializeWork(w), hook);
  }
  for (const auto& r : corpus.reviews) {
    WriteFileAtomic(root / "reviews" / (r.id + ".json"), ReviewMapToJson(r),
                    hook);
  }

  const auto now = options.clock ? options.clock()
                                 : std::chrono::system_clock::now();
  manifest.created_at = FormatTimestamp(now);
  WriteFileAtomic(root / "manifest.json", ManifestToJson(manifest), hook);
  return manifest;
}

ReviewCorpus LoadCorpus(const fs::path& root) {
  const CorpusManifest manifest =
      ManifestFromJson(ReadFile(root / "manifest.json"));

  ReviewCorpus corpus;
  corpus.rubric = ParseRubric(ReadFile(root / "rubric.json"));
  std::vector<Violation> violations;
  if (corpus.rubric.id != manifest.rubric_id) {
    violations.push_back({ViolationKind::kRubricMismatch,
                          "manifest names rubric '" + manifest.rubric_id +
                              "', rubric.json has '" + corpus.rubric.id + "'"});
  }

  for (const auto& id : manifest.work_ids) {
    RequireSafeId(id, "work");
    Work work = ParseWork(ReadFile(root / "works" / (id + ".md")), id);
    for (const auto& meta : manifest.works) {
      if (meta.id != id) continue;
      work.title = meta.title;
      work.author_alias = meta.author_alias;
      if (meta.group) corpus.work_groups[id] = *meta.group;
    }
    corpus.works.push_back(std::move(work));
  }
  for (const auto& id : manifest.review_ids) {
    RequireSafeId(id, "review");
    ReviewMap review =
        ReviewMapFromJson(ReadFile(root / "reviews" / (id + ".json")));
    if (review.id != id) {
      throw Error(ErrorCode::kSerialization,
                  "reviews/" + id + ".json holds review '" + review.id + "'");
    }
    corpus.reviews.push_back(std::move(review));
  }

  auto more = ValidateCorpus(corpus);
  violations.insert(violations.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return corpus;
}

}  // namespace rubriq
