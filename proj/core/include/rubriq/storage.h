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

#ifndef RUBRIQ_STORAGE_H_
#define RUBRIQ_STORAGE_H_

#include <chrono>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rubriq/corpus.h"
#include "rubriq/error.h"

// Corpus directory layout (format version "1"):
//
//   <root>/manifest.json     version, timestamps, ids, work metadata
//   <root>/rubric.json       rubric in the rubric JSON format
//   <root>/works/<id>.md     work sections in heading markup
//   <root>/reviews/<id>.json review maps
//
// Every file is written to a temporary sibling and renamed into place.
namespace rubriq {

inline constexpr std::string_view kFormatVersion = "1";

struct WorkMetadata {
  std::string id;
  std::string title;
  std::string author_alias;
  std::optional<std::string> group;

  friend bool operator==(const WorkMetadata&, const WorkMetadata&) = default;
};

struct CorpusManifest {
  std::string version{kFormatVersion};
  std::string created_at;  // ISO-8601 UTC
  std::string rubric_id;
  std::vector<std::string> work_ids;
  std::vector<std::string> review_ids;
  std::vector<WorkMetadata> works;

  friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

using BeforeRename = std::function<void(const std::filesystem::path& temp,
                                        const std::filesystem::path& target)>;

struct SaveOptions {
  std::function<std::chrono::system_clock::time_point()> clock;
  // Test hook run after the temporary file is complete and before rename.
  BeforeRename before_rename;
};

// Throws Error(kIo) or Error(kSerialization).
CorpusManifest SaveCorpus(const ReviewCorpus& corpus,
                          const std::filesystem::path& root,
                          const SaveOptions& options = {});

// Throws Error(kMissingFile), Error(kFormatVersionMismatch),
// Error(kSerialization) or ValidationError.
ReviewCorpus LoadCorpus(const std::filesystem::path& root);

// Stable key order; absent ratings are written as null.
std::string ReviewMapToJson(const ReviewMap& review);
// Throws Error(kSerialization).
ReviewMap ReviewMapFromJson(std::string_view json);

std::string ManifestToJson(const CorpusManifest& manifest);
CorpusManifest ManifestFromJson(std::string_view json);

// Throws Error(kMissingFile) or Error(kIo).
std::string ReadFile(const std::filesystem::path& path);
// Writes to a temporary sibling, syncs, then renames over `path`.
// Throws Error(kIo).
void WriteFileAtomic(const std::filesystem::path& path, std::string_view data,
                     const BeforeRename& before_rename = {});

// True for ids usable as file names: non-empty, no path separators or
// control characters, not "." or "..".
bool IsSafeId(std::string_view id);

std::string FormatTimestamp(std::chrono::system_clock::time_point t);

}  // namespace rubriq

#endif  // RUBRIQ_STORAGE_H_
