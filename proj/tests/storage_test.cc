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

#include <unistd.h>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "generators.h"
#include "rubriq/error.h"
#include "rubriq/storage.h"

namespace rubriq {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static int n = 0;
    path_ = fs::temp_directory_path() /
            ("rubriq-storage-" + std::to_string(::getpid()) + "-" +
             std::to_string(n++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

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

void Overwrite(const fs::path& p, const std::string& data) {
  std::ofstream(p, std::ios::binary | std::ios::trunc) << data;
}

struct Crash {};

TEST(Storage, RoundTripsGeneratedCorpora) {
  testing::Gen g(61);
  for (int i = 0; i < 200; ++i) {
    TempDir dir;
    const ReviewCorpus c = testing::RandomCorpus(g);
    SaveCorpus(c, dir.path() / "corpus");
    const ReviewCorpus back = LoadCorpus(dir.path() / "corpus");
    ASSERT_EQ(back, c) << "iteration " << i;
  }
}

TEST(Storage, LayoutAndManifest) {
  TempDir dir;
  testing::Gen g(62);
  ReviewCorpus c = testing::RandomCorpus(g);
  SaveOptions options;
  options.clock = [] {
    return std::chrono::system_clock::time_point(std::chrono::seconds(0));
  };
  const auto manifest = SaveCorpus(c, dir.path(), options);
  EXPECT_EQ(manifest.version, "1");
  EXPECT_EQ(manifest.created_at, "1970-01-01T00:00:00Z");
  EXPECT_TRUE(fs::exists(dir.path() / "rubric.json"));
  for (const auto& w : c.works) {
    EXPECT_TRUE(fs::exists(dir.path() / "works" / (w.id + ".md")));
  }
  for (const auto& r : c.reviews) {
    EXPECT_TRUE(fs::exists(dir.path() / "reviews" / (r.id + ".json")));
  }
  EXPECT_EQ(ManifestFromJson(ReadFile(dir.path() / "manifest.json")), manifest);
}

TEST(Storage, ReviewJsonRoundTripAndNullRating) {
  ReviewMap r{"r", "w", "rub", ReviewKind::kInstructor, "t",
              {{"c", CriterionNode{"x", std::nullopt, "n"}},
               {"a", AnnotationNode{"STR-", Anchor{0, 1, 2}, "c"}},
               {"m", CommentNode{"text"}},
               {"o", OverallNode{"all", 4}}},
              {{"a", "c"}}};
  const std::string json = ReviewMapToJson(r);
  EXPECT_NE(json.find("\"rating\": null"), std::string::npos);
  EXPECT_LT(json.find("\"id\""), json.find("\"work_id\""));
  EXPECT_EQ(ReviewMapFromJson(json), r);
  EXPECT_EQ(CodeOf([] { ReviewMapFromJson("{\"id\": 3}"); }),
            ErrorCode::kSerialization);
  EXPECT_EQ(CodeOf([] { ReviewMapFromJson("[]"); }), ErrorCode::kSerialization);
}

TEST(Storage, MissingManifest) {
  TempDir dir;
  EXPECT_EQ(CodeOf([&] { LoadCorpus(dir.path()); }), ErrorCode::kMissingFile);
}

TEST(Storage, FormatVersionMismatch) {
  TempDir dir;
  testing::Gen g(63);
  SaveCorpus(testing::RandomCorpus(g), dir.path());
  std::string m = ReadFile(dir.path() / "manifest.json");
  const auto pos = m.find("\"version\": \"1\"");
  ASSERT_NE(pos, std::string::npos);
  m.replace(pos, 14, "\"version\": \"99\"");
  Overwrite(dir.path() / "manifest.json", m);
  EXPECT_EQ(CodeOf([&] { LoadCorpus(dir.path()); }),
            ErrorCode::kFormatVersionMismatch);
}

TEST(Storage, MissingListedFile) {
  TempDir dir;
  testing::Gen g(64);
  const ReviewCorpus c = testing::RandomCorpus(g);
  SaveCorpus(c, dir.path());
  fs::remove(dir.path() / "works" / (c.works[0].id + ".md"));
  EXPECT_EQ(CodeOf([&] { LoadCorpus(dir.path()); }), ErrorCode::kMissingFile);
}

TEST(Storage, UnknownWorkIsValidationError) {
  TempDir dir;
  ReviewCorpus c;
  c.rubric = DefaultRubric();
  c.works.push_back(ParseWork("# A\n\nText.", "w"));
  c.reviews.push_back({"r", "w", c.rubric.id, ReviewKind::kPeer, "p", {}, {}});
  SaveCorpus(c, dir.path());
  std::string review = ReadFile(dir.path() / "reviews" / "r.json");
  review.replace(review.find("\"w\""), 3, "\"zz\"");
  Overwrite(dir.path() / "reviews" / "r.json", review);
  try {
    LoadCorpus(dir.path());
    FAIL();
  } catch (const ValidationError& e) {
    ASSERT_FALSE(e.violations().empty());
    EXPECT_EQ(e.violations()[0].kind, ViolationKind::kUnknownWork);
    EXPECT_EQ(e.code(), ErrorCode::kValidationFailed);
  }
}

TEST(Storage, IoErrorUnderRegularFile) {
  TempDir dir;
  Overwrite(dir.path() / "plain", "x");
  EXPECT_EQ(CodeOf([&] {
              WriteFileAtomic(dir.path() / "plain" / "child.json", "{}");
            }),
            ErrorCode::kIo);
  testing::Gen g(65);
  EXPECT_EQ(CodeOf([&] {
              SaveCorpus(testing::RandomCorpus(g), dir.path() / "plain" / "c");
            }),
            ErrorCode::kIo);
}

TEST(Storage, RejectsUnsafeIdsAndBadValues) {
  TempDir dir;
  ReviewCorpus c;
  c.rubric = DefaultRubric();
  c.works.push_back(ParseWork("# A\n\nText.", "../escape"));
  EXPECT_EQ(CodeOf([&] { SaveCorpus(c, dir.path()); }),
            ErrorCode::kSerialization);
  c.works[0].id = "ok";
  c.works[0].sections[0].paragraphs[0] = " untrimmed";
  EXPECT_EQ(CodeOf([&] { SaveCorpus(c, dir.path()); }),
            ErrorCode::kSerialization);
  EXPECT_FALSE(IsSafeId(""));
  EXPECT_FALSE(IsSafeId(".."));
  EXPECT_FALSE(IsSafeId("a/b"));
  EXPECT_TRUE(IsSafeId("work-01"));
}

TEST(AtomicWrite, CrashBeforeRenameLeavesOldContent) {
  TempDir dir;
  const fs::path target = dir.path() / "file.json";
  WriteFileAtomic(target, "old contents");
  const std::string fresh(100000, 'n');
  fs::path seen_temp;
  try {
    WriteFileAtomic(target, fresh, [&](const fs::path& temp, const fs::path& to) {
      seen_temp = temp;
      EXPECT_EQ(to, target);
      EXPECT_EQ(ReadFile(temp), fresh);
      EXPECT_EQ(ReadFile(target), "old contents");
      throw Crash{};
    });
    FAIL();
  } catch (const Crash&) {
  }
  EXPECT_EQ(ReadFile(target), "old contents");
  EXPECT_NE(seen_temp.filename().string().find(".tmp."), std::string::npos);
  WriteFileAtomic(target, fresh);
  EXPECT_EQ(ReadFile(target), fresh);
}

TEST(AtomicWrite, CrashDuringSaveNeverExposesPartialCorpus) {
  testing::Gen g(66);
  for (int crash_at = 0; crash_at < 12; ++crash_at) {
    TempDir dir;
    const ReviewCorpus before = testing::RandomCorpus(g);
    SaveCorpus(before, dir.path());
    ReviewCorpus after = before;
    after.rubric.name += " revised";
    for (auto& w : after.works) w.title += " revised";

    int writes = 0;
    SaveOptions options;
    options.before_rename = [&](const fs::path&, const fs::path&) {
      if (writes++ == crash_at) throw Crash{};
    };
    bool crashed = false;
    try {
      SaveCorpus(after, dir.path(), options);
    } catch (const Crash&) {
      crashed = true;
    }
    const ReviewCorpus loaded = LoadCorpus(dir.path());
    if (crashed) {
      // The manifest is written last, so titles still come from the old one.
      EXPECT_EQ(loaded.works, before.works);
    } else {
      EXPECT_EQ(loaded, after);
    }
  }
}

TEST(Storage, TimestampFormat) {
  using namespace std::chrono;
  EXPECT_EQ(FormatTimestamp(system_clock::time_point(seconds(1700000000))),
            "2023-11-14T22:13:20Z");
}

}  // namespace
}  // namespace rubriq
