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

#include "generators.h"
#include "rubriq/error.h"
#include "rubriq/readability.h"

namespace rubriq {
namespace {

struct Fixture {
  const char* text;
  std::size_t words, sentences, letters, characters, syllables;
  double fk, cl, ari;
};

constexpr Fixture kFixtures[] = {
#include "readability_fixtures.inc"
};

TEST(Readability, FixturesMatchOracle) {
  ASSERT_EQ(std::size(kFixtures), 20u);
  for (const auto& f : kFixtures) {
    const TextStats s = ComputeTextStats(f.text);
    EXPECT_EQ(s, (TextStats{f.words, f.sentences, f.letters, f.characters,
                            f.syllables}))
        << f.text;
    const ReadabilityResult r = Readability(s);
    EXPECT_NEAR(r.flesch_kincaid, f.fk, 1e-6) << f.text;
    EXPECT_NEAR(r.coleman_liau, f.cl, 1e-6) << f.text;
    EXPECT_NEAR(r.ari, f.ari, 1e-6) << f.text;
    EXPECT_NEAR(r.composite, (r.flesch_kincaid + r.coleman_liau + r.ari) / 3.0,
                1e-12);
  }
}

TEST(CountSyllables, Heuristic) {
  EXPECT_EQ(CountSyllables("cat"), 1u);
  EXPECT_EQ(CountSyllables("make"), 1u);
  EXPECT_EQ(CountSyllables("the"), 1u);
  EXPECT_EQ(CountSyllables("see"), 1u);
  EXPECT_EQ(CountSyllables("reading"), 2u);
  EXPECT_EQ(CountSyllables("rhythm"), 1u);
  EXPECT_EQ(CountSyllables("2024"), 1u);
  EXPECT_EQ(CountSyllables("education"), 4u);
}

TEST(Readability, DegenerateInput) {
  for (const char* t : {"", "   ", "...", "!!"}) {
    try {
      CompositeGrade(t);
      FAIL() << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegenerateInput);
    }
  }
}

TEST(ReadabilityProperties, DuplicationInvariance) {
  testing::Gen g(41);
  for (int i = 0; i < 500; ++i) {
    const std::string t = g.Sentences(1, 6);
    const auto a = CompositeGrade(t);
    const auto b = CompositeGrade(t + " " + t);
    EXPECT_NEAR(a.flesch_kincaid, b.flesch_kincaid, 1e-9) << t;
    EXPECT_NEAR(a.coleman_liau, b.coleman_liau, 1e-9) << t;
    EXPECT_NEAR(a.ari, b.ari, 1e-9) << t;
    EXPECT_NEAR(a.composite, b.composite, 1e-9) << t;
  }
}

TEST(ReadabilityProperties, StatsInvariants) {
  testing::Gen g(42);
  for (int i = 0; i < 500; ++i) {
    const TextStats s = ComputeTextStats(g.Sentences(1, 6));
    ASSERT_GE(s.words, 1u);
    EXPECT_GE(s.syllables, s.words);
    EXPECT_GE(s.sentences, 1u);
    EXPECT_GE(s.characters, s.letters);
    for (int k = 0; k < 5; ++k) EXPECT_GE(CountSyllables(g.Word()), 1u);
  }
}

}  // namespace
}  // namespace rubriq
