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

#ifndef RUBRIQ_BENCHMARKS_CORPUS_FIXTURE_H_
#define RUBRIQ_BENCHMARKS_CORPUS_FIXTURE_H_

#include <random>
#include <string>

namespace rubriq::bench {

// Feedback-like prose of roughly `words` words.
inline std::string FeedbackText(std::size_t words, unsigned seed = 1) {
  static constexpr const char* kVocabulary[] = {
      "the",      "argument", "is",        "clear",   "but",     "evidence",
      "remains",  "weak",     "and",       "several", "sources", "are",
      "missing.", "Overall,", "a",         "helpful", "well-organized",
      "essay",    "with",     "insightful", "examples.", "Consider",
      "revising", "the",      "conclusion.",
  };
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kVocabulary) - 1);
  std::string out;
  out.reserve(words * 8);
  for (std::size_t i = 0; i < words; ++i) {
    if (i > 0) out.push_back(' ');
    out += kVocabulary[pick(rng)];
  }
  out += ".";
  return out;
}

}  // namespace rubriq::bench

#endif  // RUBRIQ_BENCHMARKS_CORPUS_FIXTURE_H_
