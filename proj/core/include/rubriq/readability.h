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

#ifndef RUBRIQ_READABILITY_H_
#define RUBRIQ_READABILITY_H_

#include <cstddef>
#include <string_view>

namespace rubriq {

// Counts of the quantities the grade-level formulas need. Letters are
// alphabetic code points; characters are letters plus digits.
struct TextStats {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t letters = 0;
  std::size_t characters = 0;
  std::size_t syllables = 0;

  friend bool operator==(const TextStats&, const TextStats&) = default;
};

// Vowel groups (a, e, i, o, u, y; case-insensitive), less one for a silent
// final 'e' after a consonant in words of three or more letters, never less
// than 1. A heuristic, not a dictionary lookup.
std::size_t CountSyllables(std::string_view word);

// Words as in CountWords, sentences as in SplitSentences (at least one when
// there are words).
TextStats ComputeTextStats(std::string_view text);

// Each throws Error(kDegenerateInput) when words or sentences is zero.
double FleschKincaidGrade(const TextStats& s);
double ColemanLiauIndex(const TextStats& s);
double AutomatedReadabilityIndex(const TextStats& s);

struct ReadabilityResult {
  double flesch_kincaid = 0.0;
  double coleman_liau = 0.0;
  double ari = 0.0;
  double composite = 0.0;  // mean of the three
};

ReadabilityResult Readability(const TextStats& stats);
// Throws Error(kDegenerateInput) for text without words.
ReadabilityResult CompositeGrade(std::string_view text);

}  // namespace rubriq

#endif  // RUBRIQ_READABILITY_H_
