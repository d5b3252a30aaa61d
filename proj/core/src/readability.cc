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

#include "rubriq/readability.h"

#include <string>

#include "rubriq/error.h"
#include "rubriq/sentiment.h"
#include "rubriq/text.h"

namespace rubriq {
namespace {

bool IsVowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
    case 'A': case 'E': case 'I': case 'O': case 'U': case 'Y':
      return true;
    default:
      return false;
  }
}

bool IsAsciiLetter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

void RequireWords(const TextStats& s) {
  if (s.words == 0 || s.sentences == 0) {
    throw Error(ErrorCode::kDegenerateInput,
                "readability needs at least one word and one sentence");
  }
}

}  // namespace

std::size_t CountSyllables(std::string_view word) {
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : word) {
    const bool vowel = IsVowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  const std::size_t n = word.size();
  if (n >= 3 && (word[n - 1] == 'e' || word[n - 1] == 'E') &&
      IsAsciiLetter(word[n - 2]) && !IsVowel(word[n - 2]) && groups > 0) {
    --groups;
  }
  return groups == 0 ? 1 : groups;
}

TextStats ComputeTextStats(std::string_view input) {
  TextStats s;
  const auto words = text::Words(input);
  s.words = words.size();
  for (std::string_view w : words) s.syllables += CountSyllables(w);
  if (s.words > 0) {
    s.sentences = std::max<std::size_t>(1, SplitSentences(input).size());
  }
  for (std::size_t i = 0; i < input.size();) {
    const auto cp = text::DecodeAt(input, i);
    switch (text::Classify(cp.value)) {
      case text::CharClass::kLetter:
        ++s.letters;
        ++s.characters;
        break;
      case text::CharClass::kDigit:
        ++s.characters;
        break;
      default:
        break;
    }
    i += cp.length;
  }
  return s;
}

double FleschKincaidGrade(const TextStats& s) {
  RequireWords(s);
  const double words = static_cast<double>(s.words);
  return 0.39 * (words / static_cast<double>(s.sentences)) +
         11.8 * (static_cast<double>(s.syllables) / words) - 15.59;
}

double ColemanLiauIndex(const TextStats& s) {
  RequireWords(s);
  const double words = static_cast<double>(s.words);
  const double letters_per_100 = 100.0 * static_cast<double>(s.letters) / words;
  const double sentences_per_100 =
      100.0 * static_cast<double>(s.sentences) / words;
  return 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8;
}

double AutomatedReadabilityIndex(const TextStats& s) {
  RequireWords(s);
  const double words = static_cast<double>(s.words);
  return 4.71 * (static_cast<double>(s.characters) / words) +
         0.5 * (words / static_cast<double>(s.sentences)) - 21.43;
}

ReadabilityResult Readability(const TextStats& stats) {
  ReadabilityResult r;
  r.flesch_kincaid = FleschKincaidGrade(stats);
  r.coleman_liau = ColemanLiauIndex(stats);
  r.ari = AutomatedReadabilityIndex(stats);
  r.composite = (r.flesch_kincaid + r.coleman_liau + r.ari) / 3.0;
  return r;
}

ReadabilityResult CompositeGrade(std::string_view text) {
  return Readability(ComputeTextStats(text));
}

}  // namespace rubriq
