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

#ifndef RUBRIQ_SENTIMENT_H_
#define RUBRIQ_SENTIMENT_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rubriq {

enum class SentimentCategory { kEncouraging, kInformational, kCritical };

std::string_view CategoryName(SentimentCategory category);

struct SentimentThresholds {
  double encouraging = 0.25;  // score >= this is encouraging
  double critical = -0.25;    // score <= this is critical

  // Throws Error(kConfig) unless -1 <= critical < encouraging <= 1.
  void Validate() const;
};

SentimentCategory Categorize(double score,
                             const SentimentThresholds& thresholds = {});

// Lowercase word -> valence in [-1, 1].
class Lexicon {
 public:
  Lexicon() = default;

  // Throws Error(kValenceOutOfRange).
  void Set(std::string_view word, double valence);
  const double* Find(std::string_view lowercase_word) const;
  std::size_t size() const { return valences_.size(); }

  // Every valence multiplied by -1.
  Lexicon Negated() const;

 private:
  std::unordered_map<std::string, double> valences_;
};

// Reads `word<TAB>valence` lines; blank lines and lines starting with '#' are
// ignored, keys are lowercased, and a repeated word keeps its last valence.
// Throws Error(kMalformedLine) or Error(kValenceOutOfRange).
Lexicon LoadLexicon(std::string_view tsv);

// Starter lexicon of feedback-domain words with hand-assigned valences.
const Lexicon& DefaultLexicon();
std::string_view DefaultLexiconSource();

// Splits after '.', '!' or '?' when followed by whitespace or end of text.
// Fragments are trimmed and empty ones dropped.
std::vector<std::string> SplitSentences(std::string_view text);

struct SentenceSentiment {
  std::string text;
  double score = 0.0;
  double magnitude = 0.0;
};

struct SentimentResult {
  double score = 0.0;      // mean of sentence scores
  double magnitude = 0.0;  // sum of sentence magnitudes
  std::vector<SentenceSentiment> sentences;
  SentimentCategory category = SentimentCategory::kInformational;
};

// Sentence score is the mean valence of the lexicon words it contains (0
// when none match), clamped to [-1, 1]; sentence magnitude is its absolute
// value.
SentimentResult AnalyzeSentiment(std::string_view text, const Lexicon& lexicon,
                                 const SentimentThresholds& thresholds = {});

}  // namespace rubriq

#endif  // RUBRIQ_SENTIMENT_H_
