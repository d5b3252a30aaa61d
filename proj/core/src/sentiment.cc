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

#include "rubriq/sentiment.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "rubriq/error.h"
#include "rubriq/text.h"

namespace rubriq {
namespace internal {
extern const std::string_view kDefaultLexiconTsv;
}  // namespace internal

namespace {

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::string_view CategoryName(SentimentCategory category) {
  switch (category) {
    case SentimentCategory::kEncouraging: return "encouraging";
    case SentimentCategory::kInformational: return "informational";
    case SentimentCategory::kCritical: return "critical";
  }
  return "unknown";
}

void SentimentThresholds::Validate() const {
  if (!(critical >= -1.0 && critical < encouraging && encouraging <= 1.0)) {
    throw Error(ErrorCode::kConfig,
                "sentiment thresholds must satisfy -1 <= critical < "
                "encouraging <= 1");
  }
}

SentimentCategory Categorize(double score,
                             const SentimentThresholds& thresholds) {
  if (score >= thresholds.encouraging) return SentimentCategory::kEncouraging;
  if (score <= thresholds.critical) return SentimentCategory::kCritical;
  return SentimentCategory::kInformational;
}

void Lexicon::Set(std::string_view word, double valence) {
  if (!std::isfinite(valence) || valence < -1.0 || valence > 1.0) {
    throw Error(ErrorCode::kValenceOutOfRange,
                "valence for '" + std::string(word) + "' must lie in [-1, 1]");
  }
  valences_[text::ToLowerAscii(word)] = valence;
}

const double* Lexicon::Find(std::string_view lowercase_word) const {
  auto it = valences_.find(std::string(lowercase_word));
  return it == valences_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::Negated() const {
  Lexicon out;
  for (const auto& [word, v] : valences_) out.valences_.emplace(word, -v);
  return out;
}

Lexicon LoadLexicon(std::string_view tsv) {
  Lexicon lexicon;
  std::size_t line_no = 0;
  for (std::string_view line : text::SplitLines(tsv)) {
    ++line_no;
    if (text::IsBlank(line) || text::Trim(line).front() == '#') continue;
    const auto where = "lexicon line " + std::to_string(line_no);
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": expected word<TAB>valence");
    }
    const std::string_view word = text::Trim(line.substr(0, tab));
    const std::string_view field = text::Trim(line.substr(tab + 1));
    if (word.empty() || field.empty()) {
      throw Error(ErrorCode::kMalformedLine, where + ": empty field");
    }
    double valence = 0.0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), valence);
    if (ec == std::errc::result_out_of_range) {
      throw Error(ErrorCode::kValenceOutOfRange, where + ": valence overflow");
    }
    if (ec != std::errc() || end != field.data() + field.size()) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": '" + std::string(field) + "' is not a number");
    }
    try {
      lexicon.Set(word, valence);
    } catch (const Error& e) {
      throw Error(e.code(), where + ": valence " + std::string(field) +
                                " outside [-1, 1]");
    }
  }
  return lexicon;
}

std::string_view DefaultLexiconSource() { return internal::kDefaultLexiconTsv; }

const Lexicon& DefaultLexicon() {
  static const Lexicon lexicon = LoadLexicon(internal::kDefaultLexiconTsv);
  return lexicon;
}

std::vector<std::string> SplitSentences(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    const std::string_view piece = text::Trim(s.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
    start = end;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (IsTerminator(s[i]) && (i + 1 == s.size() || IsSpace(s[i + 1]))) {
      emit(i + 1);
    }
  }
  emit(s.size());
  return out;
}

SentimentResult AnalyzeSentiment(std::string_view input, const Lexicon& lexicon,
                                 const SentimentThresholds& thresholds) {
  SentimentResult result;
  double score_sum = 0.0;
  for (auto& sentence : SplitSentences(input)) {
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::string_view word : text::Words(sentence)) {
      if (const double* v = lexicon.Find(text::ToLowerAscii(word))) {
        sum += *v;
        ++hits;
      }
    }
    const double score =
        hits == 0 ? 0.0
                  : std::clamp(sum / static_cast<double>(hits), -1.0, 1.0);
    score_sum += score;
    result.magnitude += std::abs(score);
    result.sentences.push_back({std::move(sentence), score, std::abs(score)});
  }
  if (!result.sentences.empty()) {
    result.score = std::clamp(
        score_sum / static_cast<double>(result.sentences.size()), -1.0, 1.0);
  }
  result.category = Categorize(result.score, thresholds);
  return result;
}

}  // namespace rubriq
