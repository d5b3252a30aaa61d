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

#ifndef RUBRIQ_TEXT_H_
#define RUBRIQ_TEXT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Tokenization shared by the corpus model, sentiment and readability code.
// Input is UTF-8; malformed sequences decode as U+FFFD and never abort.
namespace rubriq::text {

enum class CharClass { kLetter, kDigit, kJoiner, kOther };

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset of the first code unit
  std::size_t length;  // number of code units
};

// Decodes the code point starting at `offset`. Requires offset < s.size().
CodePoint DecodeAt(std::string_view s, std::size_t offset);

// Joiners are apostrophes and hyphens; they only join when both neighbours
// are alphanumeric. Non-ASCII code points outside the common punctuation and
// symbol blocks are treated as letters.
CharClass Classify(char32_t cp);

std::size_t CountCodePoints(std::string_view s);

// A word is a maximal run of letters/digits, including apostrophes and
// hyphens that sit between two alphanumerics ("isn't", "well-formed").
std::vector<std::string_view> Words(std::string_view s);
std::size_t CountWords(std::string_view s);

std::string_view Trim(std::string_view s);
bool IsBlank(std::string_view s);
std::string ToLowerAscii(std::string_view s);

// Splits on '\n'; a trailing '\r' on each line is dropped.
std::vector<std::string_view> SplitLines(std::string_view s);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

// 64-bit FNV-1a. Stable across platforms and runs.
std::uint64_t StableHash(std::string_view s,
                         std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace rubriq::text

#endif  // RUBRIQ_TEXT_H_
