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

#include "rubriq/text.h"

#include <algorithm>

namespace rubriq::text {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

bool InRange(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

}  // namespace

CodePoint DecodeAt(std::string_view s, std::size_t offset) {
  const auto lead = static_cast<unsigned char>(s[offset]);
  if (lead < 0x80) return {lead, offset, 1};

  std::size_t len = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    return {kReplacement, offset, 1};
  }
  if (offset + len > s.size()) return {kReplacement, offset, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(s[offset + i]);
    if (!IsContinuation(c)) return {kReplacement, offset, 1};
    cp = (cp << 6) | (c & 0x3F);
  }
  // Overlong forms and surrogates.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
      InRange(cp, 0xD800, 0xDFFF)) {
    return {kReplacement, offset, 1};
  }
  return {cp, offset, len};
}

CharClass Classify(char32_t cp) {
  if (cp < 0x80) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) {
      return CharClass::kLetter;
    }
    if (cp >= '0' && cp <= '9') return CharClass::kDigit;
    if (cp == '\'' || cp == '-') return CharClass::kJoiner;
    return CharClass::kOther;
  }
  if (cp == 0x2019 || cp == 0x2010 || cp == 0x2011) return CharClass::kJoiner;
  if (InRange(cp, 0x80, 0xBF) || cp == 0xD7 || cp == 0xF7 ||
      InRange(cp, 0x2000, 0x2BFF) || InRange(cp, 0x3000, 0x303F) ||
      InRange(cp, 0xFE30, 0xFE4F) || InRange(cp, 0xFF00, 0xFF0F) ||
      InRange(cp, 0xFFF0, 0xFFFF) || cp >= 0x1F000) {
    return CharClass::kOther;
  }
  return CharClass::kLetter;
}

std::size_t CountCodePoints(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += DecodeAt(s, i).length) ++n;
  return n;
}

std::vector<std::string_view> Words(std::string_view s) {
  std::vector<CodePoint> cps;
  cps.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    cps.push_back(DecodeAt(s, i));
    i += cps.back().length;
  }
  auto alnum = [&](std::size_t k) {
    const CharClass c = Classify(cps[k].value);
    return c == CharClass::kLetter || c == CharClass::kDigit;
  };

  std::vector<std::string_view> words;
  std::size_t k = 0;
  while (k < cps.size()) {
    if (!alnum(k)) {
      ++k;
      continue;
    }
    const std::size_t begin = k;
    std::size_t end = k + 1;  // one past the last code point of the word
    while (end < cps.size()) {
      if (alnum(end)) {
        ++end;
      } else if (Classify(cps[end].value) == CharClass::kJoiner &&
                 end + 1 < cps.size() && alnum(end + 1)) {
        end += 2;
      } else {
        break;
      }
    }
    const std::size_t first_byte = cps[begin].offset;
    const std::size_t last_byte = cps[end - 1].offset + cps[end - 1].length;
    words.push_back(s.substr(first_byte, last_byte - first_byte));
    k = end;
  }
  return words;
}

std::size_t CountWords(std::string_view s) { return Words(s).size(); }

std::string_view Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\n\r\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

bool IsBlank(std::string_view s) { return Trim(s).empty(); }

std::string ToLowerAscii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  });
  return out;
}

std::vector<std::string_view> SplitLines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto nl = s.find('\n', start);
    if (nl == std::string_view::npos) nl = s.size();
    std::string_view line = s.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

std::uint64_t StableHash(std::string_view s, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace rubriq::text
