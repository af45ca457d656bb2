// Copyright 2026 The qgen Authors.
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

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>

#include "qgen/analysis.h"

namespace qgen::analysis {
namespace {

// Lowercased, without the trailing period.
const std::unordered_set<std::string>& Abbreviations() {
  static const auto* set = new std::unordered_set<std::string>{
      "mr",   "mrs",  "ms",   "dr",    "prof", "sr",   "jr",   "st",
      "mt",   "ft",   "vs",   "etc",   "cf",   "al",   "inc",  "ltd",
      "co",   "corp", "gen",  "gov",   "sen",  "rep",  "rev",  "col",
      "lt",   "sgt",  "capt", "cmdr",  "adm",  "jan",  "feb",  "mar",
      "apr",  "jun",  "jul",  "aug",   "sep",  "sept", "oct",  "nov",
      "dec",  "vol",  "fig",  "approx", "est", "dept", "univ", "ave",
      "blvd", "ca",   "c",    "op",    "pp",   "ed",   "eds",  "bros",
  };
  return *set;
}

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Closing quotes and brackets that may follow a terminator. Returns the byte
// length matched at pos, or 0.
std::size_t CloserLength(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  static constexpr std::string_view kMultiByte[] = {
      "\xE2\x80\x9D",  // right double quotation mark
      "\xE2\x80\x99",  // right single quotation mark
      "\xC2\xBB",      // right guillemet
  };
  for (auto closer : kMultiByte)
    if (text.substr(pos, closer.size()) == closer) return closer.size();
  return 0;
}

bool CanOpenSentence(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x80) return true;  // non-ASCII: quotes, accented capitals, CJK
  return std::isupper(u) || std::isdigit(u) || c == '"' || c == '\'' ||
         c == '(' || c == '[';
}

// The word ending right before the period at dot, minus opening punctuation.
std::string_view WordBefore(std::string_view text, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && !IsSpace(text[b - 1])) --b;
  std::string_view w = text.substr(b, dot - b);
  while (!w.empty() && (w.front() == '(' || w.front() == '"' ||
                        w.front() == '\'' || w.front() == '['))
    w.remove_prefix(1);
  return w;
}

bool IsDottedAcronym(std::string_view w) {
  if (w.find('.') == std::string_view::npos) return false;
  std::size_t seg = 0;
  for (char c : w) {
    if (c == '.') {
      if (seg == 0 || seg > 2) return false;
      seg = 0;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      ++seg;
    } else {
      return false;
    }
  }
  return seg >= 1 && seg <= 2;
}

bool IsAbbreviation(std::string_view word, char next) {
  if (word.empty()) return false;
  if (word.size() == 1 && std::isupper(static_cast<unsigned char>(word[0])))
    return true;  // initial
  if (IsDottedAcronym(word)) return true;
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "no" || lower == "nos")
    return std::isdigit(static_cast<unsigned char>(next));
  return Abbreviations().contains(lower);
}

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::size_t> cuts;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::size_t j = i + 1;
    while (j < text.size() && IsTerminator(text[j])) ++j;
    const bool single_period = text[start] == '.' && j == start + 1;
    while (j < text.size()) {
      const std::size_t len = CloserLength(text, j);
      if (len == 0) break;
      j += len;
    }
    i = j;
    if (j >= text.size() || !IsSpace(text[j])) continue;
    std::size_t k = j;
    while (k < text.size() && IsSpace(text[k])) ++k;
    if (k >= text.size() || !CanOpenSentence(text[k])) continue;
    if (single_period && IsAbbreviation(WordBefore(text, start), text[k]))
      continue;
    cuts.push_back(j);
  }

  std::vector<std::string> sentences;
  std::size_t last = 0;
  cuts.push_back(text.size());
  for (std::size_t cut : cuts) {
    std::string s = Trim(text.substr(last, cut - last));
    if (!s.empty()) sentences.push_back(std::move(s));
    last = cut;
  }
  return sentences;
}

}  // namespace qgen::analysis
