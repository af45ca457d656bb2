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

#ifndef QGEN_UTF8_H_
#define QGEN_UTF8_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qgen::utf8 {

// Length in bytes of the sequence introduced by lead byte c. Invalid lead
// bytes count as a single byte so that offsets stay total over bad input.
std::size_t SequenceLength(unsigned char c);

// Number of Unicode scalar values in text.
std::size_t CodepointCount(std::string_view text);

// Byte offset of the codepoint_index-th scalar value. Returns text.size() for
// the one-past-the-end index and nullopt beyond it.
std::optional<std::size_t> ByteOffset(std::string_view text,
                                      std::size_t codepoint_index);

// Decodes the scalar value starting at text[pos]; advances pos. Invalid
// sequences decode as U+FFFD and consume one byte.
char32_t DecodeAt(std::string_view text, std::size_t& pos);

void AppendCodepoint(char32_t cp, std::string& out);

}  // namespace qgen::utf8

#endif  // QGEN_UTF8_H_
