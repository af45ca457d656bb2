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

#include "qgen/utf8.h"

#include <gtest/gtest.h>

namespace qgen::utf8 {
namespace {

TEST(Utf8Test, CountsScalarValuesNotBytes) {
  EXPECT_EQ(CodepointCount(""), 0u);
  EXPECT_EQ(CodepointCount("abc"), 3u);
  EXPECT_EQ(CodepointCount("24–10"), 5u);     // en dash, 3 bytes
  EXPECT_EQ(CodepointCount("Beyoncé"), 7u);   // 2-byte e-acute
  EXPECT_EQ(CodepointCount("\U0001F600x"), 2u);    // 4-byte emoji
}

TEST(Utf8Test, ByteOffsetIsTotalUpToOnePastTheEnd) {
  const std::string s = "a–b";
  EXPECT_EQ(ByteOffset(s, 0), 0u);
  EXPECT_EQ(ByteOffset(s, 1), 1u);
  EXPECT_EQ(ByteOffset(s, 2), 4u);
  EXPECT_EQ(ByteOffset(s, 3), 5u);
  EXPECT_EQ(ByteOffset(s, 4), std::nullopt);
}

TEST(Utf8Test, InvalidBytesDecodeAsReplacementOneByteAtATime) {
  const std::string s = "\xff" "a";
  std::size_t pos = 0;
  EXPECT_EQ(DecodeAt(s, pos), U'�');
  EXPECT_EQ(pos, 1u);
  EXPECT_EQ(DecodeAt(s, pos), U'a');
  EXPECT_EQ(CodepointCount("\xc3"), 1u);  // truncated sequence
}

TEST(Utf8Test, EncodeDecodeRoundTrip) {
  for (char32_t cp : {U'A', U'é', U'–', U'\U0001F600'}) {
    std::string out;
    AppendCodepoint(cp, out);
    std::size_t pos = 0;
    EXPECT_EQ(DecodeAt(out, pos), cp);
    EXPECT_EQ(pos, out.size());
  }
}

}  // namespace
}  // namespace qgen::utf8
