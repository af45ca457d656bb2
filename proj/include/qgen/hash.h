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

#ifndef QGEN_HASH_H_
#define QGEN_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace qgen {

// Lowercase hex SHA-256 of the bytes.
std::string Sha256Hex(std::string_view bytes);

// First eight bytes of the SHA-256 digest, big-endian. Stable across
// platforms and standard libraries, unlike std::hash.
std::uint64_t Hash64(std::string_view bytes);

}  // namespace qgen

#endif  // QGEN_HASH_H_
