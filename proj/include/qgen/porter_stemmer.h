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

#ifndef QGEN_PORTER_STEMMER_H_
#define QGEN_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace qgen::metrics {

// Porter (1980) suffix stripper, following the author's reference C
// implementation (including its "bli" and "logi" rules). Words of two
// letters or fewer, and words containing anything other than a-z, come back
// unchanged.
std::string PorterStem(std::string_view word);

}  // namespace qgen::metrics

#endif  // QGEN_PORTER_STEMMER_H_
