// Copyright 2026 The prescheck Authors
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

#ifndef PRESCHECK_ISOMORPHISM_H_
#define PRESCHECK_ISOMORPHISM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prescheck/graph.h"

namespace prescheck {

inline constexpr std::size_t kDefaultIsomorphismBound = 64;

// Decides G ≅ H by color refinement followed by individualization
// backtracking. Throws SizeLimitExceeded above `bound` vertices.
bool IsIsomorphic(const Graph& g, const Graph& h,
                  std::size_t bound = kDefaultIsomorphismBound);

// Same, for vertex-colored graphs: the bijection must preserve colors.
bool IsIsomorphic(const Graph& g, std::span<const std::uint32_t> g_colors,
                  const Graph& h, std::span<const std::uint32_t> h_colors,
                  std::size_t bound = kDefaultIsomorphismBound);

// Labeled structures: parts are colors, constants are ignored.
bool IsIsomorphic(const LabeledStructure& a, const LabeledStructure& b,
                  std::size_t bound = kDefaultIsomorphismBound);

// A string that is equal for two colored graphs iff they are isomorphic
// (color-preserving). Exponential in the worst case; intended for the small
// rooted neighborhoods used by type oracles.
std::string CanonicalForm(const Graph& g, std::span<const std::uint32_t> colors);

}  // namespace prescheck

#endif  // PRESCHECK_ISOMORPHISM_H_
