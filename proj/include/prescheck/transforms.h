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

#ifndef PRESCHECK_TRANSFORMS_H_
#define PRESCHECK_TRANSFORMS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prescheck/formula.h"
#include "prescheck/graph.h"

namespace prescheck {

// dist(x,y)<=r counts as rank r.
std::uint32_t QuantifierRank(const Formula& f);

// Simultaneous capture-avoiding replacement of free variables.
Formula Substitute(const Formula& f, const std::map<std::string, Term>& substitution);

// Guards every quantifier with dist(center, y) <= r. Bound variables that
// collide with the center are renamed first.
Formula Relativize(const Formula& f, const std::string& center, std::uint32_t radius);

// As Relativize, with each guard also requiring `y in $set`.
Formula RelativizeToSet(const Formula& f, const std::string& center, std::uint32_t radius,
                        const std::string& set);

enum class FlipTranslation {
  // Diagonal pairs (i,i) add `not s=t` so that E(x,x) stays false.
  kLoopSafe,
  // Every pair becomes P_i(s) and P_j(t), nothing else.
  kLiteral,
};

// Replaces each E(s,t) by E(s,t) xor (P_i(s) and P_j(t)) xor ... over the
// pairs of `flip` in sorted order. P_i is 1-based; flip pair (i,j) maps to
// P_{i+1}, P_{j+1}.
Formula TranslateFlip(const Formula& f, std::uint32_t k, const Flip& flip,
                      FlipTranslation mode = FlipTranslation::kLoopSafe);

// exists x1..xn (pairwise distinct, all edges, all non-edges of g).
// `names` defaults to x0, x1, ...
Formula InducedDiagram(const Graph& g, const std::vector<std::string>& names);
Formula ExistentialFromModels(const std::vector<Graph>& models);

struct BasicLocalSentence {
  std::uint32_t width = 1;
  std::uint32_t radius = 0;
  Formula condition;
  std::string variable = "x";
};

// exists x_1..x_n (pairwise not dist<=2r and each condition relativized).
Formula ToFormula(const BasicLocalSentence& b);

}  // namespace prescheck

#endif  // PRESCHECK_TRANSFORMS_H_
