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

#ifndef PRESCHECK_PARSER_H_
#define PRESCHECK_PARSER_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "prescheck/formula.h"

namespace prescheck {

// Where the guard of a guarded `exists!` goes.
enum class UniqueGuard {
  kBoth,         // exists z (G(z) and t(z) and forall z' (G(z') and t(z') implies z'=z))
  kWitnessOnly,  // exists z (G(z) and t(z) and forall z' (t(z') implies z'=z))
};

struct ParseOptions {
  // When set, P_i with i > max_part is rejected.
  std::optional<std::uint32_t> max_part;
  UniqueGuard unique_guard = UniqueGuard::kBoth;
};

// Grammar, loosest binding first:
//   program  := ("let" name ["(" vars ")"] ":=" formula ";")* formula
//   formula  := or ["implies" formula]
//   or       := xor ("or" xor)*
//   xor      := and ("xor" and)*
//   and      := unary ("and" unary)*
//   unary    := "not" unary | quant | "(" formula ")" | atom
//   quant    := ("exists" | "forall" | "exists!") vars ["in" guard] "." formula
//   guard    := "ball(" term "," nat ")" | "$"name | macro
//   atom     := true | false | E(t,t) | P_i(t) | dist(t,t)<=r | t=t | t!=t
//             | t in guard | macro["(" terms ")"]
//   term     := name | "@"name
// Quantifier bodies extend as far right as possible.
Formula ParseFormula(std::string_view text, const ParseOptions& options = {});

}  // namespace prescheck

#endif  // PRESCHECK_PARSER_H_
