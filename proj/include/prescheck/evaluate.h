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

#ifndef PRESCHECK_EVALUATE_H_
#define PRESCHECK_EVALUATE_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "prescheck/formula.h"
#include "prescheck/graph.h"
#include "prescheck/transforms.h"

namespace prescheck {

struct Assignment {
  std::map<std::string, Vertex> variables;
  // Extra constants; these shadow the structure's own.
  std::map<std::string, Vertex> constants;
  // Values for `$X` parameters, over the structure's vertex range.
  std::map<std::string, VertexSet> sets;
};

// Throws EvaluationError for unbound variables, unknown constants or sets,
// and part atoms the structure cannot interpret.
void CheckEvaluable(const LabeledStructure& s, const Formula& f, const Assignment& a);

// Plain recursion over assignments, one BFS per distance atom.
bool EvaluateReference(const LabeledStructure& s, const Formula& f, const Assignment& a = {});

// Slot-compiled form of a formula. Quantifiers whose guard is a conjunction
// of atoms about the bound variable iterate only over the vertices the atoms
// allow. Reusable across structures and threads.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);
  ~CompiledFormula();
  CompiledFormula(CompiledFormula&&) noexcept;
  CompiledFormula& operator=(CompiledFormula&&) noexcept;

  const Formula& formula() const { return formula_; }

  // Each call gets its own distance cache.
  bool Evaluate(const LabeledStructure& s, const Assignment& a = {}) const;

  struct Program;  // opaque

 private:
  Formula formula_;
  std::unique_ptr<Program> program_;
};

bool Evaluate(const LabeledStructure& s, const Formula& f, const Assignment& a = {});

// True iff there are `width` vertices, pairwise at distance > 2r, each
// satisfying the relativized condition.
bool EvalBasicLocal(const LabeledStructure& s, const BasicLocalSentence& b);

}  // namespace prescheck

#endif  // PRESCHECK_EVALUATE_H_
