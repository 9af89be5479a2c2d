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

#ifndef PRESCHECK_FORMULA_H_
#define PRESCHECK_FORMULA_H_

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace prescheck {

// A vertex term: a variable, or a named constant (printed with a leading @).
struct Term {
  std::string name;
  bool constant = false;

  static Term Var(std::string n) { return {std::move(n), false}; }
  static Term Const(std::string n) { return {std::move(n), true}; }

  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

enum class FormulaKind {
  kTrue,
  kFalse,
  kEdge,     // E(s,t)
  kEqual,    // s=t
  kPart,     // P_i(s), i >= 1
  kDist,     // dist(s,t)<=r
  kMember,   // s in $X
  kNot,
  kAnd,
  kOr,
  kImplies,
  kXor,
  kExists,
  kForall,
};

// Immutable first-order formula over the graph signature. Values share
// structure; copying is cheap.
class Formula {
 public:
  struct Node {
    FormulaKind kind;
    Term left, right;
    std::uint32_t number = 0;  // part index for kPart, radius for kDist
    std::string name;          // bound variable, or set parameter for kMember
    std::vector<Formula> children;
  };

  Formula();  // true

  static Formula True();
  static Formula False();
  static Formula Edge(Term s, Term t);
  static Formula Equal(Term s, Term t);
  static Formula Part(std::uint32_t index, Term s);
  static Formula Dist(Term s, Term t, std::uint32_t radius);
  static Formula Member(Term s, std::string set);
  static Formula Not(Formula f);
  static Formula And(Formula a, Formula b);
  static Formula Or(Formula a, Formula b);
  static Formula Implies(Formula a, Formula b);
  static Formula Xor(Formula a, Formula b);
  static Formula Exists(std::string var, Formula body);
  static Formula Forall(std::string var, Formula body);

  // Left-folded conjunction/disjunction; true/false for empty input.
  static Formula AndAll(const std::vector<Formula>& parts);
  static Formula OrAll(const std::vector<Formula>& parts);
  static Formula ExistsAll(const std::vector<std::string>& vars, Formula body);

  FormulaKind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }
  const Term& left() const { return node_->left; }
  const Term& right() const { return node_->right; }
  std::uint32_t number() const { return node_->number; }
  const std::string& name() const { return node_->name; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  std::size_t arity() const { return node_->children.size(); }
  const void* identity() const { return node_.get(); }

  bool IsAtom() const;
  bool IsQuantifier() const {
    return kind() == FormulaKind::kExists || kind() == FormulaKind::kForall;
  }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula Make(Node n);

  std::shared_ptr<const Node> node_;
};

// Parseable text. Binary connectives are always parenthesized, so
// ParseFormula(ToString(f)) == f.
std::string ToString(const Formula& f);

std::set<std::string> FreeVariables(const Formula& f);
// Every variable name occurring free or bound.
std::set<std::string> VariableNames(const Formula& f);
std::set<std::string> SetParameters(const Formula& f);
std::set<std::string> ConstantNames(const Formula& f);
bool ContainsPartAtoms(const Formula& f);
std::uint32_t MaxPartIndex(const Formula& f);

// `base` if unused, else base_1, base_2, ... avoiding `taken`.
std::string FreshName(const std::string& base, const std::set<std::string>& taken);

}  // namespace prescheck

#endif  // PRESCHECK_FORMULA_H_
