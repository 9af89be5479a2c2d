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

#include "prescheck/formula.h"

#include <algorithm>

namespace prescheck {

Formula::Formula() : Formula(True()) {}

Formula Formula::Make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula Formula::True() {
  static const Formula t = Make(Node{FormulaKind::kTrue, {}, {}, 0, {}, {}});
  return t;
}
Formula Formula::False() {
  static const Formula f = Make(Node{FormulaKind::kFalse, {}, {}, 0, {}, {}});
  return f;
}
Formula Formula::Edge(Term s, Term t) {
  return Make(Node{FormulaKind::kEdge, std::move(s), std::move(t), 0, {}, {}});
}
Formula Formula::Equal(Term s, Term t) {
  return Make(Node{FormulaKind::kEqual, std::move(s), std::move(t), 0, {}, {}});
}
Formula Formula::Part(std::uint32_t index, Term s) {
  return Make(Node{FormulaKind::kPart, std::move(s), {}, index, {}, {}});
}
Formula Formula::Dist(Term s, Term t, std::uint32_t radius) {
  return Make(Node{FormulaKind::kDist, std::move(s), std::move(t), radius, {}, {}});
}
Formula Formula::Member(Term s, std::string set) {
  return Make(Node{FormulaKind::kMember, std::move(s), {}, 0, std::move(set), {}});
}
Formula Formula::Not(Formula f) { return Make(Node{FormulaKind::kNot, {}, {}, 0, {}, {std::move(f)}}); }
Formula Formula::And(Formula a, Formula b) {
  return Make(Node{FormulaKind::kAnd, {}, {}, 0, {}, {std::move(a), std::move(b)}});
}
Formula Formula::Or(Formula a, Formula b) {
  return Make(Node{FormulaKind::kOr, {}, {}, 0, {}, {std::move(a), std::move(b)}});
}
Formula Formula::Implies(Formula a, Formula b) {
  return Make(Node{FormulaKind::kImplies, {}, {}, 0, {}, {std::move(a), std::move(b)}});
}
Formula Formula::Xor(Formula a, Formula b) {
  return Make(Node{FormulaKind::kXor, {}, {}, 0, {}, {std::move(a), std::move(b)}});
}
Formula Formula::Exists(std::string var, Formula body) {
  return Make(Node{FormulaKind::kExists, {}, {}, 0, std::move(var), {std::move(body)}});
}
Formula Formula::Forall(std::string var, Formula body) {
  return Make(Node{FormulaKind::kForall, {}, {}, 0, std::move(var), {std::move(body)}});
}

Formula Formula::AndAll(const std::vector<Formula>& parts) {
  if (parts.empty()) return True();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = And(acc, parts[i]);
  return acc;
}

Formula Formula::OrAll(const std::vector<Formula>& parts) {
  if (parts.empty()) return False();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Or(acc, parts[i]);
  return acc;
}

Formula Formula::ExistsAll(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Exists(*it, std::move(body));
  return body;
}

bool Formula::IsAtom() const {
  switch (kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
    case FormulaKind::kEdge:
    case FormulaKind::kEqual:
    case FormulaKind::kPart:
    case FormulaKind::kDist:
    case FormulaKind::kMember:
      return true;
    default:
      return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.left == y.left && x.right == y.right && x.number == y.number &&
         x.name == y.name && x.children == y.children;
}

namespace {

std::string TermText(const Term& t) { return t.constant ? "@" + t.name : t.name; }

void Print(const Formula& f, std::string& out);

// Quantifier bodies run to the right, so a quantifier nested as an operand
// needs its own parentheses.
void PrintOperand(const Formula& f, std::string& out) {
  if (!f.IsQuantifier()) return Print(f, out);
  out += "(";
  Print(f, out);
  out += ")";
}

void Print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
      out += "true";
      return;
    case FormulaKind::kFalse:
      out += "false";
      return;
    case FormulaKind::kEdge:
      out += "E(" + TermText(f.left()) + "," + TermText(f.right()) + ")";
      return;
    case FormulaKind::kEqual:
      out += TermText(f.left()) + "=" + TermText(f.right());
      return;
    case FormulaKind::kPart:
      out += "P_" + std::to_string(f.number()) + "(" + TermText(f.left()) + ")";
      return;
    case FormulaKind::kDist:
      out += "dist(" + TermText(f.left()) + "," + TermText(f.right()) + ")<=" + std::to_string(f.number());
      return;
    case FormulaKind::kMember:
      out += TermText(f.left()) + " in $" + f.name();
      return;
    case FormulaKind::kNot:
      out += "not ";
      PrintOperand(f.child(0), out);
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
    case FormulaKind::kXor: {
      const char* op = f.kind() == FormulaKind::kAnd       ? " and "
                       : f.kind() == FormulaKind::kOr      ? " or "
                       : f.kind() == FormulaKind::kImplies ? " implies "
                                                           : " xor ";
      out += "(";
      PrintOperand(f.child(0), out);
      out += op;
      PrintOperand(f.child(1), out);
      out += ")";
      return;
    }
    case FormulaKind::kExists:
    case FormulaKind::kForall:
      out += f.kind() == FormulaKind::kExists ? "exists " : "forall ";
      out += f.name() + ". ";
      Print(f.child(0), out);
      return;
  }
}

void Collect(const Formula& f, std::set<std::string>& bound, std::set<std::string>& free_out) {
  auto term = [&](const Term& t) {
    if (!t.constant && !t.name.empty() && !bound.count(t.name)) free_out.insert(t.name);
  };
  switch (f.kind()) {
    case FormulaKind::kEdge:
    case FormulaKind::kEqual:
    case FormulaKind::kDist:
      term(f.left());
      term(f.right());
      return;
    case FormulaKind::kPart:
    case FormulaKind::kMember:
      term(f.left());
      return;
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      bool fresh = bound.insert(f.name()).second;
      Collect(f.child(0), bound, free_out);
      if (fresh) bound.erase(f.name());
      return;
    }
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) Collect(f.child(i), bound, free_out);
  }
}

template <typename Visit>
void Walk(const Formula& f, Visit&& visit) {
  visit(f);
  for (std::size_t i = 0; i < f.arity(); ++i) Walk(f.child(i), visit);
}

}  // namespace

std::string ToString(const Formula& f) {
  std::string out;
  Print(f, out);
  return out;
}

std::set<std::string> FreeVariables(const Formula& f) {
  std::set<std::string> bound, free_out;
  Collect(f, bound, free_out);
  return free_out;
}

std::set<std::string> VariableNames(const Formula& f) {
  std::set<std::string> names;
  Walk(f, [&](const Formula& g) {
    if (g.IsQuantifier()) names.insert(g.name());
    for (const Term* t : {&g.left(), &g.right()})
      if (!t->constant && !t->name.empty()) names.insert(t->name);
  });
  return names;
}

std::set<std::string> SetParameters(const Formula& f) {
  std::set<std::string> names;
  Walk(f, [&](const Formula& g) {
    if (g.kind() == FormulaKind::kMember) names.insert(g.name());
  });
  return names;
}

std::set<std::string> ConstantNames(const Formula& f) {
  std::set<std::string> names;
  Walk(f, [&](const Formula& g) {
    for (const Term* t : {&g.left(), &g.right()})
      if (t->constant) names.insert(t->name);
  });
  return names;
}

bool ContainsPartAtoms(const Formula& f) {
  bool found = false;
  Walk(f, [&](const Formula& g) { found = found || g.kind() == FormulaKind::kPart; });
  return found;
}

std::uint32_t MaxPartIndex(const Formula& f) {
  std::uint32_t best = 0;
  Walk(f, [&](const Formula& g) {
    if (g.kind() == FormulaKind::kPart) best = std::max(best, g.number());
  });
  return best;
}

std::string FreshName(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace prescheck
