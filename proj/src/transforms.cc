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

#include "prescheck/transforms.h"

#include <algorithm>

#include "prescheck/error.h"

namespace prescheck {
namespace {

Formula Rebuild(const Formula& f, std::vector<Formula> kids) {
  switch (f.kind()) {
    case FormulaKind::kNot:
      return Formula::Not(kids[0]);
    case FormulaKind::kAnd:
      return Formula::And(kids[0], kids[1]);
    case FormulaKind::kOr:
      return Formula::Or(kids[0], kids[1]);
    case FormulaKind::kImplies:
      return Formula::Implies(kids[0], kids[1]);
    case FormulaKind::kXor:
      return Formula::Xor(kids[0], kids[1]);
    case FormulaKind::kExists:
      return Formula::Exists(f.name(), kids[0]);
    case FormulaKind::kForall:
      return Formula::Forall(f.name(), kids[0]);
    default:
      return f;
  }
}

Term Replace(const Term& t, const std::map<std::string, Term>& sub) {
  if (t.constant) return t;
  auto it = sub.find(t.name);
  return it == sub.end() ? t : it->second;
}

// Applies `guard_of(var)` to every quantifier, bottom-up.
template <typename GuardOf>
Formula GuardQuantifiers(const Formula& f, const GuardOf& guard_of) {
  if (f.IsAtom()) return f;
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(GuardQuantifiers(f.child(i), guard_of));
  if (f.kind() == FormulaKind::kExists)
    return Formula::Exists(f.name(), Formula::And(guard_of(f.name()), kids[0]));
  if (f.kind() == FormulaKind::kForall)
    return Formula::Forall(f.name(), Formula::Implies(guard_of(f.name()), kids[0]));
  return Rebuild(f, std::move(kids));
}

// Renames bound occurrences of `center` so the guard can refer to it.
Formula FreeCenter(const Formula& f, const std::string& center, const std::set<std::string>& taken) {
  if (f.IsAtom()) return f;
  if (f.IsQuantifier() && f.name() == center) {
    std::string fresh = FreshName(center, taken);
    Formula body = Substitute(f.child(0), {{center, Term::Var(fresh)}});
    body = FreeCenter(body, center, taken);
    return f.kind() == FormulaKind::kExists ? Formula::Exists(fresh, body) : Formula::Forall(fresh, body);
  }
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(FreeCenter(f.child(i), center, taken));
  return Rebuild(f, std::move(kids));
}

}  // namespace

std::uint32_t QuantifierRank(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kDist:
      return f.number();
    case FormulaKind::kExists:
    case FormulaKind::kForall:
      return 1 + QuantifierRank(f.child(0));
    default: {
      std::uint32_t best = 0;
      for (std::size_t i = 0; i < f.arity(); ++i) best = std::max(best, QuantifierRank(f.child(i)));
      return best;
    }
  }
}

Formula Substitute(const Formula& f, const std::map<std::string, Term>& substitution) {
  if (substitution.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return f;
    case FormulaKind::kEdge:
      return Formula::Edge(Replace(f.left(), substitution), Replace(f.right(), substitution));
    case FormulaKind::kEqual:
      return Formula::Equal(Replace(f.left(), substitution), Replace(f.right(), substitution));
    case FormulaKind::kDist:
      return Formula::Dist(Replace(f.left(), substitution), Replace(f.right(), substitution), f.number());
    case FormulaKind::kPart:
      return Formula::Part(f.number(), Replace(f.left(), substitution));
    case FormulaKind::kMember:
      return Formula::Member(Replace(f.left(), substitution), f.name());
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      auto inner = substitution;
      inner.erase(f.name());
      std::string var = f.name();
      Formula body = f.child(0);
      if (inner.empty()) return f;
      bool clash = std::any_of(inner.begin(), inner.end(),
                               [&](const auto& kv) { return !kv.second.constant && kv.second.name == var; });
      if (clash) {
        std::set<std::string> taken = VariableNames(body);
        for (const auto& [k, v] : inner) {
          taken.insert(k);
          if (!v.constant) taken.insert(v.name);
        }
        std::string fresh = FreshName(var, taken);
        body = Substitute(body, {{var, Term::Var(fresh)}});
        var = fresh;
      }
      body = Substitute(body, inner);
      return f.kind() == FormulaKind::kExists ? Formula::Exists(var, body) : Formula::Forall(var, body);
    }
    default: {
      std::vector<Formula> kids;
      for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(Substitute(f.child(i), substitution));
      return Rebuild(f, std::move(kids));
    }
  }
}

Formula Relativize(const Formula& f, const std::string& center, std::uint32_t radius) {
  Formula g = FreeCenter(f, center, VariableNames(f));
  return GuardQuantifiers(g, [&](const std::string& y) {
    return Formula::Dist(Term::Var(center), Term::Var(y), radius);
  });
}

Formula RelativizeToSet(const Formula& f, const std::string& center, std::uint32_t radius,
                        const std::string& set) {
  Formula g = FreeCenter(f, center, VariableNames(f));
  return GuardQuantifiers(g, [&](const std::string& y) {
    return Formula::And(Formula::Dist(Term::Var(center), Term::Var(y), radius),
                        Formula::Member(Term::Var(y), set));
  });
}

namespace {

Formula TranslateEdges(const Formula& f, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                       FlipTranslation mode) {
  if (f.kind() == FormulaKind::kEdge) {
    Formula acc = f;
    for (auto [i, j] : pairs) {
      Formula term = Formula::And(Formula::Part(i + 1, f.left()), Formula::Part(j + 1, f.right()));
      if (i == j && mode == FlipTranslation::kLoopSafe)
        term = Formula::And(term, Formula::Not(Formula::Equal(f.left(), f.right())));
      acc = Formula::Xor(acc, term);
    }
    return acc;
  }
  if (f.IsAtom()) return f;
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(TranslateEdges(f.child(i), pairs, mode));
  return Rebuild(f, std::move(kids));
}

}  // namespace

Formula TranslateFlip(const Formula& f, std::uint32_t k, const Flip& flip, FlipTranslation mode) {
  if (ContainsPartAtoms(f)) throw InvalidArgument("formula already contains part atoms");
  if (flip.k() != k) throw InvalidArgument("flip is over a different number of parts");
  if (flip.empty()) return f;
  return TranslateEdges(f, flip.Pairs(), mode);
}

Formula InducedDiagram(const Graph& g, const std::vector<std::string>& names) {
  const std::uint32_t n = g.order();
  if (names.size() != n) throw InvalidArgument("one name per vertex required");
  std::vector<Formula> parts;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      Term a = Term::Var(names[i]), b = Term::Var(names[j]);
      parts.push_back(Formula::Not(Formula::Equal(a, b)));
      parts.push_back(g.adjacent(i, j) ? Formula::Edge(a, b) : Formula::Not(Formula::Edge(a, b)));
    }
  }
  return Formula::ExistsAll(names, Formula::AndAll(parts));
}

Formula ExistentialFromModels(const std::vector<Graph>& models) {
  if (models.empty()) throw InvalidArgument("at least one model required");
  std::vector<Formula> disjuncts;
  for (const Graph& m : models) {
    std::vector<std::string> names;
    for (std::uint32_t v = 0; v < m.order(); ++v) names.push_back("x" + std::to_string(v));
    disjuncts.push_back(InducedDiagram(m, names));
  }
  return Formula::OrAll(disjuncts);
}

Formula ToFormula(const BasicLocalSentence& b) {
  std::set<std::string> taken = VariableNames(b.condition);
  std::vector<std::string> vars;
  for (std::uint32_t i = 0; i < b.width; ++i) {
    std::string v = FreshName("x" + std::to_string(i + 1), taken);
    taken.insert(v);
    vars.push_back(v);
  }
  Formula local = Relativize(b.condition, b.variable, b.radius);
  std::vector<Formula> parts;
  for (std::uint32_t i = 0; i < b.width; ++i)
    for (std::uint32_t j = i + 1; j < b.width; ++j)
      parts.push_back(Formula::Not(Formula::Dist(Term::Var(vars[i]), Term::Var(vars[j]), 2 * b.radius)));
  for (const auto& v : vars) parts.push_back(Substitute(local, {{b.variable, Term::Var(v)}}));
  return Formula::ExistsAll(vars, Formula::AndAll(parts));
}

}  // namespace prescheck
