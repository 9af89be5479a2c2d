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

#include "prescheck/evaluate.h"

#include <algorithm>
#include <optional>
#include <set>

#include "prescheck/error.h"

namespace prescheck {

void CheckEvaluable(const LabeledStructure& s, const Formula& f, const Assignment& a) {
  for (const auto& v : FreeVariables(f)) {
    auto it = a.variables.find(v);
    if (it == a.variables.end()) throw EvaluationError("unbound variable '" + v + "'");
    if (it->second >= s.order()) throw EvaluationError("variable '" + v + "' is out of range");
  }
  for (const auto& c : ConstantNames(f)) {
    auto it = a.constants.find(c);
    if (it == a.constants.end()) it = s.constants.find(c);
    if (it == s.constants.end()) throw EvaluationError("unknown constant '@" + c + "'");
    if (it->second >= s.order()) throw EvaluationError("constant '@" + c + "' is out of range");
  }
  for (const auto& x : SetParameters(f)) {
    auto it = a.sets.find(x);
    if (it == a.sets.end()) throw EvaluationError("unknown set '$" + x + "'");
    if (it->second.universe() != s.order()) throw EvaluationError("set '$" + x + "' has the wrong universe");
  }
  std::uint32_t need = MaxPartIndex(f);
  if (need > 0) {
    if (!s.parts) throw EvaluationError("part atoms need a partition");
    if (need > s.parts->k()) throw EvaluationError("part index P_" + std::to_string(need) + " out of range");
  }
}

namespace {

class Reference {
 public:
  Reference(const LabeledStructure& s, const Assignment& a) : s_(s), a_(a), env_(a.variables) {}

  bool Eval(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kTrue:
        return true;
      case FormulaKind::kFalse:
        return false;
      case FormulaKind::kEdge:
        return s_.graph.adjacent(Value(f.left()), Value(f.right()));
      case FormulaKind::kEqual:
        return Value(f.left()) == Value(f.right());
      case FormulaKind::kPart:
        return s_.parts->part(Value(f.left())) == f.number() - 1;
      case FormulaKind::kDist:
        return DistancesFrom(s_.graph, Value(f.left()))[Value(f.right())] <= f.number();
      case FormulaKind::kMember:
        return a_.sets.at(f.name()).contains(Value(f.left()));
      case FormulaKind::kNot:
        return !Eval(f.child(0));
      case FormulaKind::kAnd:
        return Eval(f.child(0)) && Eval(f.child(1));
      case FormulaKind::kOr:
        return Eval(f.child(0)) || Eval(f.child(1));
      case FormulaKind::kImplies:
        return !Eval(f.child(0)) || Eval(f.child(1));
      case FormulaKind::kXor:
        return Eval(f.child(0)) != Eval(f.child(1));
      case FormulaKind::kExists:
      case FormulaKind::kForall: {
        const bool want = f.kind() == FormulaKind::kExists;
        auto saved = env_.find(f.name()) == env_.end() ? std::nullopt : std::optional<Vertex>(env_[f.name()]);
        bool result = !want;
        for (Vertex v = 0; v < s_.order(); ++v) {
          env_[f.name()] = v;
          if (Eval(f.child(0)) == want) {
            result = want;
            break;
          }
        }
        if (saved) {
          env_[f.name()] = *saved;
        } else {
          env_.erase(f.name());
        }
        return result;
      }
    }
    return false;
  }

 private:
  Vertex Value(const Term& t) const {
    if (t.constant) {
      auto it = a_.constants.find(t.name);
      return it != a_.constants.end() ? it->second : s_.constants.at(t.name);
    }
    return env_.at(t.name);
  }

  const LabeledStructure& s_;
  const Assignment& a_;
  std::map<std::string, Vertex> env_;
};

}  // namespace

bool EvaluateReference(const LabeledStructure& s, const Formula& f, const Assignment& a) {
  CheckEvaluable(s, f, a);
  Reference r(s, a);
  return r.Eval(f);
}

// ---------------------------------------------------------------------------
// Compiled evaluation.

struct CompiledFormula::Program {
  struct Node {
    FormulaKind kind;
    int a = -1, b = -1;  // term slots
    std::uint32_t number = 0;
    int set = -1;
    std::vector<int> kids;
    // A run of like quantifiers. Conjuncts of the guard are checked at the
    // first level where all their block variables are bound; atoms linking
    // the level's variable to bound terms narrow its range instead.
    struct Level {
      int slot = -1;
      std::vector<int> filters;
      std::vector<int> rest;
    };
    std::vector<Level> levels;
    int consequent = -1;  // forall blocks: must hold for every surviving tuple
  };

  std::vector<Node> nodes;
  int root = -1;
  int slot_count = 0;
  std::vector<std::pair<std::string, int>> free_slots;
  std::vector<std::pair<std::string, int>> constant_slots;
  std::vector<std::string> sets;
};

namespace {

using Program = CompiledFormula::Program;

class Compiler {
 public:
  explicit Compiler(Program& p) : p_(p) {}

  int Compile(const Formula& f) {
    Program::Node n;
    n.kind = f.kind();
    n.number = f.number();
    switch (f.kind()) {
      case FormulaKind::kEdge:
      case FormulaKind::kEqual:
      case FormulaKind::kDist:
        n.a = Slot(f.left());
        n.b = Slot(f.right());
        break;
      case FormulaKind::kPart:
        n.a = Slot(f.left());
        break;
      case FormulaKind::kMember:
        n.a = Slot(f.left());
        n.set = SetIndex(f.name());
        break;
      case FormulaKind::kExists:
      case FormulaKind::kForall: {
        // Collect the run of same-kind quantifiers with distinct names.
        std::vector<std::string> vars;
        const Formula* body = &f;
        while (body->kind() == f.kind() &&
               std::find(vars.begin(), vars.end(), body->name()) == vars.end()) {
          vars.push_back(body->name());
          body = &body->child(0);
        }
        std::vector<Formula> guard;
        std::optional<Formula> consequent;
        if (f.kind() == FormulaKind::kExists) {
          Flatten(*body, guard);
        } else if (body->kind() == FormulaKind::kImplies) {
          Flatten(body->child(0), guard);
          consequent = body->child(1);
        } else {
          consequent = *body;
        }
        n.levels.resize(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
          n.levels[i].slot = p_.slot_count++;
          scope_[vars[i]].push_back(n.levels[i].slot);
        }
        for (const auto& g : guard) {
          std::set<std::string> free = FreeVariables(g);
          std::size_t level = 0;
          for (std::size_t i = 0; i < vars.size(); ++i)
            if (free.count(vars[i])) level = i;
          int id = Compile(g);
          auto& lv = n.levels[level];
          (Narrows(p_.nodes[id], lv.slot) ? lv.filters : lv.rest).push_back(id);
        }
        if (consequent) n.consequent = Compile(*consequent);
        for (const auto& v : vars) {
          auto& binding = scope_[v];
          binding.pop_back();
          if (binding.empty()) scope_.erase(v);
        }
        break;
      }
      default:
        for (std::size_t i = 0; i < f.arity(); ++i) n.kids.push_back(Compile(f.child(i)));
    }
    p_.nodes.push_back(std::move(n));
    return static_cast<int>(p_.nodes.size() - 1);
  }

 private:
  static void Flatten(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == FormulaKind::kAnd) {
      Flatten(f.child(0), out);
      Flatten(f.child(1), out);
    } else {
      out.push_back(f);
    }
  }

  // An atom (or negated atom) relating `slot` to some other, already bound term.
  bool Narrows(const Program::Node& n, int slot) const {
    const Program::Node* atom = &n;
    if (n.kind == FormulaKind::kNot) atom = &p_.nodes[n.kids[0]];
    switch (atom->kind) {
      case FormulaKind::kEdge:
      case FormulaKind::kEqual:
      case FormulaKind::kDist:
        return (atom->a == slot) != (atom->b == slot);
      case FormulaKind::kPart:
      case FormulaKind::kMember:
        return atom->a == slot;
      default:
        return false;
    }
  }

  int Slot(const Term& t) {
    if (t.constant) {
      for (const auto& [name, s] : p_.constant_slots)
        if (name == t.name) return s;
      p_.constant_slots.emplace_back(t.name, p_.slot_count);
      return p_.slot_count++;
    }
    auto it = scope_.find(t.name);
    if (it != scope_.end()) return it->second.back();
    for (const auto& [name, s] : p_.free_slots)
      if (name == t.name) return s;
    p_.free_slots.emplace_back(t.name, p_.slot_count);
    return p_.slot_count++;
  }

  int SetIndex(const std::string& name) {
    for (std::size_t i = 0; i < p_.sets.size(); ++i)
      if (p_.sets[i] == name) return static_cast<int>(i);
    p_.sets.push_back(name);
    return static_cast<int>(p_.sets.size() - 1);
  }

  Program& p_;
  std::map<std::string, std::vector<int>> scope_;
};

class Session {
 public:
  Session(const Program& p, const LabeledStructure& s, const Assignment& a)
      : p_(p), s_(s), n_(s.order()), values_(p.slot_count, 0), rows_(s.order()) {
    for (const auto& [name, slot] : p.free_slots) values_[slot] = a.variables.at(name);
    for (const auto& [name, slot] : p.constant_slots) {
      auto it = a.constants.find(name);
      values_[slot] = it != a.constants.end() ? it->second : s.constants.at(name);
    }
    for (const auto& name : p.sets) sets_.push_back(&a.sets.at(name));
  }

  bool Eval(int id) {
    const Program::Node& n = p_.nodes[id];
    switch (n.kind) {
      case FormulaKind::kTrue:
        return true;
      case FormulaKind::kFalse:
        return false;
      case FormulaKind::kEdge:
        return s_.graph.adjacent(values_[n.a], values_[n.b]);
      case FormulaKind::kEqual:
        return values_[n.a] == values_[n.b];
      case FormulaKind::kPart:
        return s_.parts->part(values_[n.a]) == n.number - 1;
      case FormulaKind::kDist:
        return Row(values_[n.a])[values_[n.b]] <= n.number;
      case FormulaKind::kMember:
        return sets_[n.set]->contains(values_[n.a]);
      case FormulaKind::kNot:
        return !Eval(n.kids[0]);
      case FormulaKind::kAnd:
        return Eval(n.kids[0]) && Eval(n.kids[1]);
      case FormulaKind::kOr:
        return Eval(n.kids[0]) || Eval(n.kids[1]);
      case FormulaKind::kImplies:
        return !Eval(n.kids[0]) || Eval(n.kids[1]);
      case FormulaKind::kXor:
        return Eval(n.kids[0]) != Eval(n.kids[1]);
      case FormulaKind::kExists:
      case FormulaKind::kForall:
        return Quantify(n);
    }
    return false;
  }

 private:
  bool Quantify(const Program::Node& n) { return Level(n, 0); }

  // Exists: some tuple passes every level. Forall: every tuple that passes
  // the levels satisfies the consequent.
  bool Level(const Program::Node& n, std::size_t depth) {
    const bool exists = n.kind == FormulaKind::kExists;
    if (depth == n.levels.size()) return exists ? true : Eval(n.consequent);
    const auto& lv = n.levels[depth];
    VertexSet range = VertexSet::Full(n_);
    for (int f : lv.filters) {
      Narrow(range, f, lv.slot);
      if (range.empty()) break;
    }
    bool result = !exists;
    range.ForEach([&](Vertex v) {
      if (result == exists) return;
      values_[lv.slot] = v;
      for (int r : lv.rest)
        if (!Eval(r)) return;
      if (Level(n, depth + 1) == exists) result = exists;
    });
    return result;
  }

  void Narrow(VertexSet& range, int id, int slot) {
    const Program::Node* atom = &p_.nodes[id];
    bool negated = false;
    if (atom->kind == FormulaKind::kNot) {
      negated = true;
      atom = &p_.nodes[atom->kids[0]];
    }
    Vertex other = atom->a == slot ? (atom->b >= 0 ? values_[atom->b] : 0) : values_[atom->a];
    VertexSet allowed(n_);
    switch (atom->kind) {
      case FormulaKind::kEdge:
        allowed = s_.graph.neighbors(other);
        break;
      case FormulaKind::kEqual:
        allowed.insert(other);
        break;
      case FormulaKind::kDist: {
        const auto& row = Row(other);
        for (Vertex v = 0; v < n_; ++v)
          if (row[v] <= atom->number) allowed.insert(v);
        break;
      }
      case FormulaKind::kPart:
        allowed = PartMembers(atom->number - 1);
        break;
      case FormulaKind::kMember:
        allowed = *sets_[atom->set];
        break;
      default:
        return;
    }
    if (negated) {
      range -= allowed;
    } else {
      range &= allowed;
    }
  }

  const std::vector<std::uint32_t>& Row(Vertex v) {
    if (!rows_[v]) rows_[v] = DistancesFrom(s_.graph, v);
    return *rows_[v];
  }

  const VertexSet& PartMembers(std::uint32_t part) {
    if (parts_.empty()) {
      for (std::size_t i = 0; i < s_.parts->k(); ++i)
        parts_.push_back(s_.parts->Members(static_cast<std::uint32_t>(i), n_));
    }
    return parts_[part];
  }

  const Program& p_;
  const LabeledStructure& s_;
  const std::size_t n_;
  std::vector<Vertex> values_;
  std::vector<const VertexSet*> sets_;
  std::vector<std::optional<std::vector<std::uint32_t>>> rows_;
  std::vector<VertexSet> parts_;
};

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f) : formula_(f), program_(std::make_unique<Program>()) {
  Compiler c(*program_);
  program_->root = c.Compile(f);
}

CompiledFormula::~CompiledFormula() = default;
CompiledFormula::CompiledFormula(CompiledFormula&&) noexcept = default;
CompiledFormula& CompiledFormula::operator=(CompiledFormula&&) noexcept = default;

bool CompiledFormula::Evaluate(const LabeledStructure& s, const Assignment& a) const {
  CheckEvaluable(s, formula_, a);
  Session session(*program_, s, a);
  return session.Eval(program_->root);
}

bool Evaluate(const LabeledStructure& s, const Formula& f, const Assignment& a) {
  return CompiledFormula(f).Evaluate(s, a);
}

bool EvalBasicLocal(const LabeledStructure& s, const BasicLocalSentence& b) {
  if (b.width == 0) return true;
  CompiledFormula local(Relativize(b.condition, b.variable, b.radius));
  std::vector<Vertex> satisfiers;
  Assignment a;
  for (Vertex v = 0; v < s.order(); ++v) {
    a.variables[b.variable] = v;
    if (local.Evaluate(s, a)) satisfiers.push_back(v);
  }
  if (satisfiers.size() < b.width) return false;
  std::vector<std::vector<std::uint32_t>> rows;
  for (Vertex v : satisfiers) rows.push_back(DistancesFrom(s.graph, v));
  const std::uint32_t limit = 2 * b.radius;
  std::vector<std::size_t> chosen;
  // Backtracking over satisfier indices in increasing order.
  auto search = [&](auto& self, std::size_t from) -> bool {
    if (chosen.size() == b.width) return true;
    for (std::size_t i = from; i + (b.width - chosen.size()) <= satisfiers.size(); ++i) {
      bool far = true;
      for (std::size_t c : chosen)
        if (rows[c][satisfiers[i]] <= limit) {
          far = false;
          break;
        }
      if (!far) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace prescheck
