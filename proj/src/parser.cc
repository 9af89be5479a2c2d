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

#include "prescheck/parser.h"

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "prescheck/error.h"
#include "prescheck/transforms.h"

namespace prescheck {
namespace {

enum class Tok { kIdent, kConst, kSet, kNumber, kSymbol, kEnd };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> Lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      if (word == "exists" && i < s.size() && s[i] == '!' && (i + 1 >= s.size() || s[i + 1] != '=')) {
        ++i;
        word = "exists!";
      }
      out.push_back({Tok::kIdent, word, start});
      continue;
    }
    if (c == '@' || c == '$') {
      ++i;
      while (i < s.size() && ident_char(s[i])) ++i;
      if (i == start + 1) throw ParseError("expected a name after '" + std::string(1, c) + "'", start);
      out.push_back({c == '@' ? Tok::kConst : Tok::kSet, std::string(s.substr(start + 1, i - start - 1)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::kNumber, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "!=" || two == "<=" || two == ":=") {
      out.push_back({Tok::kSymbol, std::string(two), start});
      i += 2;
      continue;
    }
    if (std::string_view("(),.;=").find(c) != std::string_view::npos) {
      out.push_back({Tok::kSymbol, std::string(1, c), start});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

bool IsKeyword(const std::string& w) {
  static const char* kWords[] = {"exists", "forall", "exists!", "and", "or",  "not",   "implies",
                                 "xor",    "in",     "ball",    "dist", "true", "false", "let"};
  for (const char* k : kWords)
    if (w == k) return true;
  return false;
}

struct Macro {
  std::vector<std::string> params;
  Formula body;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : toks_(Lex(text)), options_(options) {}

  Formula Program() {
    while (PeekIdent("let")) Definition();
    Formula f = Implies();
    if (Peek().type != Tok::kEnd) Fail("unexpected '" + Peek().text + "'");
    return f;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t j = std::min(at_ + ahead, toks_.size() - 1);
    return toks_[j];
  }
  bool PeekIdent(const char* w) const { return Peek().type == Tok::kIdent && Peek().text == w; }
  bool PeekSymbol(const char* s, std::size_t ahead = 0) const {
    return Peek(ahead).type == Tok::kSymbol && Peek(ahead).text == s;
  }
  [[noreturn]] void Fail(const std::string& msg) const { throw ParseError(msg, Peek().pos); }
  void ExpectSymbol(const char* s) {
    if (!PeekSymbol(s)) Fail(std::string("expected '") + s + "'");
    ++at_;
  }
  void ExpectIdent(const char* w) {
    if (!PeekIdent(w)) Fail(std::string("expected '") + w + "'");
    ++at_;
  }
  std::string Name() {
    if (Peek().type != Tok::kIdent || IsKeyword(Peek().text)) Fail("expected a name");
    return toks_[at_++].text;
  }
  std::uint32_t Number() {
    if (Peek().type != Tok::kNumber) Fail("expected a number");
    const Token& t = toks_[at_++];
    try {
      unsigned long long v = std::stoull(t.text);
      if (v > 0xffffffffULL) throw std::out_of_range("big");
      return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      throw ParseError("number out of range", t.pos);
    }
  }
  Term ParseTerm() {
    if (Peek().type == Tok::kConst) return Term::Const(toks_[at_++].text);
    std::string n = Name();
    if (macros_.count(n)) Fail("macro '" + n + "' used as a term");
    return Term::Var(n);
  }

  void Definition() {
    ExpectIdent("let");
    std::string name = Name();
    if (macros_.count(name)) Fail("macro '" + name + "' redefined");
    Macro m;
    if (PeekSymbol("(")) {
      ++at_;
      if (!PeekSymbol(")")) {
        m.params.push_back(Name());
        while (PeekSymbol(",")) {
          ++at_;
          m.params.push_back(Name());
        }
      }
      ExpectSymbol(")");
    }
    ExpectSymbol(":=");
    m.body = Implies();
    ExpectSymbol(";");
    macros_.emplace(name, std::move(m));
  }

  Formula Implies() {
    Formula left = Or();
    if (PeekIdent("implies")) {
      ++at_;
      return Formula::Implies(left, Implies());
    }
    return left;
  }
  Formula Or() {
    Formula acc = Xor();
    while (PeekIdent("or")) {
      ++at_;
      acc = Formula::Or(acc, Xor());
    }
    return acc;
  }
  Formula Xor() {
    Formula acc = And();
    while (PeekIdent("xor")) {
      ++at_;
      acc = Formula::Xor(acc, And());
    }
    return acc;
  }
  Formula And() {
    Formula acc = Unary();
    while (PeekIdent("and")) {
      ++at_;
      acc = Formula::And(acc, Unary());
    }
    return acc;
  }
  Formula Unary() {
    if (PeekIdent("not")) {
      ++at_;
      return Formula::Not(Unary());
    }
    if (PeekIdent("exists") || PeekIdent("forall") || PeekIdent("exists!")) return Quantifier();
    if (PeekSymbol("(")) {
      ++at_;
      Formula f = Implies();
      ExpectSymbol(")");
      return f;
    }
    return Atom();
  }

  // Returns the guard as a formula in `var`; false-y optional when absent.
  std::optional<Formula> Guard(const std::string& var) {
    if (!PeekIdent("in")) return std::nullopt;
    ++at_;
    return GuardBody(Term::Var(var));
  }

  Formula GuardBody(const Term& t) {
    if (PeekIdent("ball")) {
      ++at_;
      ExpectSymbol("(");
      Term c = ParseTerm();
      ExpectSymbol(",");
      std::uint32_t r = Number();
      ExpectSymbol(")");
      return Formula::Dist(c, t, r);
    }
    if (Peek().type == Tok::kSet) return Formula::Member(t, toks_[at_++].text);
    std::size_t pos = Peek().pos;
    std::string name = Name();
    auto it = macros_.find(name);
    if (it == macros_.end()) throw ParseError("unknown guard '" + name + "'", pos);
    if (it->second.params.size() != 1) throw ParseError("guard '" + name + "' must take one argument", pos);
    return Instantiate(it->second, {t});
  }

  Formula Instantiate(const Macro& m, const std::vector<Term>& args) {
    std::map<std::string, Term> sub;
    for (std::size_t i = 0; i < args.size(); ++i) sub[m.params[i]] = args[i];
    return Substitute(m.body, sub);
  }

  Formula Quantifier() {
    std::string kw = toks_[at_++].text;
    std::size_t kw_pos = toks_[at_ - 1].pos;
    std::vector<std::string> vars{Name()};
    while (PeekSymbol(",")) {
      ++at_;
      vars.push_back(Name());
    }
    if (kw == "exists!" && vars.size() != 1)
      throw ParseError("exists! binds exactly one variable", kw_pos);
    // One guard per variable: the guard text is re-read for each.
    std::size_t guard_start = at_;
    std::vector<std::optional<Formula>> guards;
    for (const auto& v : vars) {
      at_ = guard_start;
      guards.push_back(Guard(v));
    }
    ExpectSymbol(".");
    Formula body = Implies();
    if (kw == "exists!") return Unique(vars[0], guards[0], body);
    for (std::size_t i = vars.size(); i-- > 0;) {
      if (kw == "exists") {
        body = Formula::Exists(vars[i], guards[i] ? Formula::And(*guards[i], body) : body);
      } else {
        body = Formula::Forall(vars[i], guards[i] ? Formula::Implies(*guards[i], body) : body);
      }
    }
    return body;
  }

  Formula Unique(const std::string& z, const std::optional<Formula>& guard, const Formula& theta) {
    std::set<std::string> taken = VariableNames(theta);
    taken.insert(z);
    if (guard) {
      auto g = VariableNames(*guard);
      taken.insert(g.begin(), g.end());
    }
    std::string other = FreshName(z + "'", taken);
    Formula theta_other = Substitute(theta, {{z, Term::Var(other)}});
    Formula same = Formula::Equal(Term::Var(other), Term::Var(z));
    Formula witness = guard ? Formula::And(*guard, theta) : theta;
    Formula premise = theta_other;
    if (guard && options_.unique_guard == UniqueGuard::kBoth)
      premise = Formula::And(Substitute(*guard, {{z, Term::Var(other)}}), theta_other);
    return Formula::Exists(z, Formula::And(witness, Formula::Forall(other, Formula::Implies(premise, same))));
  }

  Formula Atom() {
    const Token& t = Peek();
    if (t.type == Tok::kIdent) {
      if (t.text == "true") {
        ++at_;
        return Formula::True();
      }
      if (t.text == "false") {
        ++at_;
        return Formula::False();
      }
      if (t.text == "E" && PeekSymbol("(", 1)) {
        at_ += 2;
        Term a = ParseTerm();
        ExpectSymbol(",");
        Term b = ParseTerm();
        ExpectSymbol(")");
        return Formula::Edge(a, b);
      }
      if (t.text == "dist" && PeekSymbol("(", 1)) {
        at_ += 2;
        Term a = ParseTerm();
        ExpectSymbol(",");
        Term b = ParseTerm();
        ExpectSymbol(")");
        ExpectSymbol("<=");
        return Formula::Dist(a, b, Number());
      }
      if (t.text.size() > 2 && t.text.compare(0, 2, "P_") == 0 &&
          t.text.find_first_not_of("0123456789", 2) == std::string::npos) {
        std::size_t pos = t.pos;
        std::uint32_t index;
        try {
          unsigned long long v = std::stoull(t.text.substr(2));
          if (v > 0xffffffffULL) throw std::out_of_range("big");
          index = static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
          throw ParseError("part index out of range", pos);
        }
        if (index == 0) throw ParseError("part indices start at 1", pos);
        if (options_.max_part && index > *options_.max_part)
          throw ParseError("unknown predicate " + t.text, pos);
        ++at_;
        ExpectSymbol("(");
        Term a = ParseTerm();
        ExpectSymbol(")");
        return Formula::Part(index, a);
      }
      auto it = macros_.find(t.text);
      if (it != macros_.end()) {
        std::size_t pos = t.pos;
        ++at_;
        std::vector<Term> args;
        if (PeekSymbol("(")) {
          ++at_;
          if (!PeekSymbol(")")) {
            args.push_back(ParseTerm());
            while (PeekSymbol(",")) {
              ++at_;
              args.push_back(ParseTerm());
            }
          }
          ExpectSymbol(")");
        }
        if (args.size() != it->second.params.size())
          throw ParseError("macro '" + t.text + "' expects " + std::to_string(it->second.params.size()) +
                               " arguments",
                           pos);
        return Instantiate(it->second, args);
      }
    }
    if (t.type != Tok::kIdent && t.type != Tok::kConst) Fail("expected a formula");
    if (t.type == Tok::kIdent && IsKeyword(t.text)) Fail("unexpected '" + t.text + "'");
    Term a = ParseTerm();
    if (PeekSymbol("=")) {
      ++at_;
      return Formula::Equal(a, ParseTerm());
    }
    if (PeekSymbol("!=")) {
      ++at_;
      return Formula::Not(Formula::Equal(a, ParseTerm()));
    }
    if (PeekIdent("in")) {
      ++at_;
      return GuardBody(a);
    }
    Fail("expected '=', '!=' or 'in'");
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  ParseOptions options_;
  std::map<std::string, Macro> macros_;
};

}  // namespace

Formula ParseFormula(std::string_view text, const ParseOptions& options) {
  Parser p(text, options);
  return p.Program();
}

}  // namespace prescheck
