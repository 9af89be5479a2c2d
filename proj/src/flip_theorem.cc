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


#include "prescheck/flip_theorem.h"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "parallel.h"
#include "prescheck/error.h"
#include "prescheck/evaluate.h"
#include "prescheck/isomorphism.h"

namespace prescheck {

namespace {

std::uint64_t Add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw SizeLimitExceeded("theorem constant overflows 64 bits");
  return out;
}

std::uint64_t Mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw SizeLimitExceeded("theorem constant overflows 64 bits");
  return out;
}

}  // namespace

ConstantSchedule TheoremConstants(std::uint64_t rho, std::uint64_t s, std::uint64_t gamma, std::uint64_t ell,
                                  std::uint64_t p) {
  ConstantSchedule c{rho, s, gamma, ell, p};
  c.q = Add(Add(gamma, Mul(3, rho)), 3);
  c.d = Add(Add(Mul(Mul(Mul(2, Add(rho, 1)), Add(ell, 1)), s), Mul(6, rho)), 2);
  c.n = Mul(Add(ell, 2), s);
  const std::uint64_t n_minus_one = c.n == 0 ? 0 : c.n - 1;
  c.m = Add(Add(Add(Mul(n_minus_one, c.q), s), Mul(ell, s)), 1);
  c.r = Add(Add(Mul(Mul(4, c.d), p), Mul(2, rho)), 1);
  return c;
}

// ---------------------------------------------------------------------------
// MSO game on small rooted balls.

namespace {

struct RootedBall {
  Graph graph;
  std::vector<std::uint32_t> labels;  // part index + 1, or 0 without parts
  Vertex root = 0;                    // index inside graph
};

RootedBall MakeBall(const LabeledStructure& s, Vertex v, std::uint32_t d) {
  if (v >= s.order()) throw InvalidArgument("vertex out of range");
  InducedSubgraph sub = Induce(s.graph, Ball(s.graph, v, d));
  RootedBall b;
  b.root = *sub.to_new[v];
  for (Vertex old : sub.to_original) b.labels.push_back(s.parts ? s.parts->part(old) + 1 : 0);
  b.graph = std::move(sub.graph);
  return b;
}

// Equal ids for two positions iff Duplicator wins the remaining game from
// them. Ids are shared between every ball handled by one instance.
class GameTypes {
 public:
  std::uint32_t RootType(const RootedBall& b, std::uint32_t rounds) {
    ball_ = &b;
    elements_ = {b.root};
    sets_.clear();
    return TypeOf(rounds);
  }

 private:
  std::uint32_t Intern(std::vector<std::int64_t> key) {
    auto [it, fresh] = table_.try_emplace(std::move(key), static_cast<std::uint32_t>(table_.size()));
    return it->second;
  }

  std::uint32_t Atomic() {
    const auto& g = ball_->graph;
    std::vector<std::int64_t> key{-1};
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      Vertex x = elements_[i];
      key.push_back(ball_->labels[x]);
      for (std::size_t j = 0; j < i; ++j) key.push_back(x == elements_[j] ? 2 : g.adjacent(x, elements_[j]) ? 1 : 0);
      for (std::uint32_t mask : sets_) key.push_back((mask >> x) & 1);
    }
    return Intern(std::move(key));
  }

  std::uint32_t TypeOf(std::uint32_t rounds) {
    std::uint32_t atomic = Atomic();
    if (rounds == 0) return atomic;
    std::vector<std::int64_t> points, sets;
    const std::uint32_t order = static_cast<std::uint32_t>(ball_->graph.order());
    for (Vertex x = 0; x < order; ++x) {
      elements_.push_back(x);
      points.push_back(TypeOf(rounds - 1));
      elements_.pop_back();
    }
    // A set chosen in the last round cannot separate anything: Duplicator
    // answers with the image of its trace on the chosen points.
    if (rounds > 1) {
      for (std::uint32_t mask = 0; mask < (1u << order); ++mask) {
        sets_.push_back(mask);
        sets.push_back(TypeOf(rounds - 1));
        sets_.pop_back();
      }
    }
    auto norm = [](std::vector<std::int64_t>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    norm(points);
    norm(sets);
    std::vector<std::int64_t> key{-2, rounds, atomic};
    key.insert(key.end(), points.begin(), points.end());
    key.push_back(-3);
    key.insert(key.end(), sets.begin(), sets.end());
    return Intern(std::move(key));
  }

  std::map<std::vector<std::int64_t>, std::uint32_t> table_;
  const RootedBall* ball_ = nullptr;
  std::vector<Vertex> elements_;
  std::vector<std::uint32_t> sets_;
};

void CheckGameLimits(const RootedBall& b, std::uint32_t q) {
  if (q > kMaxGameRounds)
    throw SizeLimitExceeded("MSO game limited to " + std::to_string(kMaxGameRounds) + " rounds");
  if (b.graph.order() > kMaxGameBall)
    throw SizeLimitExceeded("MSO game limited to balls of " + std::to_string(kMaxGameBall) + " vertices");
}

}  // namespace

bool MsoEfEquivalent(const LabeledStructure& a_side, Vertex a, const LabeledStructure& b_side, Vertex b,
                     std::uint32_t q, std::uint32_t d) {
  RootedBall ba = MakeBall(a_side, a, d);
  RootedBall bb = MakeBall(b_side, b, d);
  CheckGameLimits(ba, q);
  CheckGameLimits(bb, q);
  GameTypes types;
  return types.RootType(ba, q) == types.RootType(bb, q);
}

// ---------------------------------------------------------------------------
// Type oracles.

std::string SignatureTypeId(const LabeledStructure& s, Vertex v, std::uint32_t d) {
  RootedBall b = MakeBall(s, v, d);
  if (b.graph.order() <= kMaxGameBall) {
    std::vector<std::uint32_t> colors(b.labels.size());
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = 2 * b.labels[i] + (i == b.root ? 1 : 0);
    return "C:" + CanonicalForm(b.graph, colors);
  }
  std::vector<std::uint32_t> dist = DistancesFrom(b.graph, b.root);
  std::vector<std::pair<std::uint32_t, std::size_t>> profile;
  for (Vertex x = 0; x < b.graph.order(); ++x) profile.emplace_back(dist[x], b.graph.degree(x));
  std::sort(profile.begin(), profile.end());
  std::string id = "S:" + std::to_string(b.labels[b.root]) + "|";
  for (auto [dd, deg] : profile) id += std::to_string(dd) + "." + std::to_string(deg) + ",";
  return id;
}

TypeClasses ClassifyVertices(const LabeledStructure& s, const TypeOracle& oracle) {
  TypeClasses out;
  std::map<std::string, std::uint32_t> index;
  GameTypes game;
  for (Vertex v = 0; v < s.order(); ++v) {
    std::string id;
    if (oracle.kind == OracleKind::kSignature) {
      id = SignatureTypeId(s, v, oracle.d);
    } else {
      RootedBall b = MakeBall(s, v, oracle.d);
      CheckGameLimits(b, oracle.q);
      id = "E:" + std::to_string(game.RootType(b, oracle.q));
    }
    auto [it, fresh] = index.try_emplace(id, static_cast<std::uint32_t>(out.ids.size()));
    if (fresh) {
      out.ids.push_back(id);
      out.first.push_back(v);
    }
    out.type_of.push_back(it->second);
  }
  // Exact ids depend on interning order; renumber them by class.
  if (oracle.kind == OracleKind::kExact)
    for (std::size_t i = 0; i < out.ids.size(); ++i) out.ids[i] = "E:" + std::to_string(i);
  out.p = out.ids.size() + oracle.headroom;
  return out;
}

// ---------------------------------------------------------------------------
// Covering greedy.

namespace {

VertexSet Region(const Graph& g, const VertexSet& centers, std::uint32_t e) {
  if (centers.empty()) return VertexSet(g.order());
  return Ball(g, centers, e);
}

// n realisations, pairwise more than 2d apart, whose d-balls avoid the
// region; empty if the greedy scans find fewer.
std::vector<Vertex> FreeWitness(const Graph& g, const std::vector<Vertex>& realisations, const VertexSet& region,
                                std::uint32_t d, std::uint32_t n) {
  if (n == 0) return {};
  VertexSet near = region.empty() ? region : Ball(g, region, d);
  VertexSet candidates(g.order());
  for (Vertex a : realisations)
    if (!near.contains(a)) candidates.insert(a);
  VertexSet picked = GreedyRIndependentSet(g, candidates, 2 * d);
  if (picked.count() < n) return {};
  std::vector<Vertex> out = picked.ToVector();
  out.resize(n);
  return out;
}

bool Covered(const Graph& g, const std::vector<Vertex>& realisations, const VertexSet& region, std::uint32_t d) {
  for (Vertex a : realisations)
    if (!Ball(g, a, d).IsSubsetOf(region)) return false;
  return true;
}

}  // namespace

bool CoverCertificate::WithinBounds() const {
  const std::uint64_t n_minus_one = n == 0 ? 0 : n - 1;
  return centers.size() <= n_minus_one * p && e <= 2ull * d * p;
}

nlohmann::json CoverCertificate::ToJson() const {
  nlohmann::json verdict_list = nlohmann::json::array();
  for (const auto& v : verdicts)
    verdict_list.push_back({{"type", v.type},
                            {"id", v.id},
                            {"verdict", v.verdict == Verdict::kCovered ? "covered" : "free"},
                            {"witnesses", v.witnesses}});
  nlohmann::json round_list = nlohmann::json::array();
  for (const auto& r : rounds) round_list.push_back({{"type", r.type}, {"added", r.added}, {"radius", r.radius}});
  return {{"d", d},          {"n", n},
          {"p", p},          {"centers", centers},
          {"e", e},          {"within_bounds", WithinBounds()},
          {"types", type_of}, {"verdicts", verdict_list},
          {"rounds", round_list}};
}

CoverCertificate BottleneckCover(const LabeledStructure& s, const TypeOracle& oracle, std::uint32_t n) {
  const Graph& g = s.graph;
  const std::uint32_t d = oracle.d;
  TypeClasses classes = ClassifyVertices(s, oracle);
  std::vector<std::vector<Vertex>> realisations(classes.ids.size());
  for (Vertex v = 0; v < g.order(); ++v) realisations[classes.type_of[v]].push_back(v);

  CoverCertificate c;
  c.d = d;
  c.n = n;
  c.p = classes.p;
  c.type_of = classes.type_of;
  VertexSet centers(g.order());
  // Each round either picks a new center or grows the region, which can only
  // happen finitely often; the cap guards against a logic error.
  const std::size_t cap = 2 * (g.order() + 1) * (classes.ids.size() + 1) + 8;
  while (true) {
    VertexSet region = Region(g, centers, c.e);
    std::optional<std::uint32_t> open;
    for (std::uint32_t t = 0; t < realisations.size() && !open; ++t)
      if (!Covered(g, realisations[t], region, d) && FreeWitness(g, realisations[t], region, d, n).empty())
        open = t;
    if (!open) break;
    if (c.rounds.size() >= cap) throw Error("covering greedy failed to terminate");
    CoverRound round{*open, {}, 0};
    VertexSet blocked = region.empty() ? region : Ball(g, region, 2 * d);
    for (Vertex a : realisations[*open]) {
      if (n > 0 && round.added.size() + 1 >= n) break;
      if (blocked.contains(a)) continue;
      round.added.push_back(a);
      blocked |= Ball(g, a, 2 * d);
    }
    if (n == 0) {
      // Nothing may be added; every type is 0-free, so this is unreachable.
      throw Error("covering greedy reached an open type with n = 0");
    }
    for (Vertex a : round.added) centers.insert(a);
    c.e += 2 * d;
    round.radius = c.e;
    c.rounds.push_back(std::move(round));
  }
  c.centers = centers.ToVector();
  VertexSet region = Region(g, centers, c.e);
  for (std::uint32_t t = 0; t < realisations.size(); ++t) {
    TypeVerdict v{t, classes.ids[t], Verdict::kCovered, {}};
    if (Covered(g, realisations[t], region, d)) {
      v.witnesses = realisations[t];
    } else {
      v.verdict = Verdict::kFree;
      v.witnesses = FreeWitness(g, realisations[t], region, d, n);
    }
    c.verdicts.push_back(std::move(v));
  }
  return c;
}

std::vector<std::string> ValidateCover(const LabeledStructure& s, const CoverCertificate& c) {
  const Graph& g = s.graph;
  std::vector<std::string> problems;
  if (c.type_of.size() != g.order()) return {"type assignment does not match the order"};
  VertexSet centers(g.order());
  for (Vertex v : c.centers) {
    if (v >= g.order()) return {"center out of range"};
    centers.insert(v);
  }
  std::size_t added = 0;
  for (const auto& r : c.rounds) added += r.added.size();
  if (added != c.centers.size()) problems.push_back("rounds do not add up to the centers");
  if (c.e != 2 * c.d * c.rounds.size()) problems.push_back("radius is not 2d per round");
  VertexSet region = Region(g, centers, c.e);
  std::vector<bool> seen;
  for (const auto& v : c.verdicts) {
    if (v.type >= seen.size()) seen.resize(v.type + 1, false);
    if (seen[v.type]) problems.push_back("type " + std::to_string(v.type) + " has two verdicts");
    seen[v.type] = true;
    VertexSet w(g.order());
    for (Vertex a : v.witnesses) {
      if (a >= g.order() || c.type_of[a] != v.type) {
        problems.push_back("witness of type " + std::to_string(v.type) + " does not realise it");
        continue;
      }
      w.insert(a);
    }
    if (w.count() != v.witnesses.size()) problems.push_back("repeated witness");
    if (v.verdict == Verdict::kCovered) {
      for (Vertex a = 0; a < g.order(); ++a)
        if (c.type_of[a] == v.type && !w.contains(a))
          problems.push_back("covered type " + std::to_string(v.type) + " omits a realisation");
      w.ForEach([&](Vertex a) {
        if (!Ball(g, a, c.d).IsSubsetOf(region))
          problems.push_back("realisation " + std::to_string(a) + " not covered");
      });
    } else {
      if (v.witnesses.size() != c.n) problems.push_back("free type " + std::to_string(v.type) + " lacks n witnesses");
      if (!IsRIndependent(g, w, 2 * c.d)) problems.push_back("free witnesses too close");
      w.ForEach([&](Vertex a) {
        if (Ball(g, a, c.d).Intersects(region)) problems.push_back("free witness meets the region");
      });
    }
  }
  for (Vertex a = 0; a < g.order(); ++a)
    if (c.type_of[a] >= seen.size() || !seen[c.type_of[a]]) {
      problems.push_back("type " + std::to_string(c.type_of[a]) + " has no verdict");
      break;
    }
  return problems;
}

// ---------------------------------------------------------------------------

DisjointExtensionVerdict DisjointExtensionCheck(const Graph& g, const Partition& p, const Flip& f,
                                                const VertexSet& s, const Formula& phi, FlipTranslation mode) {
  const std::size_t n = g.order();
  if (n > kMaxDisjointExtensionOrder)
    throw SizeLimitExceeded("disjoint extension check limited to " + std::to_string(kMaxDisjointExtensionOrder) +
                            " vertices");
  if (p.size() != n) throw InvalidArgument("partition does not cover the graph");
  if (s.universe() != n) throw InvalidArgument("subset universe does not match the graph");
  if (!FreeVariables(phi).empty()) throw InvalidArgument("formula must be a sentence");
  const auto k = static_cast<std::uint32_t>(p.k());
  Formula phi_k = TranslateFlip(phi, k, f, mode);

  DisjointExtensionVerdict out;
  LabeledStructure expanded = FlipExpansion(g, p, f);
  LabeledStructure joined = DisjointUnion(expanded, Induce(expanded, s));
  out.antecedent = Evaluate(expanded, phi_k);
  out.consequent = Evaluate(joined, phi_k);
  out.implication = !out.antecedent || out.consequent;

  // G*: the flip-sum restricted to G plus the copy of S, parts inherited.
  VertexSet keep(2 * n);
  for (Vertex v = 0; v < n; ++v) keep.insert(v);
  s.ForEach([&](Vertex v) { keep.insert(static_cast<Vertex>(n + v)); });
  InducedSubgraph star = Induce(FlipSum(g, p, f), keep);
  std::vector<std::uint32_t> part_of;
  for (Vertex old : star.to_original) part_of.push_back(p.part(old < n ? old : old - static_cast<Vertex>(n)));
  Partition star_parts(p.k(), part_of);
  out.structures_match = FlipExpansion(star.graph, star_parts, f) == joined;
  out.plain_model = Evaluate(LabeledStructure(g), phi);
  out.flip_sum_model = Evaluate(LabeledStructure(star.graph), phi);
  return out;
}

// ---------------------------------------------------------------------------
// Flip-flatness probing.

namespace {

std::size_t Score(const Graph& g, const Partition& p, const Flip& f, std::uint32_t r, VertexSet* set) {
  Graph h = ApplyFlip(g, p, f);
  VertexSet a = GreedyRIndependentSet(h, h.AllVertices(), r);
  std::size_t c = a.count();
  if (set) *set = std::move(a);
  return c;
}

// All symmetric subsets of [k]^2, in bit order over the pairs i <= j.
std::vector<Flip> AllFlips(std::uint32_t k) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i; j < k; ++j) slots.emplace_back(i, j);
  std::vector<Flip> out;
  for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if ((mask >> b) & 1) pairs.push_back(slots[b]);
    out.emplace_back(k, pairs);
  }
  return out;
}

struct Candidate {
  std::size_t score = 0;
  std::uint64_t index = 0;
  std::vector<std::uint32_t> part_of;
  Flip flip;
  bool set = false;
};

bool Better(const Candidate& a, const Candidate& b) {
  if (!b.set) return a.set;
  if (!a.set) return false;
  return a.score != b.score ? a.score > b.score : a.index < b.index;
}

}  // namespace

std::optional<FlatWitness> FlipflatProbe(const Graph& g, const ProbeOptions& o) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  const std::uint32_t k = o.k;
  if (k == 0) {
    if (n > 0) return std::nullopt;
    return FlatWitness{Partition(0, {}), Flip(0), VertexSet(0), true, 0};
  }
  if (k > 8) throw SizeLimitExceeded("flip-flatness probe limited to k <= 8");
  const bool exhaustive = k <= 2 && n <= 14;
  const std::vector<Flip> flips = AllFlips(k);

  std::vector<Candidate> best;
  std::uint64_t evaluated = 0;
  if (exhaustive) {
    // Vertex 0 stays in part 0; the other assignment is the same up to renaming.
    const std::uint64_t assignments = (k == 1 || n == 0) ? 1 : (1ull << (n - 1));
    best.resize(assignments);
    internal::ParallelFor(assignments, o.threads, [&](std::size_t mask) {
      std::vector<std::uint32_t> part_of(n, 0);
      for (Vertex v = 1; v < n; ++v) part_of[v] = (mask >> (v - 1)) & 1;
      Partition p(k, part_of);
      Candidate& mine = best[mask];
      for (std::size_t fi = 0; fi < flips.size(); ++fi) {
        Candidate c{Score(g, p, flips[fi], o.r, nullptr), mask * flips.size() + fi, part_of, flips[fi], true};
        if (Better(c, mine)) mine = std::move(c);
      }
    });
    evaluated = assignments * flips.size();
  } else {
    if (o.budget == 0) return std::nullopt;
    best.resize(o.budget);
    std::vector<std::uint64_t> counts(o.budget, 0);
    internal::ParallelFor(o.budget, o.threads, [&](std::size_t restart) {
      std::mt19937_64 rng(internal::SplitMix64(o.seed ^ internal::SplitMix64(restart)));
      std::vector<std::uint32_t> part_of(n, 0);
      std::size_t flip_index = 0;
      // The first two restarts try the plain graph and its complement.
      if (restart == 1) flip_index = 1;
      if (restart >= 2) {
        for (auto& x : part_of) x = static_cast<std::uint32_t>(rng() % k);
        flip_index = rng() % flips.size();
      }
      auto eval = [&](const std::vector<std::uint32_t>& parts, std::size_t fi) {
        ++counts[restart];
        return Score(g, Partition(k, parts), flips[fi], o.r, nullptr);
      };
      std::size_t score = eval(part_of, flip_index);
      // Hill climbing over single-vertex moves and flip changes.
      for (int pass = 0; pass < 2; ++pass) {
        bool improved = false;
        for (Vertex v = 0; v < n; ++v) {
          for (std::uint32_t to = 0; to < k; ++to) {
            if (to == part_of[v]) continue;
            std::uint32_t from = part_of[v];
            part_of[v] = to;
            std::size_t s = eval(part_of, flip_index);
            if (s > score) {
              score = s;
              improved = true;
            } else {
              part_of[v] = from;
            }
          }
        }
        for (std::size_t fi = 0; fi < flips.size(); ++fi) {
          if (fi == flip_index) continue;
          std::size_t s = eval(part_of, fi);
          if (s > score) {
            score = s;
            flip_index = fi;
            improved = true;
          }
        }
        if (!improved) break;
      }
      best[restart] = Candidate{score, restart, part_of, flips[flip_index], true};
    });
    for (auto c : counts) evaluated += c;
  }
  Candidate top;
  for (auto& c : best)
    if (Better(c, top)) top = std::move(c);
  FlatWitness w{Partition(k, top.part_of), top.flip, VertexSet(n), exhaustive, evaluated};
  Score(g, w.partition, w.flip, o.r, &w.set);
  return w;
}

bool VerifyFlatWitness(const Graph& g, const Partition& p, const Flip& f, const VertexSet& a, std::uint32_t r,
                       std::size_t m) {
  if (p.size() != g.order() || f.k() != p.k() || a.universe() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (p.part(v) >= p.k()) return false;
  if (a.count() < m) return false;
  return IsRIndependent(ApplyFlip(g, p, f), a, r);
}

}  // namespace prescheck
