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

#include "support/oracles.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace oracle {

using prescheck::Formula;
using prescheck::Term;

Matrix ToMatrix(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = 0; j < g.order(); ++j) m[i][j] = g.adjacent(i, j);
  return m;
}

bool BruteIsomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  Matrix a = ToMatrix(g), b = ToMatrix(h);
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex i = 0; i < perm.size() && ok; ++i)
      for (Vertex j = i + 1; j < perm.size() && ok; ++j) ok = a[i][j] == b[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

void CountInjections(const Matrix& a, const Matrix& b, std::vector<Vertex>& image, std::vector<bool>& used,
                     std::uint64_t& count) {
  const std::size_t i = image.size();
  if (i == a.size()) {
    ++count;
    return;
  }
  for (Vertex w = 0; w < b.size(); ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = a[i][j] == b[w][image[j]];
    if (!ok) continue;
    used[w] = true;
    image.push_back(w);
    CountInjections(a, b, image, used, count);
    image.pop_back();
    used[w] = false;
  }
}

}  // namespace

std::uint64_t BruteEmbeddingCount(const Graph& pattern, const Graph& host) {
  Matrix a = ToMatrix(pattern), b = ToMatrix(host);
  std::vector<Vertex> image;
  std::vector<bool> used(host.order(), false);
  std::uint64_t count = 0;
  CountInjections(a, b, image, used, count);
  return count;
}

std::vector<std::vector<std::uint32_t>> AllPairsDistances(const Graph& g) {
  const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (Vertex i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (Vertex j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

std::vector<Graph> AllGraphs(std::uint32_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) g.AddEdge(pairs[b].first, pairs[b].second);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> NonIsomorphicGraphs(std::uint32_t n) {
  std::vector<Graph> reps;
  for (Graph& g : AllGraphs(n)) {
    bool seen = false;
    for (const Graph& r : reps) {
      if (r.EdgeCount() == g.EdgeCount() && BruteIsomorphic(r, g)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(std::move(g));
  }
  return reps;
}

Graph RandomGraph(std::mt19937_64& rng, std::uint32_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) g.AddEdge(i, j);
  return g;
}

prescheck::Partition RandomPartition(std::mt19937_64& rng, std::uint32_t n, std::uint32_t k) {
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);
  std::vector<std::uint32_t> part_of(n);
  for (auto& p : part_of) p = pick(rng);
  return prescheck::Partition(k, part_of);
}

prescheck::Flip RandomFlip(std::mt19937_64& rng, std::uint32_t k) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i; j < k; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return prescheck::Flip(k, pairs);
}

namespace {

Formula RandomAtom(std::mt19937_64& rng, const std::vector<std::string>& vars, std::uint32_t parts,
                   bool allow_dist) {
  auto var = [&] { return Term::Var(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]); };
  if (vars.empty()) return std::bernoulli_distribution(0.5)(rng) ? Formula::True() : Formula::False();
  int kinds = 2 + (parts > 0 ? 1 : 0) + (allow_dist ? 1 : 0);
  int k = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
  if (k == 0) return Formula::Edge(var(), var());
  if (k == 1) return Formula::Equal(var(), var());
  if (k == 2 && parts > 0) return Formula::Part(std::uniform_int_distribution<std::uint32_t>(1, parts)(rng), var());
  return Formula::Dist(var(), var(), std::uniform_int_distribution<std::uint32_t>(0, 2)(rng));
}

Formula Build(std::mt19937_64& rng, std::vector<std::string>& vars, std::uint32_t rank, std::uint32_t parts,
              bool allow_dist, int depth) {
  std::uniform_int_distribution<int> choice(0, 9);
  int c = choice(rng);
  if (depth > 5 || (c < 3 && !vars.empty())) return RandomAtom(rng, vars, parts, allow_dist);
  if (rank > 0 && (c >= 7 || vars.empty())) {
    std::string v = "v" + std::to_string(vars.size());
    vars.push_back(v);
    Formula body = Build(rng, vars, rank - 1, parts, allow_dist, depth + 1);
    vars.pop_back();
    return std::bernoulli_distribution(0.5)(rng) ? Formula::Exists(v, body) : Formula::Forall(v, body);
  }
  if (vars.empty()) return RandomAtom(rng, vars, parts, allow_dist);
  Formula a = Build(rng, vars, rank, parts, allow_dist, depth + 1);
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
      return Formula::Not(a);
    case 1:
      return Formula::And(a, Build(rng, vars, rank, parts, allow_dist, depth + 1));
    case 2:
      return Formula::Or(a, Build(rng, vars, rank, parts, allow_dist, depth + 1));
    case 3:
      return Formula::Implies(a, Build(rng, vars, rank, parts, allow_dist, depth + 1));
    default:
      return Formula::Xor(a, Build(rng, vars, rank, parts, allow_dist, depth + 1));
  }
}

}  // namespace

Formula RandomFormula(std::mt19937_64& rng, std::vector<std::string> free_vars, std::uint32_t rank,
                      std::uint32_t parts, bool allow_dist) {
  return Build(rng, free_vars, rank, parts, allow_dist, 0);
}

std::vector<std::pair<Vertex, Vertex>> GadgetFigureEdges() {
  // v1..v6 = 0..5, u1..u6 = 6..11, a = 12, b = 13.
  auto v = [](int i) { return static_cast<Vertex>(i - 1); };
  auto u = [](int i) { return static_cast<Vertex>(5 + i); };
  const Vertex a = 12, b = 13;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j) e.emplace_back(v(i), u(j));
  for (int i = 3; i <= 6; ++i) {
    e.emplace_back(a, u(i));
    e.emplace_back(u(1), u(i));
  }
  for (int i = 4; i <= 6; ++i) {
    e.emplace_back(u(2), u(i));
    e.emplace_back(u(3), u(i));
  }
  e.emplace_back(u(4), u(6));
  e.emplace_back(v(1), v(2));
  e.emplace_back(v(2), v(3));
  e.emplace_back(v(4), v(5));
  e.emplace_back(v(5), v(6));
  e.emplace_back(a, u(2));
  e.emplace_back(a, v(2));
  e.emplace_back(b, u(5));
  e.emplace_back(b, v(5));
  e.emplace_back(b, u(6));
  return e;
}

Graph HnFromDefinition(std::uint32_t n) {
  Graph g(2 * n + 2);
  auto v = [](std::uint32_t i) { return i - 1; };
  auto u = [n](std::uint32_t i) { return n + i - 1; };
  const Vertex a = 2 * n, b = 2 * n + 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (i <= j) g.AddEdge(v(i), u(j));
      if (j == i + 1) g.AddEdge(v(i), v(j));
      if (i != j && j != i + 1 && i != j + 1) g.AddEdge(u(i), u(j));
    }
    if (i >= 2) g.AddEdge(a, u(i));
    if (i >= n - 1) g.AddEdge(b, u(i));
  }
  g.AddEdge(a, v(2));
  g.AddEdge(b, v(n - 1));
  return g;
}

Constants ConstantFormulas(std::uint64_t rho, std::uint64_t s, std::uint64_t gamma, std::uint64_t ell,
                           std::uint64_t p) {
  using U = unsigned __int128;
  Constants c;
  c.q = U(gamma) + 3 * U(rho) + 3;
  c.d = 2 * (U(rho) + 1) * (U(ell) + 1) * U(s) + 6 * U(rho) + 2;
  c.n = (U(ell) + 2) * U(s);
  U n_minus_1 = c.n == 0 ? 0 : c.n - 1;
  c.m = n_minus_1 * c.q + U(s) + U(ell) * U(s) + 1;
  c.r = 4 * c.d * U(p) + 2 * U(rho) + 1;
  return c;
}

std::vector<std::string> CoverProblems(const Graph& g, const prescheck::CoverCertificate& c) {
  std::vector<std::string> out;
  auto dist = AllPairsDistances(g);
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  auto in_region = [&](Vertex x) {
    for (Vertex z : c.centers)
      if (dist[z][x] <= c.e) return true;
    return false;
  };
  std::set<std::uint32_t> judged;
  for (const auto& v : c.verdicts) {
    judged.insert(v.type);
    for (Vertex a : v.witnesses)
      if (c.type_of[a] != v.type) out.push_back("witness of wrong type");
    if (v.verdict == prescheck::Verdict::kCovered) {
      std::size_t realisations = 0;
      for (Vertex a = 0; a < n; ++a) {
        if (c.type_of[a] != v.type) continue;
        ++realisations;
        for (Vertex x = 0; x < n; ++x)
          if (dist[a][x] <= c.d && !in_region(x)) out.push_back("uncovered ball");
      }
      if (realisations != v.witnesses.size()) out.push_back("covered list incomplete");
    } else {
      if (v.witnesses.size() != c.n) out.push_back("wrong free count");
      for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
          if (dist[v.witnesses[i]][v.witnesses[j]] <= 2 * c.d) out.push_back("free witnesses close");
        for (Vertex x = 0; x < n; ++x)
          if (dist[v.witnesses[i]][x] <= c.d && in_region(x)) out.push_back("free ball meets region");
      }
    }
  }
  for (Vertex a = 0; a < n; ++a)
    if (!judged.count(c.type_of[a])) out.push_back("type without verdict");
  return out;
}

}  // namespace oracle
