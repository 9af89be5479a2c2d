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

#include "prescheck/embedding.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "prescheck/error.h"

namespace prescheck {

bool IsEmbedding(const Graph& pattern, const Graph& host, const Embedding& f) {
  if (f.size() != pattern.order()) return false;
  for (Vertex x : f)
    if (x >= host.order()) return false;
  for (Vertex i = 0; i < f.size(); ++i) {
    for (Vertex j = i + 1; j < f.size(); ++j) {
      if (f[i] == f[j]) return false;
      if (pattern.adjacent(i, j) != host.adjacent(f[i], f[j])) return false;
    }
  }
  return true;
}

namespace {

class Search {
 public:
  Search(const Graph& pattern, const Graph& host, const std::function<bool(const Embedding&)>& visit)
      : p_(pattern), h_(host), visit_(visit), image_(pattern.order(), 0) {
    const std::size_t np = p_.order(), nh = h_.order();
    order_.resize(np);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return p_.degree(a) > p_.degree(b); });
    // Degree and co-degree filters.
    for (Vertex v = 0; v < np; ++v) {
      VertexSet d(nh);
      for (Vertex w = 0; w < nh; ++w)
        if (h_.degree(w) >= p_.degree(v) && nh - 1 - h_.degree(w) >= np - 1 - p_.degree(v)) d.insert(w);
      domain_.push_back(std::move(d));
    }
  }

  void Run() {
    if (p_.order() > h_.order()) return;
    VertexSet used(h_.order());
    Extend(0, used);
  }

 private:
  // Returns false once the visitor asks to stop.
  bool Extend(std::size_t depth, VertexSet& used) {
    if (depth == order_.size()) return visit_(image_);
    const Vertex p = order_[depth];
    VertexSet cand = domain_[p] - used;
    for (std::size_t i = 0; i < depth && !cand.empty(); ++i) {
      const Vertex q = order_[i];
      if (p_.adjacent(p, q)) {
        cand &= h_.neighbors(image_[q]);
      } else {
        cand -= h_.neighbors(image_[q]);
      }
    }
    for (Vertex w = cand.First(); w < cand.universe(); w = cand.NextFrom(w + 1)) {
      image_[p] = w;
      used.insert(w);
      bool go_on = Extend(depth + 1, used);
      used.erase(w);
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& p_;
  const Graph& h_;
  const std::function<bool(const Embedding&)>& visit_;
  std::vector<Vertex> order_;
  std::vector<VertexSet> domain_;
  Embedding image_;
};

// Uniform draw below `bound` by rejection, independent of the standard
// library's distribution algorithms.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

void ForEachEmbedding(const Graph& pattern, const Graph& host,
                      const std::function<bool(const Embedding&)>& visit) {
  Search s(pattern, host, visit);
  s.Run();
}

std::vector<Embedding> FindEmbeddings(const Graph& pattern, const Graph& host, std::optional<std::size_t> limit) {
  std::vector<Embedding> out;
  if (limit && *limit == 0) return out;
  ForEachEmbedding(pattern, host, [&](const Embedding& e) {
    out.push_back(e);
    return !limit || out.size() < *limit;
  });
  return out;
}

std::uint64_t CountEmbeddings(const Graph& pattern, const Graph& host) {
  std::uint64_t count = 0;
  ForEachEmbedding(pattern, host, [&](const Embedding&) {
    ++count;
    return true;
  });
  return count;
}

Extension RandomExtension(const Graph& g, std::uint32_t extra, Rational density, std::uint64_t seed) {
  if (density.den == 0 || density.num > density.den) throw InvalidArgument("density must lie in [0,1]");
  const std::size_t n = g.order();
  Extension ext{Graph(n + extra), Embedding(n)};
  for (auto [u, v] : g.Edges()) ext.host.AddEdge(u, v);
  std::iota(ext.witness.begin(), ext.witness.end(), 0);
  std::mt19937_64 rng(seed);
  for (Vertex w = static_cast<Vertex>(n); w < n + extra; ++w)
    for (Vertex v = 0; v < w; ++v)
      if (UniformBelow(rng, density.den) < density.num) ext.host.AddEdge(v, w);
  return ext;
}

}  // namespace prescheck
