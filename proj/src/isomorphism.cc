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

#include "prescheck/isomorphism.h"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "prescheck/error.h"

namespace prescheck {
namespace {

using Coloring = std::vector<std::uint32_t>;

// Refines until stable. New color ids are ranks of (old color, sorted
// neighbor colors) signatures, so the result does not depend on vertex ids.
Coloring Refine(const Graph& g, Coloring colors) {
  const std::size_t n = g.order();
  std::size_t classes = 0;
  {
    std::vector<std::uint32_t> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    classes = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  while (true) {
    std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> sigs;
    sigs.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::uint32_t> sig{colors[v]};
      std::vector<std::uint32_t> nb;
      g.neighbors(v).ForEach([&](Vertex w) { nb.push_back(colors[w]); });
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      sigs.emplace_back(std::move(sig), v);
    }
    std::vector<std::vector<std::uint32_t>> distinct;
    distinct.reserve(n);
    for (const auto& s : sigs) distinct.push_back(s.first);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Coloring next(n);
    for (const auto& [sig, v] : sigs) {
      next[v] = static_cast<std::uint32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig) - distinct.begin());
    }
    colors = std::move(next);
    if (distinct.size() == classes) return colors;
    classes = distinct.size();
  }
}

// Swapping twins is an automorphism, so search branches on them coincide.
bool AreTwins(const Graph& g, Vertex a, Vertex b) {
  VertexSet na = g.neighbors(a), nb = g.neighbors(b);
  na.erase(b);
  nb.erase(a);
  return na == nb;
}

// Backtracking over a single graph that is the disjoint union of the two
// inputs, so refined colors are directly comparable across sides.
class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, Coloring joint)
      : n_(g.order()), union_(DisjointUnion(g, h)), g_(g), h_(h), initial_(std::move(joint)) {}

  bool Run() { return Search(Refine(union_, initial_)); }

 private:
  bool Balanced(const Coloring& c) const {
    std::map<std::uint32_t, long> balance;
    for (std::size_t v = 0; v < n_; ++v) ++balance[c[v]];
    for (std::size_t v = n_; v < 2 * n_; ++v) --balance[c[v]];
    return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
  }

  bool Search(const Coloring& c) {
    if (!Balanced(c)) return false;
    // Smallest non-singleton class on the left side.
    std::map<std::uint32_t, std::size_t> size;
    for (std::size_t v = 0; v < n_; ++v) ++size[c[v]];
    std::optional<Vertex> pick;
    std::size_t best = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      std::size_t s = size[c[v]];
      if (s > 1 && (!pick || s < best)) {
        pick = static_cast<Vertex>(v);
        best = s;
      }
    }
    if (!pick) return Discrete(c);
    const std::uint32_t fresh = static_cast<std::uint32_t>(2 * n_ + 1) +
                                *std::max_element(c.begin(), c.end());
    std::vector<Vertex> tried;
    for (std::size_t w = n_; w < 2 * n_; ++w) {
      if (c[w] != c[*pick]) continue;
      const Vertex hw = static_cast<Vertex>(w - n_);
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return AreTwins(h_, t, hw); })) continue;
      tried.push_back(hw);
      Coloring next = c;
      next[*pick] = fresh;
      next[w] = fresh;
      if (Search(Refine(union_, std::move(next)))) return true;
    }
    return false;
  }

  bool Discrete(const Coloring& c) const {
    std::map<std::uint32_t, Vertex> right;
    for (std::size_t w = n_; w < 2 * n_; ++w) right[c[w]] = static_cast<Vertex>(w - n_);
    std::vector<Vertex> map(n_);
    for (std::size_t v = 0; v < n_; ++v) map[v] = right.at(c[v]);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (g_.adjacent(u, v) != h_.adjacent(map[u], map[v])) return false;
    return true;
  }

  std::size_t n_;
  Graph union_;
  const Graph& g_;
  const Graph& h_;
  Coloring initial_;
};

void CheckBound(std::size_t order, std::size_t bound) {
  if (order > bound) {
    throw SizeLimitExceeded("isomorphism test on " + std::to_string(order) +
                            " vertices exceeds the bound " + std::to_string(bound));
  }
}

void CanonicalSearch(const Graph& g, const Coloring& c, std::optional<std::string>& best) {
  const std::size_t n = g.order();
  std::map<std::uint32_t, std::size_t> size;
  for (auto col : c) ++size[col];
  std::optional<Vertex> pick;
  std::size_t best_size = 0;
  std::uint32_t pick_color = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t s = size[c[v]];
    if (s > 1 && (!pick || s < best_size || (s == best_size && c[v] < pick_color))) {
      pick = v;
      best_size = s;
      pick_color = c[v];
    }
  }
  if (!pick) {
    // Discrete: order vertices by color and emit colors + adjacency.
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[c[v]] = v;
    std::string cert;
    cert.reserve(n * n / 2 + 8 * n);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) cert.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  std::vector<Vertex> tried;
  for (Vertex w = 0; w < n; ++w) {
    if (c[w] != pick_color) continue;
    if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return AreTwins(g, t, w); })) continue;
    tried.push_back(w);
    // Individualize w: shift every color up by one except w's class, which
    // splits into {w} (kept) and the rest (moved above it).
    Coloring next(n);
    for (Vertex v = 0; v < n; ++v) next[v] = c[v] * 2 + ((c[v] == pick_color && v != w) ? 1 : 0);
    CanonicalSearch(g, Refine(g, std::move(next)), best);
  }
}

}  // namespace

bool IsIsomorphic(const Graph& g, const Graph& h, std::size_t bound) {
  Coloring cg(g.order(), 0), ch(h.order(), 0);
  return IsIsomorphic(g, cg, h, ch, bound);
}

bool IsIsomorphic(const Graph& g, std::span<const std::uint32_t> g_colors,
                  const Graph& h, std::span<const std::uint32_t> h_colors,
                  std::size_t bound) {
  CheckBound(g.order(), bound);
  CheckBound(h.order(), bound);
  if (g_colors.size() != g.order() || h_colors.size() != h.order())
    throw InvalidArgument("color vector length does not match graph order");
  if (g.order() != h.order() || g.EdgeCount() != h.EdgeCount()) return false;
  if (g.order() == 0) return true;
  Coloring joint(g_colors.begin(), g_colors.end());
  joint.insert(joint.end(), h_colors.begin(), h_colors.end());
  return IsoSearch(g, h, std::move(joint)).Run();
}

bool IsIsomorphic(const LabeledStructure& a, const LabeledStructure& b, std::size_t bound) {
  if (a.parts.has_value() != b.parts.has_value()) return false;
  if (a.parts && a.parts->k() != b.parts->k()) return false;
  Coloring ca(a.order(), 0), cb(b.order(), 0);
  if (a.parts) {
    ca = a.parts->parts();
    cb = b.parts->parts();
  }
  return IsIsomorphic(a.graph, ca, b.graph, cb, bound);
}

std::string CanonicalForm(const Graph& g, std::span<const std::uint32_t> colors) {
  if (colors.size() != g.order()) throw InvalidArgument("color vector length does not match graph order");
  // Header: multiset of input colors, so equal certificates imply equal
  // color distributions even when refinement renumbers them.
  Coloring sorted(colors.begin(), colors.end());
  std::sort(sorted.begin(), sorted.end());
  std::string header = std::to_string(g.order()) + ":";
  for (auto c : sorted) header += std::to_string(c) + ",";
  // Refinement ranks are canonical, but they forget the original values of
  // singleton-free classes only if we start from the raw colors; ranks of the
  // initial colors keep them comparable.
  Coloring start(colors.begin(), colors.end());
  std::vector<std::uint32_t> distinct = sorted;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& c : start)
    c = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
  std::optional<std::string> best;
  if (g.order() == 0) return header;
  CanonicalSearch(g, Refine(g, std::move(start)), best);
  return header + "|" + *best;
}

}  // namespace prescheck
