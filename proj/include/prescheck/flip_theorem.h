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


#ifndef PRESCHECK_FLIP_THEOREM_H_
#define PRESCHECK_FLIP_THEOREM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "prescheck/formula.h"
#include "prescheck/graph.h"
#include "prescheck/transforms.h"

namespace prescheck {

struct ConstantSchedule {
  std::uint64_t rho = 0, s = 0, gamma = 0, ell = 0, p = 0;
  std::uint64_t q = 0, d = 0, n = 0, m = 0, r = 0;
};

// q = gamma+3rho+3, d = 2(rho+1)(ell+1)s+6rho+2, n = (ell+2)s,
// m = (n-1)q+s+ell*s+1 with n-1 clamped at 0, r = 4dp+2rho+1.
// Throws SizeLimitExceeded if a value does not fit in 64 bits.
ConstantSchedule TheoremConstants(std::uint64_t rho, std::uint64_t s, std::uint64_t gamma,
                                  std::uint64_t ell, std::uint64_t p);

// Largest rooted neighbourhood and round count the exact game accepts.
inline constexpr std::size_t kMaxGameBall = 10;
inline constexpr std::uint32_t kMaxGameRounds = 2;

// Duplicator wins the q-round MSO game on the radius-d balls around a and b
// (rooted at a and b, parts as labels). Point and set moves both count as
// rounds. Throws SizeLimitExceeded past the limits above.
bool MsoEfEquivalent(const LabeledStructure& a_side, Vertex a, const LabeledStructure& b_side, Vertex b,
                     std::uint32_t q, std::uint32_t d);

enum class OracleKind { kSignature, kExact };

struct TypeOracle {
  OracleKind kind = OracleKind::kSignature;
  std::uint32_t q = 1;
  std::uint32_t d = 1;
  // Added to the observed class count to give p.
  std::uint64_t headroom = 0;
};

// Rooted canonical form of the d-ball when it has at most kMaxGameBall
// vertices ("C:..."), otherwise the root's part and the sorted
// (distance, degree-in-ball) profile ("S:..."). Invariant under relabeling.
std::string SignatureTypeId(const LabeledStructure& s, Vertex v, std::uint32_t d);

struct TypeClasses {
  // Class of each vertex; classes are numbered by their smallest vertex.
  std::vector<std::uint32_t> type_of;
  std::vector<std::string> ids;
  std::vector<Vertex> first;
  // Observed classes plus headroom.
  std::uint64_t p = 0;
};

TypeClasses ClassifyVertices(const LabeledStructure& s, const TypeOracle& oracle);

enum class Verdict { kCovered, kFree };

struct TypeVerdict {
  std::uint32_t type = 0;
  std::string id;
  Verdict verdict = Verdict::kCovered;
  // Covered: every realisation. Free: n realisations, pairwise further than
  // 2d apart, with d-balls outside the cover region.
  std::vector<Vertex> witnesses;
};

struct CoverRound {
  std::uint32_t type = 0;
  std::vector<Vertex> added;
  std::uint32_t radius = 0;  // e after the round
};

struct CoverCertificate {
  std::uint32_t d = 0, n = 0;
  std::uint64_t p = 0;
  std::vector<Vertex> centers;  // D
  std::uint32_t e = 0;
  std::vector<TypeVerdict> verdicts;
  std::vector<CoverRound> rounds;
  std::vector<std::uint32_t> type_of;

  bool WithinBounds() const;
  nlohmann::json ToJson() const;
};

// The covering greedy: start from D = {}, e = 0; while a type is neither
// covered by N_e(D) nor n-free over it, take the first such type, add up to
// n-1 of its realisations outside N_2d of the region and of each other, and
// grow e by 2d. Uses oracle.d as d.
CoverCertificate BottleneckCover(const LabeledStructure& s, const TypeOracle& oracle, std::uint32_t n);

// Re-checks every verdict from graph distances alone; an empty result means
// the certificate is valid. Does not check the size bounds.
std::vector<std::string> ValidateCover(const LabeledStructure& s, const CoverCertificate& c);

struct DisjointExtensionVerdict {
  bool antecedent = false;   // G_(F,P) models phi^k
  bool consequent = false;   // G_(F,P) + G_(F,P)[S] models phi^k
  bool implication = false;
  bool plain_model = false;      // G models phi
  bool flip_sum_model = false;   // G* (induced in the flip-sum) models phi
  // G*_(F,P*) equals G_(F,P) + G_(F,P)[S] vertex for vertex.
  bool structures_match = false;
};

inline constexpr std::size_t kMaxDisjointExtensionOrder = 64;

// phi must be a sentence without part atoms. Throws SizeLimitExceeded when G
// has more than kMaxDisjointExtensionOrder vertices.
DisjointExtensionVerdict DisjointExtensionCheck(const Graph& g, const Partition& p, const Flip& f,
                                                const VertexSet& s, const Formula& phi,
                                                FlipTranslation mode = FlipTranslation::kLoopSafe);

struct FlatWitness {
  Partition partition;
  Flip flip;
  VertexSet set;
  bool exhaustive = false;
  std::uint64_t evaluated = 0;
};

struct ProbeOptions {
  std::uint32_t r = 1;
  std::uint32_t k = 2;
  std::uint64_t budget = 1000;  // random restarts when not exhaustive
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Searches k-partitions and k-flips for a large greedy r-independent set in
// the flipped graph. Exhaustive (up to part renaming) when k <= 2 and the
// order is at most 14; random restarts with local moves otherwise.
std::optional<FlatWitness> FlipflatProbe(const Graph& g, const ProbeOptions& options);

bool VerifyFlatWitness(const Graph& g, const Partition& p, const Flip& f, const VertexSet& a, std::uint32_t r,
                       std::size_t m);

}  // namespace prescheck

#endif  // PRESCHECK_FLIP_THEOREM_H_
