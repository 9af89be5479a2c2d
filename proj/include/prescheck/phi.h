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

#ifndef PRESCHECK_PHI_H_
#define PRESCHECK_PHI_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "prescheck/formula.h"
#include "prescheck/graph.h"
#include "prescheck/parser.h"

namespace prescheck {

// How "x in V" is read.
enum class VGuard {
  // Everything outside U and {a, b}; v2 belongs to V.
  kComplement,
  // not E(x,v1) and x != a and x != b, which leaves v2 out.
  kLiteral,
};

struct PhiOptions {
  VGuard v_guard = VGuard::kComplement;
  UniqueGuard unique_guard = UniqueGuard::kBoth;
};

// The 14 gadget variables in order: v1..v6, u1..u6, a, b.
const std::vector<std::string>& GadgetVariables();

// Full DSL text of the sentence, macros included.
std::string PhiSource(const PhiOptions& options = {});
Formula BuildPhi(const PhiOptions& options = {});
// (phi1 and psi1) implies (phi2 and psi2), free in the gadget variables.
Formula PhiBody(const PhiOptions& options = {});
// One of "I", "phi1", "psi1", "phi2", "psi2", "chi1", ..., "xi3".
Formula PhiPart(const std::string& name, const PhiOptions& options = {});

struct PhiWitness {
  std::vector<Vertex> tuple;  // images of GadgetVariables()
  VertexSet u_set, v_set;
  bool phi1 = false, psi1 = false, phi2 = false, psi2 = false;
  bool body = false;
};

struct PhiResult {
  bool holds = false;
  // Every induced gadget copy, in enumeration order.
  std::vector<PhiWitness> tuples;
  // First tuple whose body holds.
  std::optional<PhiWitness> witness;
};

// Enumerates induced copies of the gadget and evaluates the body on each.
PhiResult CheckPhi(const Graph& g, const PhiOptions& options = {});

enum class MinimalityMode { kVertexDeletion, kFullEnumeration };

struct MinimalityReport {
  bool minimal = false;
  std::size_t checked = 0;
  // Full mode: proper subsets skipped because they hold no gadget copy.
  std::uint64_t pruned = 0;
  // Proper induced subgraphs (as vertex lists) that model phi.
  std::vector<std::vector<Vertex>> smaller_models;
};

// Throws NotAModelError if g does not model phi.
//
// Vertex deletion suffices because phi is preserved by extensions: a smaller
// induced model inside g would extend to some g - v, which would then model
// phi too.
MinimalityReport CheckMinimal(const Graph& g, MinimalityMode mode, unsigned threads = 1,
                              const PhiOptions& options = {});

// Walks from v6 to v1 through adjacent V-vertices whose U-neighbourhood grows
// by exactly one, and from u1 to u6 through non-adjacent U-vertices whose
// V-neighbourhood grows by one.
struct ChainCertificate {
  std::vector<Vertex> alpha;
  std::vector<Vertex> beta;
  bool alpha_complete = false;  // reaches v1 and covers V
  bool beta_complete = false;   // reaches u6 and covers U
};
ChainCertificate BuildChains(const Graph& g, const PhiWitness& w);

enum class FuzzBases { kHn, kMixed };

struct FuzzOptions {
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> sizes = {7, 8, 9, 10};
  std::uint32_t max_extra = 4;
  FuzzBases bases = FuzzBases::kMixed;
  unsigned threads = 1;
  PhiOptions phi;
};

struct FuzzViolation {
  std::uint64_t trial;
  std::string base;
  Graph host;
};

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t base_models = 0;
  std::uint64_t host_models = 0;
  std::vector<FuzzViolation> violations;
  nlohmann::json ToJson(const FuzzOptions& options) const;
};

FuzzReport PreservationFuzz(const FuzzOptions& options);

}  // namespace prescheck

#endif  // PRESCHECK_PHI_H_
