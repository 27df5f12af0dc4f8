// Copyright 2026 The icc Authors.
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

// Seeded synthetic graphs and update streams for verification, tests and
// benchmarks. Output depends only on the seed (for a given standard library).

#ifndef ICC_GENERATORS_H_
#define ICC_GENERATORS_H_

#include <cstddef>
#include <random>
#include <vector>

#include "icc/signed_graph.h"

namespace icc {

using Rng = std::mt19937_64;

// Erdos-Renyi G(n, p) on ids 0..n-1.
SignedGraph RandomGraph(std::size_t n, double density, Rng& rng);

// `groups` blocks of (roughly) equal size; pairs inside a block are positive
// with probability p_in, pairs across blocks with probability p_out.
SignedGraph PlantedPartitionGraph(std::size_t n, std::size_t groups, double p_in, double p_out,
                                  Rng& rng);

struct StreamMix {
  double flip = 0.70;
  double add = 0.15;
  double remove = 0.15;
  // Edge probability between an added vertex and each existing vertex.
  double add_density = 0.1;
  // Removals are skipped (replaced by flips) below this vertex count.
  std::size_t min_vertices = 3;
};

// `count` valid mutation events for `g`, in order. Added vertices get fresh
// ids above every id used so far.
std::vector<UpdateEvent> RandomUpdateStream(const SignedGraph& g, std::size_t count,
                                            const StreamMix& mix, Rng& rng);

}  // namespace icc

#endif  // ICC_GENERATORS_H_
