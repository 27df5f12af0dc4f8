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

#include "icc/generators.h"

#include <algorithm>
#include <utility>

namespace icc {

SignedGraph RandomGraph(std::size_t n, double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> vertices(n);
  for (std::size_t u = 0; u < n; ++u) {
    vertices[u] = static_cast<VertexId>(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return SignedGraph::FromEdges(edges, vertices);
}

SignedGraph PlantedPartitionGraph(std::size_t n, std::size_t groups, double p_in, double p_out,
                                  Rng& rng) {
  std::bernoulli_distribution inside(p_in);
  std::geometric_distribution<std::size_t> skip(p_out);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> vertices(n);
  auto group_of = [&](std::size_t v) { return v * groups / n; };
  for (std::size_t u = 0; u < n; ++u) {
    vertices[u] = static_cast<VertexId>(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      if (group_of(u) == group_of(v)) {
        if (inside(rng)) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    }
  }
  // Cross-block pairs: jump ahead by geometric gaps over the pair sequence
  // instead of drawing a coin per pair.
  if (p_out > 0.0) {
    for (std::size_t u = 0; u < n; ++u) {
      std::size_t v = u + skip(rng) + 1;
      while (v < n) {
        if (group_of(u) != group_of(v)) {
          edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
        v += skip(rng) + 1;
      }
    }
  }
  return SignedGraph::FromEdges(edges, vertices);
}

std::vector<UpdateEvent> RandomUpdateStream(const SignedGraph& g, std::size_t count,
                                            const StreamMix& mix, Rng& rng) {
  std::vector<VertexId> ids = g.SortedVertices();
  VertexId next_id = ids.empty() ? 0 : ids.back() + 1;

  std::discrete_distribution<int> kind({mix.flip, mix.add, mix.remove});
  std::bernoulli_distribution attach(mix.add_density);
  std::vector<UpdateEvent> events;
  events.reserve(count);

  while (events.size() < count) {
    int k = kind(rng);
    if (k == 2 && ids.size() <= mix.min_vertices) k = 0;
    if (k == 0 && ids.size() < 2) k = 1;

    UpdateEvent event;
    if (k == 0) {
      std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
      const std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      while (b == a) b = pick(rng);
      event = FlipEdge{ids[a], ids[b]};
    } else if (k == 1) {
      AddVertex add{next_id++, {}};
      for (VertexId w : ids) {
        if (attach(rng)) add.neighbors.push_back(w);
      }
      ids.push_back(add.v);
      event = std::move(add);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
      const std::size_t a = pick(rng);
      event = RemoveVertex{ids[a]};
      ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(a));
    }
    events.push_back(std::move(event));
  }
  return events;
}

}  // namespace icc
