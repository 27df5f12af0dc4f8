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

#include "icc/oracle.h"

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <set>
#include <vector>

#include "absl/strings/str_cat.h"

namespace icc::oracle {
namespace {

std::set<VertexId> NeighborSet(const SignedGraph& g, VertexId v) {
  auto neighbors = g.Neighbors(v);
  return {neighbors->begin(), neighbors->end()};
}

}  // namespace

absl::StatusOr<double> NonAgreement(const SignedGraph& g, VertexId u, VertexId v) {
  if (!g.HasVertex(u)) return absl::NotFoundError(absl::StrCat("unknown vertex ", u));
  if (!g.HasVertex(v)) return absl::NotFoundError(absl::StrCat("unknown vertex ", v));
  const std::set<VertexId> nu = NeighborSet(g, u);
  const std::set<VertexId> nv = NeighborSet(g, v);
  if (nu.count(v) == 0) {
    return absl::InvalidArgumentError(absl::StrCat(u, "-", v, " is not a positive edge"));
  }
  std::vector<VertexId> sym;
  std::set_symmetric_difference(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                std::back_inserter(sym));
  const std::size_t larger = std::max(nu.size(), nv.size());
  return static_cast<double>(sym.size()) / static_cast<double>(larger);
}

Clustering Cluster(const SignedGraph& g, double eps) {
  const std::vector<VertexId> vertices = g.SortedVertices();

  std::map<VertexId, bool> light;
  for (VertexId v : vertices) {
    const std::set<VertexId> nv = NeighborSet(g, v);
    std::size_t agree = 0;
    for (VertexId w : nv) {
      if (*NonAgreement(g, v, w) < eps) ++agree;
    }
    light[v] = static_cast<double>(agree) < eps * static_cast<double>(nv.size());
  }

  std::map<VertexId, std::vector<VertexId>> kept;
  for (VertexId v : vertices) {
    for (VertexId w : NeighborSet(g, v)) {
      if (*NonAgreement(g, v, w) < eps && !(light[v] && light[w])) kept[v].push_back(w);
    }
  }

  std::vector<Clustering::Assignment> labels;
  std::set<VertexId> visited;
  for (VertexId start : vertices) {
    if (visited.count(start) != 0) continue;
    std::deque<VertexId> queue = {start};
    visited.insert(start);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      labels.emplace_back(x, start);
      for (VertexId y : kept[x]) {
        if (visited.insert(y).second) queue.push_back(y);
      }
    }
  }
  return *Clustering::FromLabels(std::move(labels));
}

NaoIndex RebuildIndex(const SignedGraph& g) { return NaoIndex::Build(g); }

absl::StatusOr<std::uint64_t> ClusteringCost(const SignedGraph& g, const Clustering& c) {
  const std::vector<VertexId> vertices = g.SortedVertices();
  std::map<VertexId, VertexId> label;
  for (VertexId v : vertices) {
    absl::StatusOr<VertexId> l = c.LabelOf(v);
    if (!l.ok()) return l.status();
    label[v] = *l;
  }
  std::uint64_t cost = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const bool positive = g.HasEdge(vertices[i], vertices[j]);
      const bool together = label[vertices[i]] == label[vertices[j]];
      if (positive != together) ++cost;
    }
  }
  return cost;
}

}  // namespace icc::oracle
