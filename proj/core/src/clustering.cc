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

#include "icc/clustering.h"

#include <algorithm>
#include <limits>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "icc/agreement.h"
#include "icc/disjoint_set.h"

namespace icc {

absl::StatusOr<Clustering> Clustering::FromLabels(std::vector<Assignment> labels) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1].first == labels[i].first) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", labels[i].first, " assigned more than once"));
    }
  }
  // Vertices are visited in ascending order, so the first member seen for a
  // label is the cluster minimum.
  absl::flat_hash_map<VertexId, VertexId> canonical;
  Clustering c;
  c.assignment_.reserve(labels.size());
  for (auto [v, label] : labels) {
    auto [it, inserted] = canonical.try_emplace(label, v);
    c.assignment_.emplace_back(v, it->second);
  }
  c.num_clusters_ = canonical.size();
  return c;
}

Clustering Clustering::Singletons(const SignedGraph& g) {
  Clustering c;
  for (VertexId v : g.SortedVertices()) c.assignment_.emplace_back(v, v);
  c.num_clusters_ = c.assignment_.size();
  return c;
}

absl::StatusOr<VertexId> Clustering::LabelOf(VertexId v) const {
  auto it = std::lower_bound(assignment_.begin(), assignment_.end(),
                             Assignment{v, 0});
  if (it == assignment_.end() || it->first != v) {
    return absl::NotFoundError(absl::StrCat("vertex ", v, " is not assigned"));
  }
  return it->second;
}

std::vector<std::vector<VertexId>> Clustering::Clusters() const {
  std::vector<Assignment> by_label;
  by_label.reserve(assignment_.size());
  for (auto [v, label] : assignment_) by_label.emplace_back(label, v);
  std::sort(by_label.begin(), by_label.end());
  std::vector<std::vector<VertexId>> clusters;
  for (std::size_t i = 0; i < by_label.size(); ++i) {
    if (i == 0 || by_label[i].first != by_label[i - 1].first) clusters.emplace_back();
    clusters.back().push_back(by_label[i].second);
  }
  return clusters;
}

Clustering ClusteringFromRoots(const VertexSlots& slots, std::span<const std::uint32_t> roots) {
  const std::size_t n = slots.size();
  std::vector<VertexId> min_id(n, std::numeric_limits<VertexId>::max());
  for (Slot s = 0; s < n; ++s) min_id[roots[s]] = std::min(min_id[roots[s]], slots.IdAt(s));

  Clustering c;
  c.assignment_.resize(n);
  for (Slot s = 0; s < n; ++s) {
    c.assignment_[s] = {slots.IdAt(s), min_id[roots[s]]};
    if (roots[s] == s) ++c.num_clusters_;
  }
  if (!slots.sorted_by_id()) std::sort(c.assignment_.begin(), c.assignment_.end());
  return c;
}

namespace {

Clustering ComponentsOf(const VertexSlots& slots, DisjointSet& sets) {
  std::vector<std::uint32_t> roots(slots.size());
  for (Slot s = 0; s < roots.size(); ++s) roots[s] = sets.Find(s);
  return ClusteringFromRoots(slots, roots);
}

}  // namespace

Clustering CcBaseline(const SignedGraph& g, double eps, ClusteringStats* stats) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> agree(n, 0);
  std::vector<std::pair<Slot, Slot>> agreeing;

  for (Slot s = 0; s < n; ++s) {
    const VertexId id = g.IdAt(s);
    const auto ns = g.NeighborsAt(s);
    for (VertexId w : ns) {
      if (w < id) continue;
      const Slot t = g.SlotOf(w);
      const auto nt = g.NeighborsAt(t);
      if (NonAgreementFromCounts(ns.size(), nt.size(), CountCommon(ns, nt)) < eps) {
        ++agree[s];
        ++agree[t];
        agreeing.emplace_back(s, t);
      }
    }
  }

  std::vector<char> heavy(n);
  for (Slot s = 0; s < n; ++s) heavy[s] = !IsLightCount(agree[s], g.DegreeAt(s), eps);

  DisjointSet sets(n);
  std::size_t kept = 0;
  for (auto [s, t] : agreeing) {
    if (heavy[s] || heavy[t]) {
      sets.Union(s, t);
      ++kept;
    }
  }

  if (stats != nullptr) {
    stats->agree_edges = agreeing.size();
    stats->heavy_vertices = static_cast<std::size_t>(std::count(heavy.begin(), heavy.end(), 1));
    stats->light_vertices = n - stats->heavy_vertices;
    stats->kept_edges = kept;
  }
  return ComponentsOf(g.slots(), sets);
}

absl::StatusOr<Clustering> IccQuery(const NaoIndex& index, const SignedGraph& g, double eps,
                                    ClusteringStats* stats) {
  if (absl::Status st = index.CheckFresh(g); !st.ok()) return st;
  const VertexSlots& slots = index.slots();
  const std::size_t n = slots.size();

  std::vector<char> heavy(n);
  for (Slot s = 0; s < n; ++s) heavy[s] = index.IsHeavyAt(s, eps);

  // Every surviving edge has a heavy endpoint, so walking the agreeing
  // prefixes of heavy vertices reaches all of them.
  DisjointSet sets(n);
  for (Slot s = 0; s < n; ++s) {
    if (!heavy[s]) continue;
    for (const NaoEntry& e : index.OrderingAt(s)) {
      if (!(e.distance < eps)) break;
      sets.Union(s, slots.Find(e.neighbor));
    }
  }

  if (stats != nullptr) {
    std::size_t prefix_total = 0;
    std::size_t kept_twice = 0;
    for (Slot s = 0; s < n; ++s) {
      const std::size_t prefix = index.AgreePrefixAt(s, eps);
      prefix_total += prefix;
      for (const NaoEntry& e : index.OrderingAt(s).first(prefix)) {
        if (heavy[s] || heavy[slots.Find(e.neighbor)]) ++kept_twice;
      }
    }
    stats->agree_edges = prefix_total / 2;
    stats->heavy_vertices = static_cast<std::size_t>(std::count(heavy.begin(), heavy.end(), 1));
    stats->light_vertices = n - stats->heavy_vertices;
    stats->kept_edges = kept_twice / 2;
  }
  return ComponentsOf(slots, sets);
}

absl::StatusOr<std::uint64_t> ClusteringCost(const SignedGraph& g, const Clustering& c) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> label(n);
  for (Slot s = 0; s < n; ++s) {
    absl::StatusOr<VertexId> l = c.LabelOf(g.IdAt(s));
    if (!l.ok()) return l.status();
    label[s] = *l;
  }
  if (c.num_vertices() != n) {
    return absl::InvalidArgumentError(absl::StrCat("clustering covers ", c.num_vertices(),
                                                   " vertices, graph has ", n));
  }
  std::uint64_t cut = 0;
  std::uint64_t inside = 0;
  for (Slot s = 0; s < n; ++s) {
    const VertexId id = g.IdAt(s);
    for (VertexId w : g.NeighborsAt(s)) {
      if (w < id) continue;
      if (label[s] == label[g.SlotOf(w)]) {
        ++inside;
      } else {
        ++cut;
      }
    }
  }
  std::uint64_t pairs_inside = 0;
  for (const auto& members : c.Clusters()) {
    const std::uint64_t k = members.size();
    pairs_inside += k * (k - 1) / 2;
  }
  return cut + (pairs_inside - inside);
}

absl::StatusOr<bool> SamePartition(const Clustering& a, const Clustering& b) {
  const auto x = a.assignment();
  const auto y = b.assignment();
  bool same_vertices = x.size() == y.size();
  for (std::size_t i = 0; same_vertices && i < x.size(); ++i) {
    same_vertices = x[i].first == y[i].first;
  }
  if (!same_vertices) return absl::InvalidArgumentError("clusterings cover different vertex sets");
  return std::equal(x.begin(), x.end(), y.begin());
}

}  // namespace icc
