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

// Naive reference implementations used to check the optimized paths. They
// read the graph only through its public id-level API and share no helpers
// with the agreement, index or clustering code.

#ifndef ICC_ORACLE_H_
#define ICC_ORACLE_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "icc/clustering.h"
#include "icc/nao_index.h"
#include "icc/signed_graph.h"

namespace icc::oracle {

// |N(u) symmetric-difference N(v)| / max(deg u, deg v), with both
// neighborhoods materialized as std::set.
absl::StatusOr<double> NonAgreement(const SignedGraph& g, VertexId u, VertexId v);

// Rebuilds the sparsified edge set with the predicates above and returns its
// connected components found by breadth-first search.
Clustering Cluster(const SignedGraph& g, double eps);

// Fresh index of the current graph, the reference for maintained indexes.
NaoIndex RebuildIndex(const SignedGraph& g);

// Cost by enumerating all n(n-1)/2 vertex pairs.
absl::StatusOr<std::uint64_t> ClusteringCost(const SignedGraph& g, const Clustering& c);

}  // namespace icc::oracle

#endif  // ICC_ORACLE_H_
