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

// Agreement distances and lightness computed directly from the graph. This is
// the reference math layer; the index reproduces its answers bit for bit.

#ifndef ICC_AGREEMENT_H_
#define ICC_AGREEMENT_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "icc/signed_graph.h"

namespace icc {

// Agreement distance of a positive edge from the endpoint degrees and the
// number of common neighbors: (du + dv - 2 * common) / max(du, dv).
//
// The numerator is an exact integer, so every caller that goes through this
// function obtains the identical double for the same edge.
inline double NonAgreementFromCounts(std::size_t du, std::size_t dv, std::size_t common) {
  const std::size_t numerator = du + dv - 2 * common;
  const std::size_t denominator = du > dv ? du : dv;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

// eps * deg, the agreement mass a vertex needs to be heavy. Shared by the
// direct lightness test and the index rank threshold.
inline double LightnessMass(double eps, std::size_t degree) {
  return eps * static_cast<double>(degree);
}

// A vertex is light when fewer than eps * deg of its neighbors agree with it.
// Degree-0 vertices are heavy (0 < 0 fails).
inline bool IsLightCount(std::size_t agree_count, std::size_t degree, double eps) {
  return static_cast<double>(agree_count) < LightnessMass(eps, degree);
}

// Errors with NotFound for unknown vertices and InvalidArgument when {u, v}
// is not a positive edge.
absl::StatusOr<double> NonAgreement(const SignedGraph& g, VertexId u, VertexId v);
absl::StatusOr<bool> InAgreement(const SignedGraph& g, VertexId u, VertexId v, double eps);

// Number of positive neighbors w with NonAgreement(v, w) < eps. The vertex
// itself is not counted.
absl::StatusOr<std::size_t> AgreeCount(const SignedGraph& g, VertexId v, double eps);
absl::StatusOr<bool> IsLight(const SignedGraph& g, VertexId v, double eps);

struct DistanceStats {
  // One value per positive edge, ascending, with repetitions.
  std::vector<double> sorted;
  // Distinct values with their multiplicities, ascending by value.
  std::vector<std::pair<double, std::size_t>> histogram;
  std::size_t distinct() const { return histogram.size(); }
  double min() const { return sorted.front(); }
  double max() const { return sorted.back(); }
  // Up to two most frequent values, by descending frequency and then
  // ascending value.
  std::vector<std::pair<double, std::size_t>> TopModes(std::size_t count = 2) const;
};

DistanceStats DistanceMultiset(const SignedGraph& g);

// Strictly increasing epsilon values in [0, 2].
class EpsilonSchedule {
 public:
  EpsilonSchedule() = default;
  static absl::StatusOr<EpsilonSchedule> Create(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

 private:
  explicit EpsilonSchedule(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

inline constexpr double kScheduleUpperSentinel = 1.99;

// Picks `points` evenly spaced entries of the ascending distance multiset
// (index round(i * (M - 1) / (points - 1))), drops duplicates, and adds 0 and
// 1.99 when absent. Requires at least one positive edge and points >= 2.
absl::StatusOr<EpsilonSchedule> MakeSchedule(const SignedGraph& g, std::size_t points);
absl::StatusOr<EpsilonSchedule> MakeScheduleFromSorted(const std::vector<double>& sorted,
                                                       std::size_t points);

}  // namespace icc

#endif  // ICC_AGREEMENT_H_
