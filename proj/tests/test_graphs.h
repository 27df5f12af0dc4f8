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

// Small named graphs and helpers shared by the test binaries.

#ifndef ICC_TESTS_TEST_GRAPHS_H_
#define ICC_TESTS_TEST_GRAPHS_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "icc/signed_graph.h"

namespace icc::testing {

SignedGraph MakeGraph(std::initializer_list<std::pair<VertexId, VertexId>> edges,
                      std::initializer_list<VertexId> isolated = {});

// Vertices a, b, c, d are ids 0, 1, 2, 3.
SignedGraph Triangle();  // a-b, b-c, a-c
SignedGraph Path3();     // a-b-c
SignedGraph K4();
SignedGraph Star3();     // center a, leaves b, c, d

// Vertex 0 is light and agrees with its heavy neighbor 1 at eps = 1.
//
//   0-1, 0-4, 1-2, 1-3, 2-3, 4-5, 4-6, 5-6, 6-7
SignedGraph LightHeavyGraph();

struct NamedGraph {
  std::string name;
  SignedGraph graph;
};

// Every hand graph above, the archived lightness witness and a handful of
// seeded random graphs.
std::vector<NamedGraph> FixtureGraphs();

// gmock container matchers need const_iterator, which std::span lacks.
template <typename T>
std::vector<std::remove_const_t<T>> ToVector(std::span<T> items) {
  return {items.begin(), items.end()};
}

// Path of a file under tests/fixtures.
std::string FixturePath(const std::string& name);

}  // namespace icc::testing

#endif  // ICC_TESTS_TEST_GRAPHS_H_
