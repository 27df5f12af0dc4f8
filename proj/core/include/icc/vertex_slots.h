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

#ifndef ICC_VERTEX_SLOTS_H_
#define ICC_VERTEX_SLOTS_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace icc {

// External vertex identifier, as read from an edge list. Ids need not be
// dense; SNAP files with gaps are loaded without renumbering.
using VertexId = std::uint32_t;

// Dense internal position of a vertex. Slots are always 0..size()-1.
using Slot = std::uint32_t;

inline constexpr Slot kNoSlot = std::numeric_limits<Slot>::max();

// Bidirectional id <-> slot mapping with swap-remove deletion.
//
// Ids below kDenseIdLimit are resolved through a flat array, larger ids go
// through a hash map. Owners of per-slot arrays must mirror every Remove():
// the last slot is moved into the vacated one.
class VertexSlots {
 public:
  static constexpr VertexId kDenseIdLimit = VertexId{1} << 26;

  struct Removal {
    Slot vacated = kNoSlot;
    // Slot whose contents were moved into `vacated`; nullopt when the removed
    // vertex already occupied the last slot.
    std::optional<Slot> moved_from;
  };

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  Slot Find(VertexId id) const {
    if (id < dense_.size()) return dense_[id];
    if (id < kDenseIdLimit) return kNoSlot;
    auto it = sparse_.find(id);
    return it == sparse_.end() ? kNoSlot : it->second;
  }
  bool Contains(VertexId id) const { return Find(id) != kNoSlot; }

  VertexId IdAt(Slot slot) const { return ids_[slot]; }
  std::span<const VertexId> ids() const { return ids_; }

  // True while slot order coincides with ascending id order.
  bool sorted_by_id() const { return sorted_; }

  // Precondition: !Contains(id).
  Slot Add(VertexId id);

  // Precondition: Contains(id).
  Removal Remove(VertexId id);

  void Reserve(std::size_t n) { ids_.reserve(n); }

 private:
  void SetSlot(VertexId id, Slot slot);

  std::vector<VertexId> ids_;
  std::vector<Slot> dense_;
  std::unordered_map<VertexId, Slot> sparse_;
  bool sorted_ = true;
};

}  // namespace icc

#endif  // ICC_VERTEX_SLOTS_H_
