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

#include "icc/vertex_slots.h"

namespace icc {

void VertexSlots::SetSlot(VertexId id, Slot slot) {
  if (id < kDenseIdLimit) {
    if (id >= dense_.size()) dense_.resize(std::size_t{id} + 1, kNoSlot);
    dense_[id] = slot;
  } else if (slot == kNoSlot) {
    sparse_.erase(id);
  } else {
    sparse_[id] = slot;
  }
}

Slot VertexSlots::Add(VertexId id) {
  const auto slot = static_cast<Slot>(ids_.size());
  if (!ids_.empty() && ids_.back() > id) sorted_ = false;
  ids_.push_back(id);
  SetSlot(id, slot);
  return slot;
}

VertexSlots::Removal VertexSlots::Remove(VertexId id) {
  Removal removal;
  removal.vacated = Find(id);
  const auto last = static_cast<Slot>(ids_.size() - 1);
  if (removal.vacated != last) {
    const VertexId moved = ids_[last];
    ids_[removal.vacated] = moved;
    SetSlot(moved, removal.vacated);
    removal.moved_from = last;
    sorted_ = false;
  }
  ids_.pop_back();
  SetSlot(id, kNoSlot);
  if (ids_.size() <= 1) sorted_ = true;
  return removal;
}

}  // namespace icc
