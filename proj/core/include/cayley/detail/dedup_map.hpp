//
// cayley - enumeration toolkit for finite semigroups
// Copyright 2026 The cayley authors
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
//

#ifndef CAYLEY_DETAIL_DEDUP_MAP_HPP_
#define CAYLEY_DETAIL_DEDUP_MAP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "../element.hpp"
#include "../types.hpp"

namespace cayley {
namespace detail {

// Open-addressing map from element value to element index. Keys live in the
// caller's element pool; digest collisions fall back to structural equality,
// so no two distinct elements can merge. The pool is passed per call, which
// keeps the map trivially copyable along with its snapshot.
class DedupMap {
 public:
  DedupMap() : _slots(kInitialSlots), _count(0) {}

  std::optional<element_index_type> find(Element const&              x,
                                         std::uint64_t               dig,
                                         std::vector<Element> const& pool) const {
    std::size_t mask = _slots.size() - 1;
    std::size_t pos  = static_cast<std::size_t>(dig) & mask;
    while (_slots[pos].occupied) {
      if (_slots[pos].digest == dig && pool[_slots[pos].index] == x) {
        return _slots[pos].index;
      }
      pos = (pos + 1) & mask;
    }
    return std::nullopt;
  }

  // Precondition: x is pool[index] and not already present.
  void insert(element_index_type index, std::uint64_t dig) {
    if ((_count + 1) * 10 >= _slots.size() * 7) {
      grow();
    }
    std::size_t mask = _slots.size() - 1;
    std::size_t pos  = static_cast<std::size_t>(dig) & mask;
    while (_slots[pos].occupied) {
      pos = (pos + 1) & mask;
    }
    _slots[pos] = {dig, index, true};
    ++_count;
  }

  void reserve(std::size_t n) {
    while (n * 10 >= _slots.size() * 7) {
      grow();
    }
  }

  std::size_t size() const noexcept {
    return _count;
  }

  void clear() {
    _slots.assign(kInitialSlots, Slot{});
    _count = 0;
  }

 private:
  struct Slot {
    std::uint64_t      digest   = 0;
    element_index_type index    = UNDEFINED;
    bool               occupied = false;
  };

  static constexpr std::size_t kInitialSlots = 64;

  void grow() {
    std::vector<Slot> old = std::move(_slots);
    _slots.assign(old.size() * 2, Slot{});
    std::size_t mask = _slots.size() - 1;
    for (auto const& s : old) {
      if (s.occupied) {
        std::size_t pos = static_cast<std::size_t>(s.digest) & mask;
        while (_slots[pos].occupied) {
          pos = (pos + 1) & mask;
        }
        _slots[pos] = s;
      }
    }
  }

  std::vector<Slot> _slots;
  std::size_t       _count;
};

}  // namespace detail
}  // namespace cayley
#endif  // CAYLEY_DETAIL_DEDUP_MAP_HPP_
