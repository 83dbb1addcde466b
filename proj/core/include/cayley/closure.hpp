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

// Extends an existing snapshot of <A> to a snapshot of <A, X> without
// recomputing products that the old snapshot already knows. Whenever a
// frontier element of the new enumeration equals an old element whose right
// multiples were all recorded, the whole row is copied through a rebase map
// with zero multiplications; the map tracks, for every old element already
// present in the new snapshot, its new index.

#ifndef CAYLEY_CLOSURE_HPP_
#define CAYLEY_CLOSURE_HPP_

#include <cstdint>
#include <functional>  // for function
#include <vector>      // for vector

#include "snapshot.hpp"
#include "types.hpp"

namespace cayley {

struct ClosureOptions {
  //! When set, the rebase-map conditions (its domain is exactly the set of
  //! old elements present in the new snapshot, and it maps value-equal
  //! indices) are re-checked after every mutation; for tests.
  bool check_rebase_map = false;

  //! Called with the partially built snapshot at every length-class
  //! boundary; for tests that sample intermediate states.
  std::function<void(Snapshot const&)> round_observer;

  //! When set, every (new index, letter) pair whose table entry was copied
  //! from the old snapshot is appended here.
  std::vector<std::pair<element_index_type, letter_type>>* copied_pairs
      = nullptr;
};

//! Returns a snapshot over the generators of `old` followed by the elements
//! of `extra` that are not already in `old` (filtered, in given order). The
//! enumeration runs until every element the old snapshot had processed (and
//! its frontier element) has been processed in the new snapshot, so the
//! result contains all of the old elements and their products by the new
//! generators; it is resumable with froidure_pin. The old snapshot is
//! read-only input and its element values are shared, not copied.
Snapshot closure(Snapshot const&             old,
                 std::vector<Element> const& extra,
                 ClosureOptions const&       options = {});

}  // namespace cayley
#endif  // CAYLEY_CLOSURE_HPP_
