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

#ifndef CAYLEY_DETAIL_ENGINE_UTIL_HPP_
#define CAYLEY_DETAIL_ENGINE_UTIL_HPP_

#include "../snapshot.hpp"
#include "../types.hpp"

namespace cayley {
namespace detail {

// First index of the length class containing element i; word lengths are
// non-decreasing across indices.
inline element_index_type class_begin(Snapshot const&    s,
                                      element_index_type i) {
  auto const len = s.meta(i).length;
  auto       lo  = element_index_type(0);
  auto       hi  = i;
  while (lo < hi) {
    auto const mid = lo + (hi - lo) / 2;
    if (s.meta(mid).length < len) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Fills the left-table rows of one whole length class, [begin, end), by the
// chain left(a, w) = right(left(a, prefix(w)), last(w)). Performs no
// multiplications; a missing chain entry is a bug, not a fallback path.
inline void fill_left_class(Snapshot&          s,
                            element_index_type begin,
                            element_index_type end) {
  auto const r = static_cast<letter_type>(s.number_of_generators());
  for (element_index_type i = begin; i < end; ++i) {
    auto const& m = s.meta(i);
    for (letter_type a = 0; a < r; ++a) {
      element_index_type target;
      if (m.length == 1) {
        // left(a, b) for a single letter b is the right multiple a * b.
        target = s.right(a, m.first);
      } else {
        auto const mid = s.left(m.prefix, a);
        CAYLEY_ASSERT(mid != UNDEFINED);
        target = s.right(mid, m.last);
      }
      CAYLEY_ASSERT(target != UNDEFINED);
      s.set_left(i, a, target);
    }
  }
}

}  // namespace detail
}  // namespace cayley
#endif  // CAYLEY_DETAIL_ENGINE_UTIL_HPP_
