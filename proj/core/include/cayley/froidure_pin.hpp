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

// The sequential enumeration engine. A single update step adds the first
// unknown right multiple of the frontier element, deducing it from known
// products whenever the suffix word followed by the generator is itself not
// reduced; only otherwise is an actual multiplication performed. The driver
// sweeps the frontier in short-lex order and completes the left table one
// whole length class at a time, with no multiplications at all.

#ifndef CAYLEY_FROIDURE_PIN_HPP_
#define CAYLEY_FROIDURE_PIN_HPP_

#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <utility>   // for pair

#include "snapshot.hpp"
#include "types.hpp"

namespace cayley {

//! No size limit: enumerate to completion.
inline constexpr std::uint64_t LIMIT_MAX
    = std::numeric_limits<std::uint64_t>::max();

//! One step: defines the right multiple of the frontier element by the first
//! unapplied generator, appending a new element or recording a rewriting
//! rule when a multiplication was needed. A step whose table entry is
//! already defined (possible after resuming a discarded sweep) is skipped,
//! which keeps resumption idempotent.
//!
//! Throws UsageError if the snapshot is complete or all generators have been
//! applied to the frontier element.
Snapshot& update(Snapshot& s);

//! Enumerates until at least min(limit, |S|) elements are known, then
//! returns the snapshot with a class-aligned frontier and the left table
//! caught up. Calling again with a larger limit resumes from the stored
//! frontier. Throws UsageError for limit = 0.
Snapshot& froidure_pin(Snapshot& s, std::uint64_t limit = LIMIT_MAX);

struct MemberResult {
  bool                              found;
  std::optional<element_index_type> index;
};

//! Runs the enumeration loop only until x appears (checking after every
//! growth step), or to completion when x is not in the semigroup.
MemberResult enumerate_until_member(Snapshot& s, Element const& x);

}  // namespace cayley
#endif  // CAYLEY_FROIDURE_PIN_HPP_
