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

#ifndef CAYLEY_TYPES_HPP_
#define CAYLEY_TYPES_HPP_

#include <cstdint>    // for uint32_t, uint64_t
#include <limits>     // for numeric_limits
#include <stdexcept>  // for invalid_argument, runtime_error
#include <string>     // for string

namespace cayley {

//! Index of an element inside a snapshot or fragment.
using element_index_type = std::uint32_t;

//! Index of a generator letter in the alphabet.
using letter_type = std::uint32_t;

//! Sentinel for "no element" / "not yet defined" table entries.
inline constexpr element_index_type UNDEFINED
    = std::numeric_limits<element_index_type>::max();

//! Thrown when an operation is called outside its contract (bad arguments,
//! violated preconditions). Maps to exit code 1 in the CLI.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//! Thrown when input data (generator files, snapshot files) is malformed.
//! Maps to exit code 2 in the CLI.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Thrown when an internal invariant fails; indicates a bug, not bad input.
//! Maps to exit code 3 in the CLI.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] inline void internal_failure(char const* expr,
                                          char const* file,
                                          int         line) {
  throw InternalError(std::string("internal invariant failed: ") + expr
                      + " at " + file + ":" + std::to_string(line));
}
}  // namespace detail

// Always-on internal invariant check; these guard deductions that must never
// be silently recomputed.
#define CAYLEY_ASSERT(expr)                                     \
  do {                                                          \
    if (!(expr)) {                                              \
      ::cayley::detail::internal_failure(#expr, __FILE__, __LINE__); \
    }                                                           \
  } while (false)

}  // namespace cayley
#endif  // CAYLEY_TYPES_HPP_
