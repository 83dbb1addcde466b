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

// Short-lex machinery over the generator alphabet. Words are plain letter
// sequences; the engines never store one per element, they rebuild them from
// prefix links on demand.

#ifndef CAYLEY_WORD_HPP_
#define CAYLEY_WORD_HPP_

#include <compare>  // for strong_ordering
#include <string>   // for string
#include <vector>   // for vector

#include "types.hpp"

namespace cayley {

using word_type = std::vector<letter_type>;

//! Short-lex comparison: first by length, then lexicographically by letter
//! index.
std::strong_ordering shortlex_cmp(word_type const& u, word_type const& v);

inline bool shortlex_less(word_type const& u, word_type const& v) {
  return shortlex_cmp(u, v) == std::strong_ordering::less;
}

//! First letter, suffix, prefix, last letter of a non-empty word, so that
//! w = first . suffix = prefix . last. For a single letter both the prefix
//! and the suffix are empty.
struct WordParts {
  letter_type first;
  word_type   suffix;
  word_type   prefix;
  letter_type last;
};

//! Throws UsageError on the empty word.
WordParts decompose(word_type const& w);

//! Renders a word as `a0.a1.a2` for CLI and DOT output.
std::string render_word(word_type const& w);

}  // namespace cayley
#endif  // CAYLEY_WORD_HPP_
