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

#include "cayley/word.hpp"

#include <sstream>

namespace cayley {

std::strong_ordering shortlex_cmp(word_type const& u, word_type const& v) {
  if (u.size() != v.size()) {
    return u.size() <=> v.size();
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) {
      return u[i] <=> v[i];
    }
  }
  return std::strong_ordering::equal;
}

WordParts decompose(word_type const& w) {
  if (w.empty()) {
    throw UsageError("cannot decompose the empty word");
  }
  WordParts parts;
  parts.first  = w.front();
  parts.last   = w.back();
  parts.suffix = word_type(w.begin() + 1, w.end());
  parts.prefix = word_type(w.begin(), w.end() - 1);
  return parts;
}

std::string render_word(word_type const& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    os << (i == 0 ? "" : ".") << "a" << w[i];
  }
  return os.str();
}

}  // namespace cayley
