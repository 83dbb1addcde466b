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

#include "cayley/snapshot.hpp"

#include <algorithm>

namespace cayley {

Snapshot Snapshot::minimal(std::vector<Element> generators) {
  if (generators.empty()) {
    throw UsageError("the generating set must be non-empty");
  }
  for (std::size_t i = 1; i < generators.size(); ++i) {
    require_compatible(generators[0], generators[i]);
  }
  Snapshot s;
  s._right = CayleyTable(generators.size());
  s._left  = CayleyTable(generators.size());
  s._gens  = generators;
  for (letter_type a = 0; a < generators.size(); ++a) {
    ElementMeta m{a, a, UNDEFINED, UNDEFINED, 1};
    if (s._dedup
            .find(generators[a], digest(generators[a], kDedupSeed),
                  s._elements)
            .has_value()) {
      throw UsageError("duplicate generator at index " + std::to_string(a));
    }
    s.append_element(generators[a], m);
  }
  return s;
}

element_index_type Snapshot::append_element(Element x, ElementMeta m) {
  auto const index = static_cast<element_index_type>(_elements.size());
  _dedup.insert(index, digest(x, kDedupSeed));
  _elements.push_back(std::move(x));
  _meta.push_back(m);
  _right.add_row();
  _left.add_row();
  return index;
}

element_index_type Snapshot::cayley_lookup(CayleySide         side,
                                           element_index_type i,
                                           letter_type        a) const {
  if (i >= _elements.size()) {
    throw UsageError("element index " + std::to_string(i) + " out of range");
  }
  if (a >= _gens.size()) {
    throw UsageError("letter " + std::to_string(a) + " out of range");
  }
  return side == CayleySide::right ? _right.at(i, a) : _left.at(i, a);
}

std::optional<element_index_type> Snapshot::position(Element const& x) const {
  require_compatible(_gens.front(), x);
  return _dedup.find(x, digest(x, kDedupSeed), _elements);
}

word_type Snapshot::word_of(element_index_type i) const {
  if (i >= _elements.size()) {
    throw UsageError("element index " + std::to_string(i) + " out of range");
  }
  word_type          out(_meta[i].length);
  element_index_type cur = i;
  for (std::size_t pos = out.size(); pos-- > 0;) {
    out[pos] = _meta[cur].last;
    cur      = _meta[cur].prefix;
  }
  return out;
}

std::vector<std::pair<word_type, word_type>> Snapshot::rules_of() const {
  std::vector<std::pair<word_type, word_type>> out;
  out.reserve(_rules.size());
  for (auto const& r : _rules) {
    word_type lhs = word_of(r.lhs);
    lhs.push_back(r.letter);
    out.emplace_back(std::move(lhs), word_of(r.rhs));
  }
  return out;
}

bool Snapshot::operator==(Snapshot const& that) const {
  return _gens == that._gens && _elements == that._elements
         && _meta == that._meta && _right == that._right
         && _left == that._left && _frontier == that._frontier
         && _applied == that._applied && _rules == that._rules
         && _products == that._products;
}

}  // namespace cayley
