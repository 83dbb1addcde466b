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

#include "cayley/froidure_pin.hpp"

#include "cayley/detail/engine_util.hpp"

namespace cayley {

Snapshot& update(Snapshot& s) {
  if (s.complete()) {
    throw UsageError("update requires an incomplete snapshot");
  }
  auto const r = static_cast<letter_type>(s.number_of_generators());
  if (s.applied() >= r) {
    throw UsageError("all generators already applied to the frontier element");
  }

  auto const k = s.frontier();
  auto const a = s.applied();

  if (s.right(k, a) != UNDEFINED) {  // resuming a discarded sweep
    s.set_applied(a + 1);
    return s;
  }

  auto const         mk       = s.meta(k);  // by value: appends relocate meta
  element_index_type suffix_a = UNDEFINED;  // index of suffix(k) * a, if known

  if (mk.length >= 2) {
    suffix_a = s.right(mk.suffix, a);
    CAYLEY_ASSERT(suffix_a != UNDEFINED);
    auto const& mj = s.meta(suffix_a);
    if (!(mj.prefix == mk.suffix && mj.last == a)) {
      // The suffix word followed by a is not reduced, so neither is the
      // frontier word followed by a; deduce the product from known entries.
      element_index_type mid;
      if (mj.length == 1) {
        mid = mk.first;  // generators occupy the first r slots
      } else {
        mid = s.left(mj.prefix, mk.first);
        CAYLEY_ASSERT(mid != UNDEFINED);
      }
      auto const target = s.right(mid, mj.last);
      CAYLEY_ASSERT(target != UNDEFINED);
      s.set_right(k, a, target);
      s.set_applied(a + 1);
      return s;
    }
  }

  // The product cannot be deduced: multiply, then either record a rule for a
  // duplicate or append a new element whose reduced word is word(k) . a.
  Element product = s.counted_multiply(s.element(k), s.generator(a));
  if (auto existing = s.position(product)) {
    s.set_right(k, a, *existing);
    s.add_rule(k, a, *existing);
  } else {
    ElementMeta m;
    m.first  = mk.first;
    m.last   = a;
    m.prefix = k;
    m.length = mk.length + 1;
    m.suffix = mk.length == 1 ? a : suffix_a;
    auto const fresh = s.append_element(std::move(product), m);
    s.set_right(k, a, fresh);
  }
  s.set_applied(a + 1);
  return s;
}

Snapshot& froidure_pin(Snapshot& s, std::uint64_t limit) {
  if (limit == 0) {
    throw UsageError("enumeration limit must be positive");
  }
  auto const r = static_cast<letter_type>(s.number_of_generators());

  while (!s.complete() && s.size() < limit) {
    auto const len = s.meta(s.frontier()).length;
    auto const cls = detail::class_begin(s, s.frontier());
    while (!s.complete() && s.meta(s.frontier()).length == len
           && s.size() < limit) {
      s.set_applied(0);
      while (s.applied() < r) {
        update(s);
      }
      s.advance_frontier();
    }
    if (s.complete() || s.meta(s.frontier()).length > len) {
      detail::fill_left_class(s, cls, s.frontier());
    }
  }
  return s;
}

MemberResult enumerate_until_member(Snapshot& s, Element const& x) {
  if (auto found = s.position(x)) {
    return {true, found};
  }
  auto const r = static_cast<letter_type>(s.number_of_generators());

  while (!s.complete()) {
    auto const len = s.meta(s.frontier()).length;
    auto const cls = detail::class_begin(s, s.frontier());
    while (!s.complete() && s.meta(s.frontier()).length == len) {
      s.set_applied(0);
      while (s.applied() < r) {
        auto const before = s.size();
        update(s);
        if (s.size() > before
            && s.element(static_cast<element_index_type>(before)) == x) {
          return {true, static_cast<element_index_type>(before)};
        }
      }
      s.advance_frontier();
    }
    if (s.complete() || s.meta(s.frontier()).length > len) {
      detail::fill_left_class(s, cls, s.frontier());
    }
  }
  return {false, std::nullopt};
}

}  // namespace cayley
