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

#include "cayley/closure.hpp"

#include <algorithm>

#include "cayley/detail/engine_util.hpp"
#include "cayley/froidure_pin.hpp"

namespace cayley {

namespace {

// Rebase-map invariants: its domain is exactly the set of old elements whose
// value already appears in the new snapshot, and it maps value-equal
// indices. Only run in the instrumented test mode.
void check_rebase_map(Snapshot const&                        old,
                      Snapshot const&                        t,
                      std::vector<element_index_type> const& lambda) {
  for (element_index_type i = 0; i < old.size(); ++i) {
    auto const mapped  = lambda[i] != UNDEFINED;
    auto const present = t.position(old.element(i)).has_value();
    if (mapped != present) {
      throw InternalError("rebase map domain out of sync at old index "
                          + std::to_string(i));
    }
    if (mapped && !(t.element(lambda[i]) == old.element(i))) {
      throw InternalError("rebase map value mismatch at old index "
                          + std::to_string(i));
    }
  }
}

}  // namespace

Snapshot closure(Snapshot const&             old,
                 std::vector<Element> const& extra,
                 ClosureOptions const&       options) {
  for (auto const& x : extra) {
    require_compatible(old.generator(0), x);
  }

  auto const m = static_cast<letter_type>(old.number_of_generators());

  // Filter out extra generators whose value the old snapshot already knows.
  std::vector<Element> gens = old.generators();
  for (auto const& x : extra) {
    if (!old.position(x).has_value()) {
      gens.push_back(x);
    }
  }
  Snapshot t = Snapshot::minimal(std::move(gens));
  auto const r = static_cast<letter_type>(t.number_of_generators());

  // lambda[i] is the new index of old element i, once its value has
  // appeared in the new snapshot. Initially the old generators map to
  // themselves (old letters keep their positions in the new alphabet).
  std::vector<element_index_type> lambda(old.size(), UNDEFINED);
  for (letter_type a = 0; a < m; ++a) {
    lambda[a] = a;
  }
  if (options.check_rebase_map) {
    check_rebase_map(old, t, lambda);
  }

  // The old elements whose right multiples the result must contain: every
  // element the old enumeration had processed, plus its frontier element.
  auto const target_count = static_cast<element_index_type>(
      std::min<std::uint64_t>(std::uint64_t(old.frontier()) + 1, old.size()));
  std::vector<bool>  processed(target_count, false);
  element_index_type pending = target_count;

  while (pending > 0 && !t.complete()) {
    auto const len = t.meta(t.frontier()).length;
    auto const cls = detail::class_begin(t, t.frontier());
    while (pending > 0 && !t.complete()
           && t.meta(t.frontier()).length == len) {
      auto const k       = t.frontier();
      auto const old_pos = old.position(t.element(k));
      t.set_applied(0);

      if (old_pos.has_value() && *old_pos < old.frontier()) {
        // The frontier element is an old element with a fully recorded
        // right row: copy the whole row through the rebase map, sharing the
        // old element values, with zero multiplications. (By value: the
        // appends below relocate the meta storage.)
        auto const mk = t.meta(k);
        for (letter_type a = 0; a < m; ++a) {
          auto const old_target = old.right(*old_pos, a);
          CAYLEY_ASSERT(old_target != UNDEFINED);
          if (lambda[old_target] != UNDEFINED) {
            t.set_right(k, a, lambda[old_target]);
          } else {
            ElementMeta mm;
            mm.first  = mk.first;
            mm.last   = a;
            mm.prefix = k;
            mm.length = mk.length + 1;
            mm.suffix = mk.length == 1 ? a : t.right(mk.suffix, a);
            CAYLEY_ASSERT(mm.suffix != UNDEFINED);
            auto const fresh = t.append_element(old.element(old_target), mm);
            t.set_right(k, a, fresh);
            lambda[old_target] = fresh;
            if (options.check_rebase_map) {
              check_rebase_map(old, t, lambda);
            }
          }
          if (options.copied_pairs != nullptr) {
            options.copied_pairs->emplace_back(k, a);
          }
        }
        t.set_applied(m);
      }

      while (t.applied() < r) {
        auto const before = t.size();
        update(t);
        if (t.size() > before) {
          // A genuinely new reduced word was appended; if its value is an
          // old element, extend the rebase map.
          auto const fresh = static_cast<element_index_type>(before);
          if (auto op = old.position(t.element(fresh))) {
            CAYLEY_ASSERT(lambda[*op] == UNDEFINED);
            lambda[*op] = fresh;
            if (options.check_rebase_map) {
              check_rebase_map(old, t, lambda);
            }
          }
        }
      }

      if (old_pos.has_value() && *old_pos < target_count
          && !processed[*old_pos]) {
        processed[*old_pos] = true;
        --pending;
      }
      t.advance_frontier();
    }
    if (t.complete() || t.meta(t.frontier()).length > len) {
      detail::fill_left_class(t, cls, t.frontier());
      if (options.round_observer) {
        options.round_observer(t);
      }
    }
  }
  CAYLEY_ASSERT(pending == 0);
  return t;
}

}  // namespace cayley
