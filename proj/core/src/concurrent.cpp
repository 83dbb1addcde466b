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

#include "cayley/concurrent.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace cayley {

namespace {

FragMeta const& meta_at(std::vector<Fragment> const& frags, frag_ref r) {
  return frags[ref_frag(r)].meta[ref_index(r)];
}

Element const& element_at(std::vector<Fragment> const& frags, frag_ref r) {
  return frags[ref_frag(r)].elements[ref_index(r)];
}

frag_ref right_at(std::vector<Fragment> const& frags,
                  frag_ref                     r,
                  letter_type                  a,
                  PhaseAudit*                  audit,
                  std::uint32_t                worker) {
  if (audit != nullptr) {
    audit->record_read(worker,
                       PhaseAudit::cell_id(false, ref_frag(r), ref_index(r), a));
  }
  return frags[ref_frag(r)].right.at(ref_index(r), a);
}

frag_ref left_at(std::vector<Fragment> const& frags,
                 frag_ref                     r,
                 letter_type                  a,
                 PhaseAudit*                  audit,
                 std::uint32_t                worker) {
  if (audit != nullptr) {
    audit->record_read(worker,
                       PhaseAudit::cell_id(true, ref_frag(r), ref_index(r), a));
  }
  return frags[ref_frag(r)].left.at(ref_index(r), a);
}

void right_set(std::vector<Fragment>& frags,
               frag_ref               r,
               letter_type            a,
               frag_ref               value,
               PhaseAudit*            audit,
               std::uint32_t          worker) {
  if (audit != nullptr) {
    audit->record_write(
        worker, PhaseAudit::cell_id(false, ref_frag(r), ref_index(r), a));
  }
  frags[ref_frag(r)].right.set(ref_index(r), a, value);
}

word_type word_of_ref(std::vector<Fragment> const& frags, frag_ref r) {
  word_type out(meta_at(frags, r).length);
  frag_ref  cur = r;
  for (std::size_t pos = out.size(); pos-- > 0;) {
    auto const& m = meta_at(frags, cur);
    out[pos]      = m.last;
    cur           = m.prefix;
  }
  return out;
}

}  // namespace

void PhaseAudit::check_and_reset(char const* phase_name) {
  std::unordered_map<std::uint64_t, std::uint32_t> writer;
  for (std::uint32_t w = 0; w < _writes.size(); ++w) {
    for (auto cell : _writes[w]) {
      auto const [it, fresh] = writer.emplace(cell, w);
      if (!fresh) {
        throw InternalError(std::string("phase audit (") + phase_name
                            + "): cell defined twice");
      }
    }
  }
  for (std::uint32_t w = 0; w < _reads.size(); ++w) {
    for (auto cell : _reads[w]) {
      auto const it = writer.find(cell);
      if (it != writer.end() && it->second != w) {
        throw InternalError(std::string("phase audit (") + phase_name
                            + "): cell written by one worker and read by "
                              "another in the same phase");
      }
    }
  }
  for (auto& v : _reads) {
    v.clear();
  }
  for (auto& v : _writes) {
    v.clear();
  }
}

std::vector<Fragment> minimal_fragments(std::vector<Element> const& gens,
                                        BucketFn const&             b,
                                        std::vector<frag_ref>&      gen_refs) {
  std::vector<Fragment> frags(b.k);
  for (std::uint32_t j = 0; j < b.k; ++j) {
    frags[j].id    = j;
    frags[j].right = FragTable(gens.size());
    frags[j].left  = FragTable(gens.size());
  }
  gen_refs.assign(gens.size(), FRAG_UNDEFINED);
  for (letter_type a = 0; a < gens.size(); ++a) {
    auto const j = b(gens[a]);
    FragMeta   m{a, a, FRAG_UNDEFINED, FRAG_UNDEFINED, 1};
    gen_refs[a] = make_ref(j, frags[j].append(gens[a], m));
  }
  return frags;
}

void apply_generators(std::vector<Fragment>&       frags,
                      std::vector<Element> const&  gens,
                      std::vector<frag_ref> const& gen_refs,
                      BucketFn const&              b,
                      std::uint32_t                j,
                      std::uint32_t                c,
                      bool                         carry_element,
                      PhaseAudit*                  audit) {
  Fragment&  F = frags[j];
  auto const r = static_cast<letter_type>(gens.size());

  while (F.frontier < F.size() && F.meta[F.frontier].length == c) {
    auto const idx = F.frontier;
    auto const mk  = F.meta[idx];
    for (letter_type a = 0; a < r; ++a) {
      bool defined = false;
      if (mk.length >= 2) {
        auto const suffix_a = right_at(frags, mk.suffix, a, audit, j);
        CAYLEY_ASSERT(suffix_a != FRAG_UNDEFINED);
        auto const& mj = meta_at(frags, suffix_a);
        if (!(mj.prefix == mk.suffix && mj.last == a)) {
          // suffix(w) . a is not reduced, so w . a is not reduced either;
          // try to deduce right(w, a) without multiplying.
          frag_ref wref;
          if (mj.length == 1) {
            wref = gen_refs[mk.first];
          } else {
            wref = left_at(frags, mj.prefix, mk.first, audit, j);
            CAYLEY_ASSERT(wref != FRAG_UNDEFINED);
          }
          // A length-c row may only be read inside this fragment; other
          // fragments' length-c rows are being written concurrently.
          if (ref_frag(wref) == j || meta_at(frags, wref).length < c) {
            auto const target = right_at(frags, wref, mj.last, audit, j);
            if (target != FRAG_UNDEFINED) {
              right_set(frags, make_ref(j, idx), a, target, audit, j);
              defined = true;
            }
            // An undefined target was queued earlier this round by this
            // fragment; fall through to the multiply path.
          }
        }
      }
      if (defined) {
        continue;
      }

      Element product = multiply(F.elements[idx], gens[a]);
      ++F.products;
      auto const tb  = b(product);
      auto const dig = digest(product, kDedupSeed);
      // Equal values always live in their bucket's fragment, so the global
      // membership test is a single lookup. Element lists are frozen during
      // this phase.
      if (auto hit = frags[tb].dedup.find(product, dig, frags[tb].elements)) {
        right_set(frags, make_ref(j, idx), a, make_ref(tb, *hit), audit, j);
        F.rules.push_back({make_ref(j, idx), a, make_ref(tb, *hit)});
      } else {
        word_type word = word_of_ref(frags, make_ref(j, idx));
        word.push_back(a);
        QueueEntry entry{tb, make_ref(j, idx), a, std::move(word),
                         std::nullopt};
        if (carry_element) {
          entry.element = std::move(product);
        }
        F.queue.push_back(std::move(entry));
      }
    }
    ++F.frontier;
  }
}

void process_queues(std::vector<Fragment>&       frags,
                    std::vector<Element> const&  gens,
                    std::vector<frag_ref> const& gen_refs,
                    std::uint32_t                j,
                    std::uint32_t                c,
                    bool                         recompute,
                    PhaseAudit*                  audit) {
  Fragment&  F = frags[j];
  auto const k = static_cast<std::uint32_t>(frags.size());

  // Every per-fragment queue was produced in increasing short-lex order, so
  // a k-way merge visits the union in order. All queued words have length
  // c + 1, hence the comparison is lexicographic.
  std::vector<std::size_t> pos(k, 0);
  while (true) {
    std::uint32_t best = k;
    for (std::uint32_t q = 0; q < k; ++q) {
      if (pos[q] < frags[q].queue.size()
          && (best == k
              || std::lexicographical_compare(
                  frags[q].queue[pos[q]].word.begin(),
                  frags[q].queue[pos[q]].word.end(),
                  frags[best].queue[pos[best]].word.begin(),
                  frags[best].queue[pos[best]].word.end()))) {
        best = q;
      }
    }
    if (best == k) {
      break;
    }
    QueueEntry const& entry = frags[best].queue[pos[best]++];
    if (entry.target != j) {
      continue;
    }

    Element value = [&] {
      if (recompute) {
        ++F.products;
        return multiply(element_at(frags, entry.source), gens[entry.letter]);
      }
      return *entry.element;  // queues are shared read-only: copy
    }();
    auto const dig = digest(value, kDedupSeed);

    if (auto hit = F.dedup.find(value, dig, F.elements)) {
      // An equal value arrived under a short-lex smaller word earlier in
      // the merge; this entry only contributes a rewriting rule.
      right_set(frags, entry.source, entry.letter, make_ref(j, *hit), audit,
                j);
      F.rules.push_back({entry.source, entry.letter, make_ref(j, *hit)});
    } else {
      auto const& ms = meta_at(frags, entry.source);
      FragMeta    m;
      m.first  = ms.first;
      m.last   = entry.letter;
      m.prefix = entry.source;
      m.length = c + 1;
      m.suffix = c == 1 ? gen_refs[entry.letter]
                        : right_at(frags, ms.suffix, entry.letter, audit, j);
      CAYLEY_ASSERT(m.suffix != FRAG_UNDEFINED);
      // Capacity was reserved between the phases, so these appends do not
      // relocate storage other workers are reading.
      auto const fresh = F.append(std::move(value), m);
      right_set(frags, entry.source, entry.letter, make_ref(j, fresh), audit,
                j);
    }
  }
}

void complete_left(std::vector<Fragment>&       frags,
                   std::vector<Element> const&  gens,
                   std::vector<frag_ref> const& gen_refs,
                   std::uint32_t                j,
                   PhaseAudit*                  audit) {
  Fragment&  F = frags[j];
  auto const r = static_cast<letter_type>(gens.size());

  for (element_index_type i = F.class_begin; i < F.frontier; ++i) {
    auto const mi = F.meta[i];
    for (letter_type a = 0; a < r; ++a) {
      frag_ref target;
      if (mi.length == 1) {
        target = right_at(frags, gen_refs[a], mi.first, audit, j);
      } else {
        auto const mid = left_at(frags, mi.prefix, a, audit, j);
        CAYLEY_ASSERT(mid != FRAG_UNDEFINED);
        target = right_at(frags, mid, mi.last, audit, j);
      }
      CAYLEY_ASSERT(target != FRAG_UNDEFINED);
      if (audit != nullptr) {
        audit->record_write(j, PhaseAudit::cell_id(true, j, i, a));
      }
      F.left.set(i, a, target);
    }
  }
  F.class_begin = F.frontier;
}

// --- assembly ---------------------------------------------------------------

//! Builds a Snapshot from fragments; friend of Snapshot.
class Assembler {
 public:
  static Snapshot build(std::vector<Fragment>&&     frags,
                        std::vector<Element> const& gens) {
    auto const k = static_cast<std::uint32_t>(frags.size());
    auto const r = static_cast<letter_type>(gens.size());

    validate_collection(frags, gens);

    // Frontier class length: the longest word any fragment has swept.
    std::uint32_t c = 0;
    for (auto const& f : frags) {
      if (f.frontier > 0) {
        c = std::max(c, f.meta[f.frontier - 1].length);
      }
    }

    // Global order: k-way merge of the per-fragment short-lex orders.
    std::vector<std::vector<element_index_type>> global(k);
    std::size_t                                  total = 0;
    for (std::uint32_t q = 0; q < k; ++q) {
      global[q].assign(frags[q].size(), UNDEFINED);
      total += frags[q].size();
    }
    std::vector<frag_ref>    order;
    order.reserve(total);
    {
      std::vector<element_index_type> pos(k, 0);
      std::vector<word_type>          head(k);
      for (std::uint32_t q = 0; q < k; ++q) {
        if (!frags[q].elements.empty()) {
          head[q] = word_of_ref(frags, make_ref(q, 0));
        }
      }
      while (order.size() < total) {
        std::uint32_t best = k;
        for (std::uint32_t q = 0; q < k; ++q) {
          if (pos[q] < frags[q].size()
              && (best == k || shortlex_less(head[q], head[best]))) {
            best = q;
          }
        }
        CAYLEY_ASSERT(best < k);
        global[best][pos[best]]
            = static_cast<element_index_type>(order.size());
        order.push_back(make_ref(best, pos[best]));
        ++pos[best];
        if (pos[best] < frags[best].size()) {
          head[best] = word_of_ref(frags, make_ref(best, pos[best]));
        }
      }
    }

    auto translate = [&](frag_ref ref) -> element_index_type {
      return ref == FRAG_UNDEFINED ? UNDEFINED
                                   : global[ref_frag(ref)][ref_index(ref)];
    };

    Snapshot s;
    s._gens  = gens;
    s._right = CayleyTable(r);
    s._left  = CayleyTable(r);
    s._elements.reserve(total);
    s._meta.reserve(total);
    for (auto ref : order) {
      auto& f = frags[ref_frag(ref)];
      auto const& m = f.meta[ref_index(ref)];
      ElementMeta out;
      out.first  = m.first;
      out.last   = m.last;
      out.prefix = translate(m.prefix);
      out.suffix = translate(m.suffix);
      out.length = m.length;
      s.append_element(std::move(f.elements[ref_index(ref)]), out);
    }
    for (element_index_type i = 0; i < total; ++i) {
      auto const ref = order[i];
      auto const& f  = frags[ref_frag(ref)];
      for (letter_type a = 0; a < r; ++a) {
        s.set_right(i, a, translate(f.right.at(ref_index(ref), a)));
        s.set_left(i, a, translate(f.left.at(ref_index(ref), a)));
      }
    }
    for (auto const& f : frags) {
      for (auto const& rule : f.rules) {
        s.add_rule(translate(rule.lhs), rule.letter, translate(rule.rhs));
      }
      s.add_products(f.products);
    }

    element_index_type frontier = 0;
    while (frontier < total && s._meta[frontier].length <= c) {
      ++frontier;
    }
    s._frontier = frontier;
    s._applied  = 0;
    return s;
  }

 private:
  [[noreturn]] static void fail(char const* clause, std::string const& what) {
    throw UsageError(std::string("fragments cannot be assembled: condition ")
                     + clause + " violated (" + what + ")");
  }

  static void validate_collection(std::vector<Fragment> const& frags,
                                  std::vector<Element> const&  gens) {
    auto const k = static_cast<std::uint32_t>(frags.size());
    auto const r = static_cast<letter_type>(gens.size());
    if (k == 0 || r == 0) {
      fail("(i)", "no fragments or no generators");
    }

    // (i) value-disjointness across fragments.
    {
      detail::DedupMap     seen;
      std::vector<Element> pool;
      for (auto const& f : frags) {
        for (auto const& x : f.elements) {
          auto const dig = digest(x, kDedupSeed);
          if (seen.find(x, dig, pool).has_value()) {
            fail("(i)", "two fragments store the same element value");
          }
          seen.insert(static_cast<element_index_type>(pool.size()), dig);
          pool.push_back(x);
        }
      }
    }

    std::uint32_t c = 0;
    for (auto const& f : frags) {
      if (f.frontier > f.size()) {
        fail("(iii)", "fragment frontier out of range");
      }
      if (f.frontier > 0) {
        c = std::max(c, f.meta[f.frontier - 1].length);
      }
    }

    for (auto const& f : frags) {
      // (ii) local words strictly increasing; links resolve (v).
      for (element_index_type i = 0; i < f.size(); ++i) {
        auto const& m = f.meta[i];
        if (m.length == 1) {
          if (m.first != m.last || m.first >= r) {
            fail("(v)", "generator metadata out of range");
          }
        } else {
          if (m.prefix == FRAG_UNDEFINED || m.suffix == FRAG_UNDEFINED
              || !resolves(frags, m.prefix) || !resolves(frags, m.suffix)) {
            fail("(v)", "meta link does not resolve");
          }
        }
        if (i > 0
            && !shortlex_less(word_of_ref_checked(frags, f.id, i - 1),
                              word_of_ref_checked(frags, f.id, i))) {
          fail("(ii)", "fragment words not strictly increasing");
        }
      }
      // (iii) if anything was swept, the last swept word closes its class.
      if (f.frontier > 0) {
        auto const len = f.meta[f.frontier - 1].length;
        if (len != max_length_at_most(f, c)) {
          fail("(iii)", "fragment frontier not aligned to the class");
        }
        if (f.frontier < f.size() && f.meta[f.frontier].length <= len) {
          fail("(iii)", "unswept word not longer than the swept class");
        }
      }
      // (iv) swept rows are complete on both sides, nothing beyond.
      for (element_index_type i = 0; i < f.size(); ++i) {
        for (letter_type a = 0; a < r; ++a) {
          bool const swept = i < f.frontier;
          if ((f.right.at(i, a) == FRAG_UNDEFINED) == swept) {
            fail("(iv)", "right table domain mismatch");
          }
          if ((f.left.at(i, a) == FRAG_UNDEFINED) == swept) {
            fail("(iv)", "left table domain mismatch");
          }
          // (v) images resolve inside the collection.
          for (auto ref : {f.right.at(i, a), f.left.at(i, a)}) {
            if (ref != FRAG_UNDEFINED && !resolves(frags, ref)) {
              fail("(v)", "table target does not resolve");
            }
          }
        }
      }
    }
  }

  static bool resolves(std::vector<Fragment> const& frags, frag_ref ref) {
    return ref_frag(ref) < frags.size()
           && ref_index(ref) < frags[ref_frag(ref)].size();
  }

  static std::uint32_t max_length_at_most(Fragment const& f,
                                          std::uint32_t   c) {
    std::uint32_t best = 0;
    for (auto const& m : f.meta) {
      if (m.length <= c) {
        best = std::max(best, m.length);
      }
    }
    return best;
  }

  static word_type word_of_ref_checked(std::vector<Fragment> const& frags,
                                       std::uint32_t                frag,
                                       element_index_type           i) {
    // Bounded walk so a corrupt prefix chain cannot loop forever.
    word_type   out;
    frag_ref    cur   = make_ref(frag, i);
    std::size_t limit = meta_at(frags, cur).length;
    while (true) {
      if (!resolves(frags, cur) || out.size() > limit) {
        fail("(v)", "prefix chain does not resolve");
      }
      auto const& m = meta_at(frags, cur);
      out.push_back(m.last);
      if (m.length == 1) {
        break;
      }
      cur = m.prefix;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

Snapshot assemble(std::vector<Fragment>       fragments,
                  std::vector<Element> const& gens) {
  return Assembler::build(std::move(fragments), gens);
}

// --- driver -----------------------------------------------------------------

Snapshot concurrent_froidure_pin(std::vector<Element> const& gens,
                                 std::uint32_t               k,
                                 std::uint64_t               limit,
                                 ConcurrentOptions const&    options) {
  if (k == 0) {
    throw UsageError("fragment count must be positive");
  }
  if (limit == 0) {
    throw UsageError("enumeration limit must be positive");
  }
  // Validates non-empty, distinct, compatible generators.
  Snapshot::minimal(gens);

  BucketFn              b{k, options.seed};
  std::vector<frag_ref> gen_refs;
  std::vector<Fragment> frags = minimal_fragments(gens, b, gen_refs);

  PhaseAudit  audit(k);
  PhaseAudit* audit_ptr = options.audit_phases ? &audit : nullptr;
  bool const  carry     = !options.recompute_in_process;

  std::uint32_t            c    = 1;
  std::atomic<bool>        stop = false;
  std::atomic<bool>        failed = false;
  std::exception_ptr       first_error;
  std::mutex               error_mutex;
  std::vector<std::size_t> size_before(k, 0);

  auto record_error = [&](std::exception_ptr e) {
    std::scoped_lock lock(error_mutex);
    if (!first_error) {
      first_error = e;
    }
    failed.store(true);
  };

  int  phase      = 0;
  auto completion = [&]() noexcept {
    if (phase == 0) {
      // After apply: reserve storage for the words the process phase may
      // append, so nothing relocates while workers read and write cells.
      if (audit_ptr != nullptr && !failed.load()) {
        try {
          audit_ptr->check_and_reset("apply");
        } catch (...) {
          record_error(std::current_exception());
        }
      }
      std::vector<std::size_t> incoming(k, 0);
      for (auto const& f : frags) {
        for (auto const& entry : f.queue) {
          ++incoming[entry.target];
        }
      }
      for (std::uint32_t q = 0; q < k; ++q) {
        size_before[q] = frags[q].size();
        frags[q].elements.reserve(frags[q].size() + incoming[q]);
        frags[q].meta.reserve(frags[q].size() + incoming[q]);
        frags[q].right.reserve_rows(incoming[q]);
        frags[q].left.reserve_rows(incoming[q]);
        frags[q].dedup.reserve(frags[q].size() + incoming[q]);
      }
    } else if (phase == 1) {
      // After process: evaluate the round-boundary guards, then drop the
      // queues.
      if (audit_ptr != nullptr && !failed.load()) {
        try {
          audit_ptr->check_and_reset("process");
        } catch (...) {
          record_error(std::current_exception());
        }
      }
      if (options.round_observer && !failed.load()) {
        try {
          RoundInfo info;
          info.round_length = c;
          std::uint64_t fresh = 0;
          for (std::uint32_t q = 0; q < k; ++q) {
            fresh += frags[q].size() - size_before[q];
            for (auto const& entry : frags[q].queue) {
              info.queued_words.push_back(entry.word);
            }
          }
          std::sort(info.queued_words.begin(), info.queued_words.end(),
                    shortlex_less);
          info.new_elements = fresh;
          options.round_observer(info);
        } catch (...) {
          record_error(std::current_exception());
        }
      }
      std::size_t global_size = 0;
      bool        frontier    = false;
      for (auto& f : frags) {
        f.queue.clear();
        global_size += f.size();
        frontier = frontier || f.frontier < f.size();
      }
      stop.store(!frontier || global_size >= limit || failed.load());
    } else {
      // After left completion: the round is over.
      if (audit_ptr != nullptr && !failed.load()) {
        try {
          audit_ptr->check_and_reset("left");
        } catch (...) {
          record_error(std::current_exception());
        }
      }
      c += 1;
    }
    phase = (phase + 1) % 3;
  };

  std::barrier sync(static_cast<std::ptrdiff_t>(k), completion);

  auto worker = [&](std::uint32_t j) {
    while (true) {
      std::uint32_t const round_c = c;
      if (!failed.load()) {
        try {
          apply_generators(frags, gens, gen_refs, b, j, round_c, carry,
                           audit_ptr);
        } catch (...) {
          record_error(std::current_exception());
        }
      }
      sync.arrive_and_wait();
      if (!failed.load()) {
        try {
          process_queues(frags, gens, gen_refs, j, round_c,
                         options.recompute_in_process, audit_ptr);
        } catch (...) {
          record_error(std::current_exception());
        }
      }
      sync.arrive_and_wait();
      if (!failed.load()) {
        try {
          complete_left(frags, gens, gen_refs, j, audit_ptr);
        } catch (...) {
          record_error(std::current_exception());
        }
      }
      sync.arrive_and_wait();
      if (stop.load()) {
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(k);
  for (std::uint32_t j = 0; j < k; ++j) {
    threads.emplace_back(worker, j);
  }
  for (auto& t : threads) {
    t.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }

  return assemble(std::move(frags), gens);
}

}  // namespace cayley
