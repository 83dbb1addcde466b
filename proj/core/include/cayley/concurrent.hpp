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

// The lock-free concurrent engine. The element universe is hash-partitioned
// into k fragments, and every round runs three barrier-separated phases:
// each worker extends the right rows of its own frontier length class
// (queueing products it cannot deduce or find), then the merged queues are
// drained in short-lex order with each worker appending only to its own
// fragment, then the left rows of the finished class are completed by pure
// deduction. Within a phase every table cell has at most one writer and is
// never read by another worker, so no locks or atomics are needed; storage
// for a round is allocated between phases so nothing relocates while a
// phase runs.

#ifndef CAYLEY_CONCURRENT_HPP_
#define CAYLEY_CONCURRENT_HPP_

#include <cstdint>     // for uint32_t, uint64_t
#include <functional>  // for function
#include <optional>    // for optional
#include <vector>      // for vector

#include "detail/dedup_map.hpp"
#include "element.hpp"
#include "froidure_pin.hpp"  // for LIMIT_MAX
#include "snapshot.hpp"
#include "types.hpp"
#include "word.hpp"

namespace cayley {

//! A cross-fragment element reference packed as (fragment id << 32 | local
//! index); table cells, prefix/suffix links and queue sources all use this
//! representation until assembly rewrites them to global indices.
using frag_ref = std::uint64_t;

inline constexpr frag_ref FRAG_UNDEFINED
    = std::numeric_limits<frag_ref>::max();

inline frag_ref make_ref(std::uint32_t frag, element_index_type index) {
  return (static_cast<frag_ref>(frag) << 32) | index;
}

inline std::uint32_t ref_frag(frag_ref r) {
  return static_cast<std::uint32_t>(r >> 32);
}

inline element_index_type ref_index(frag_ref r) {
  return static_cast<element_index_type>(r);
}

//! Value-based fragment assignment: equal elements always land in the same
//! bucket, so duplicate words for one element meet in one fragment and local
//! deduplication is sound. Deterministic for a fixed seed.
struct BucketFn {
  std::uint32_t k;
  std::uint64_t seed;

  std::uint32_t operator()(Element const& x) const {
    return k == 1 ? 0 : static_cast<std::uint32_t>(digest(x, seed) % k);
  }
};

inline std::uint32_t bucket(BucketFn const& b, Element const& x) {
  return b(x);
}

inline constexpr std::uint64_t kDefaultBucketSeed = 0x8452'bd91'1d0c'6a37ULL;

//! Flat row-major table of cross-fragment references.
class FragTable {
 public:
  FragTable() : _out_degree(0) {}
  explicit FragTable(std::size_t out_degree) : _out_degree(out_degree) {}

  frag_ref at(element_index_type i, letter_type a) const {
    return _cells[static_cast<std::size_t>(i) * _out_degree + a];
  }

  void set(element_index_type i, letter_type a, frag_ref v) {
    _cells[static_cast<std::size_t>(i) * _out_degree + a] = v;
  }

  void add_row() {
    _cells.resize(_cells.size() + _out_degree, FRAG_UNDEFINED);
  }

  //! Guarantees the next `extra_rows` add_row calls will not relocate.
  void reserve_rows(std::size_t extra_rows) {
    _cells.reserve(_cells.size() + extra_rows * _out_degree);
  }

  std::size_t rows() const noexcept {
    return _out_degree == 0 ? 0 : _cells.size() / _out_degree;
  }

 private:
  std::size_t           _out_degree;
  std::vector<frag_ref> _cells;
};

//! Word metadata with cross-fragment prefix/suffix links.
struct FragMeta {
  letter_type   first;
  letter_type   last;
  frag_ref      prefix;
  frag_ref      suffix;
  std::uint32_t length;
};

struct FragRule {
  frag_ref    lhs;
  letter_type letter;
  frag_ref    rhs;
};

//! One product queued during the apply phase: the product of `source` by
//! `letter` hashes to fragment `target`; the word is materialised for the
//! short-lex merge, and the computed element is carried along unless the
//! recompute toggle asks the process phase to re-evaluate it.
struct QueueEntry {
  std::uint32_t          target;
  frag_ref               source;
  letter_type            letter;
  word_type              word;
  std::optional<Element> element;
};

//! One shard of the enumeration state. Local words are strictly increasing
//! in short-lex; the frontier plays the role the snapshot's frontier plays,
//! per fragment.
struct Fragment {
  std::uint32_t           id = 0;
  std::vector<Element>    elements;
  std::vector<FragMeta>   meta;
  FragTable               right;
  FragTable               left;
  element_index_type      frontier    = 0;
  element_index_type      class_begin = 0;
  detail::DedupMap        dedup;
  std::vector<FragRule>   rules;
  std::uint64_t           products = 0;
  std::vector<QueueEntry> queue;

  std::size_t size() const noexcept {
    return elements.size();
  }

  element_index_type append(Element x, FragMeta m) {
    auto const index = static_cast<element_index_type>(elements.size());
    dedup.insert(index, digest(x, kDedupSeed));
    elements.push_back(std::move(x));
    meta.push_back(m);
    right.add_row();
    left.add_row();
    return index;
  }
};

//! Debug-mode recorder of per-phase table-cell accesses. After each phase
//! it checks that no cell written by one worker was touched by any other
//! worker in the same phase, and that no cell was defined twice.
class PhaseAudit {
 public:
  explicit PhaseAudit(std::uint32_t workers)
      : _reads(workers), _writes(workers) {}

  void record_read(std::uint32_t worker, std::uint64_t cell) {
    _reads[worker].push_back(cell);
  }

  void record_write(std::uint32_t worker, std::uint64_t cell) {
    _writes[worker].push_back(cell);
  }

  static std::uint64_t cell_id(bool               left_table,
                               std::uint32_t      frag,
                               element_index_type row,
                               letter_type        col) {
    return (static_cast<std::uint64_t>(left_table) << 63)
           | (static_cast<std::uint64_t>(frag & 0x7fff) << 48)
           | (static_cast<std::uint64_t>(row) << 16)
           | static_cast<std::uint64_t>(col & 0xffff);
  }

  //! Throws InternalError on a cross-worker conflict; clears the log.
  void check_and_reset(char const* phase_name);

 private:
  std::vector<std::vector<std::uint64_t>> _reads;
  std::vector<std::vector<std::uint64_t>> _writes;
};

//! Per-round statistics handed to the test observer after each process
//! phase: the round length c, the merged queue words in short-lex order,
//! and how many of them became new elements.
struct RoundInfo {
  std::uint32_t          round_length;
  std::vector<word_type> queued_words;
  std::uint64_t          new_elements;
};

struct ConcurrentOptions {
  std::uint64_t seed = kDefaultBucketSeed;

  //! When true the process phase re-evaluates every queued product even
  //! though the apply phase already computed it (the literal reading of the
  //! synchronisation step); off by default, which carries the element in
  //! the queue entry and reproduces the sequential-style product counts.
  bool recompute_in_process = false;

  //! Enables the per-phase access audit (slow; tests only).
  bool audit_phases = false;

  std::function<void(RoundInfo const&)> round_observer;
};

//! Scatters the generators into k fragments by bucket. Also fills
//! `gen_refs` with the location of each letter.
std::vector<Fragment> minimal_fragments(std::vector<Element> const& gens,
                                        BucketFn const&             b,
                                        std::vector<frag_ref>&      gen_refs);

//! Apply phase for fragment j at round length c: extends the right rows of
//! fragment j's length-c words, deducing where the chain stays inside
//! fragment j or strictly below length c, otherwise multiplying and either
//! recording a rule (value already visible) or queueing the product.
void apply_generators(std::vector<Fragment>&       frags,
                      std::vector<Element> const&  gens,
                      std::vector<frag_ref> const& gen_refs,
                      BucketFn const&              b,
                      std::uint32_t                j,
                      std::uint32_t                c,
                      bool                         carry_element,
                      PhaseAudit*                  audit = nullptr);

//! Process phase for fragment j: walks the union of all queues in short-lex
//! order of the queued words, handling the entries whose target is j:
//! append a new element of length c + 1, or record a rule when an equal
//! value arrived under a smaller word.
void process_queues(std::vector<Fragment>&       frags,
                    std::vector<Element> const&  gens,
                    std::vector<frag_ref> const& gen_refs,
                    std::uint32_t                j,
                    std::uint32_t                c,
                    bool                         recompute,
                    PhaseAudit*                  audit = nullptr);

//! Left phase for fragment j: completes the left rows of the just-finished
//! length class by pure deduction.
void complete_left(std::vector<Fragment>&       frags,
                   std::vector<Element> const&  gens,
                   std::vector<frag_ref> const& gen_refs,
                   std::uint32_t                j,
                   PhaseAudit*                  audit = nullptr);

//! Merges a collection of fragments into a snapshot with globally
//! short-lex-sorted indices, rewriting every cross-fragment reference.
//! Throws UsageError naming the violated assembly precondition when the
//! collection is not assemblable.
Snapshot assemble(std::vector<Fragment>       fragments,
                  std::vector<Element> const& gens);

//! Runs rounds of the three phases on k worker threads (one per fragment)
//! until every fragment is exhausted or the global size reaches `limit`
//! (checked at round boundaries), then assembles the fragments. For a fixed
//! (generators, k, seed) the result is identical across runs regardless of
//! scheduling.
Snapshot concurrent_froidure_pin(std::vector<Element> const& gens,
                                 std::uint32_t               k,
                                 std::uint64_t               limit = LIMIT_MAX,
                                 ConcurrentOptions const&    options = {});

}  // namespace cayley
#endif  // CAYLEY_CONCURRENT_HPP_
