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

// The resumable enumeration state shared by every engine: the known
// elements in short-lex order of their reduced words, per-element word
// metadata (first/last letter and prefix/suffix links), the partial right
// and left Cayley tables, the frontier, the rewriting rules discovered so
// far, and the exact multiplication count.

#ifndef CAYLEY_SNAPSHOT_HPP_
#define CAYLEY_SNAPSHOT_HPP_

#include <cstdint>   // for uint32_t, uint64_t
#include <iosfwd>    // for istream, ostream
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "detail/dedup_map.hpp"
#include "element.hpp"
#include "types.hpp"
#include "word.hpp"

namespace cayley {

//! Word metadata of a stored element: first and last letter of its reduced
//! word, indices of the elements whose reduced words are its prefix and
//! suffix (UNDEFINED for generators), and the word length.
struct ElementMeta {
  letter_type        first;
  letter_type        last;
  element_index_type prefix;
  element_index_type suffix;
  std::uint32_t      length;

  bool operator==(ElementMeta const&) const = default;
};

//! A rewriting rule: the word of element `lhs` followed by `letter` rewrites
//! to the (short-lex smaller) word of element `rhs`.
struct Rule {
  element_index_type lhs;
  letter_type        letter;
  element_index_type rhs;

  bool operator==(Rule const&) const = default;
};

enum class CayleySide { right, left };

//! Flat row-major partial Cayley table; one row per element, one column per
//! generator, UNDEFINED for entries not yet known.
class CayleyTable {
 public:
  CayleyTable() : _out_degree(0) {}
  explicit CayleyTable(std::size_t out_degree) : _out_degree(out_degree) {}

  element_index_type at(element_index_type i, letter_type a) const {
    return _cells[static_cast<std::size_t>(i) * _out_degree + a];
  }

  void set(element_index_type i, letter_type a, element_index_type v) {
    _cells[static_cast<std::size_t>(i) * _out_degree + a] = v;
  }

  void add_row() {
    _cells.resize(_cells.size() + _out_degree, UNDEFINED);
  }

  std::size_t rows() const noexcept {
    return _out_degree == 0 ? 0 : _cells.size() / _out_degree;
  }

  std::size_t out_degree() const noexcept {
    return _out_degree;
  }

  bool operator==(CayleyTable const&) const = default;

 private:
  std::size_t                     _out_degree;
  std::vector<element_index_type> _cells;
};

class Snapshot {
 public:
  //! Builds the minimal snapshot for the given generators: the only known
  //! elements are the generators themselves, nothing has been multiplied.
  //! Throws UsageError on an empty or duplicated generating set, or on
  //! generators of mixed kind/size.
  static Snapshot minimal(std::vector<Element> generators);

  // --- read interface ----------------------------------------------------

  std::size_t number_of_generators() const noexcept {
    return _gens.size();
  }

  std::size_t size() const noexcept {
    return _elements.size();
  }

  Element const& generator(letter_type a) const {
    return _gens[a];
  }

  std::vector<Element> const& generators() const noexcept {
    return _gens;
  }

  Element const& element(element_index_type i) const {
    return _elements[i];
  }

  std::vector<Element> const& elements() const noexcept {
    return _elements;
  }

  ElementMeta const& meta(element_index_type i) const {
    return _meta[i];
  }

  //! Index of the next element whose right multiples will be computed
  //! (0-based); equals size() exactly when the snapshot is complete.
  element_index_type frontier() const noexcept {
    return _frontier;
  }

  //! Number of generators already applied to the frontier element.
  letter_type applied() const noexcept {
    return _applied;
  }

  bool complete() const noexcept {
    return _frontier == _elements.size();
  }

  std::uint64_t products() const noexcept {
    return _products;
  }

  std::vector<Rule> const& rules() const noexcept {
    return _rules;
  }

  //! Stored table entry for element i and letter a; never multiplies and
  //! never enumerates. Throws UsageError on out-of-range arguments.
  element_index_type cayley_lookup(CayleySide side,
                                   element_index_type i,
                                   letter_type        a) const;

  //! Unchecked table accessors used on the engines' hot paths.
  element_index_type right(element_index_type i, letter_type a) const {
    return _right.at(i, a);
  }

  element_index_type left(element_index_type i, letter_type a) const {
    return _left.at(i, a);
  }

  //! Index of x among the known elements, or nullopt. Does not enumerate.
  //! Throws UsageError if x has a different kind/size than the generators.
  std::optional<element_index_type> position(Element const& x) const;

  //! Reduced word of element i, rebuilt by walking prefix links.
  word_type word_of(element_index_type i) const;

  //! Length of the reduced word of element i.
  std::uint32_t word_length(element_index_type i) const {
    return _meta[i].length;
  }

  //! The rules as word pairs (lhs > rhs in short-lex), in discovery order.
  std::vector<std::pair<word_type, word_type>> rules_of() const;

  // --- engine interface --------------------------------------------------
  // The snapshot is single-writer: exactly one engine may mutate it at a
  // time, while read-only queries are safe from concurrent readers.

  //! Multiplies through the snapshot's product counter.
  Element counted_multiply(Element const& x, Element const& y) {
    ++_products;
    return multiply(x, y);
  }

  //! Appends a new element with its word metadata; adds undefined rows to
  //! both tables and registers the element in the dedup map.
  element_index_type append_element(Element x, ElementMeta m);

  void set_right(element_index_type i, letter_type a, element_index_type v) {
    _right.set(i, a, v);
  }

  void set_left(element_index_type i, letter_type a, element_index_type v) {
    _left.set(i, a, v);
  }

  void set_applied(letter_type b) noexcept {
    _applied = b;
  }

  void advance_frontier() noexcept {
    ++_frontier;
    _applied = 0;
  }

  //! Test-only escape hatch for constructing invalid states.
  void force_frontier(element_index_type k) noexcept {
    _frontier = k;
  }

  void add_rule(element_index_type u, letter_type a, element_index_type v) {
    _rules.push_back({u, a, v});
  }

  void add_products(std::uint64_t n) noexcept {
    _products += n;
  }

  bool operator==(Snapshot const& that) const;

 private:
  friend Snapshot load_snapshot(std::istream&);
  friend void     save_snapshot(Snapshot const&, std::ostream&);
  friend class Assembler;

  Snapshot() = default;

  std::vector<Element>     _gens;
  std::vector<Element>     _elements;
  std::vector<ElementMeta> _meta;
  CayleyTable              _right;
  CayleyTable              _left;
  element_index_type       _frontier = 0;
  letter_type              _applied  = 0;
  detail::DedupMap         _dedup;
  std::vector<Rule>        _rules;
  std::uint64_t            _products = 0;
};

// --- validation -----------------------------------------------------------

struct Violation {
  std::string rule;     // which structural clause failed
  std::string context;  // index/letter context
  std::string message;
};

struct ValidationReport {
  bool                   ok;
  std::vector<Violation> violations;
};

//! Structural validation of a snapshot. Shallow mode checks ordering, index
//! ranges, frontier/applied coherence and table domain shapes; deep mode
//! additionally re-multiplies every defined table entry, every prefix/suffix
//! link and both sides of every rule. Violations are reported as data, never
//! thrown.
ValidationReport validate(Snapshot const& s, bool deep = false);

// --- persistence ------------------------------------------------------------

//! Versioned little-endian binary format with length-prefixed sections and a
//! trailing checksum; element payloads are rebuilt from the generators and
//! the word metadata on load.
void save_snapshot(Snapshot const& s, std::ostream& out);
void save_snapshot_file(Snapshot const& s, std::string const& path);

//! Throws InputError on version mismatch, truncation or checksum failure.
Snapshot load_snapshot(std::istream& in);
Snapshot load_snapshot_file(std::string const& path);

}  // namespace cayley
#endif  // CAYLEY_SNAPSHOT_HPP_
