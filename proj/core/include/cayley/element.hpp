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

// The universe of elements the engines enumerate over: transformations of a
// finite set and square Boolean matrices. Both are immutable after
// construction and safe to read from any number of threads.

#ifndef CAYLEY_ELEMENT_HPP_
#define CAYLEY_ELEMENT_HPP_

#include <cstdint>  // for uint32_t, uint64_t
#include <string>   // for string
#include <variant>  // for variant
#include <vector>   // for vector

#include "types.hpp"

namespace cayley {

//! A transformation of {0, ..., degree - 1}, stored as its image list.
class Transformation {
 public:
  explicit Transformation(std::vector<std::uint32_t> images);

  std::uint32_t degree() const noexcept {
    return static_cast<std::uint32_t>(_images.size());
  }

  std::uint32_t operator[](std::uint32_t pt) const {
    return _images[pt];
  }

  std::vector<std::uint32_t> const& images() const noexcept {
    return _images;
  }

  //! Composition as a right action: (x * y)(pt) = y(x(pt)).
  Transformation operator*(Transformation const& that) const;

  bool operator==(Transformation const& that) const noexcept {
    return _images == that._images;
  }

  static Transformation identity(std::uint32_t degree);

 private:
  std::vector<std::uint32_t> _images;
};

//! A dim x dim matrix over the Boolean semiring, rows packed into 64-bit
//! words so that products reduce to word-wide ORs.
class BooleanMatrix {
 public:
  //! Construct from unpacked rows of 0/1 entries.
  explicit BooleanMatrix(std::vector<std::vector<std::uint32_t>> const& rows);
  BooleanMatrix(std::uint32_t dim, std::vector<std::uint64_t> bits);

  std::uint32_t dim() const noexcept {
    return _dim;
  }

  bool at(std::uint32_t r, std::uint32_t c) const;

  //! (x * y)[i][j] = OR_k (x[i][k] AND y[k][j]).
  BooleanMatrix operator*(BooleanMatrix const& that) const;

  bool operator==(BooleanMatrix const& that) const noexcept {
    return _dim == that._dim && _bits == that._bits;
  }

  std::vector<std::uint64_t> const& bits() const noexcept {
    return _bits;
  }

  std::uint32_t words_per_row() const noexcept {
    return (_dim + 63) / 64;
  }

  static BooleanMatrix identity(std::uint32_t dim);

 private:
  std::uint32_t              _dim;
  std::vector<std::uint64_t> _bits;  // row-major, words_per_row() per row
};

enum class ElementKind : std::uint8_t { transformation = 0, boolean_matrix = 1 };

//! A value of the universe: exactly one of Transformation or BooleanMatrix.
//! Mixed-kind or mixed-size products are usage errors.
//!
//! Extension point (not shipped): a new element kind needs an alternative in
//! the variant, an ElementKind tag, and cases in multiply, digest,
//! parse_generators and the snapshot element payload codec. The engines are
//! kind-agnostic beyond that.
class Element {
 public:
  Element(Transformation t) : _value(std::move(t)) {}  // NOLINT implicit ok
  Element(BooleanMatrix m) : _value(std::move(m)) {}   // NOLINT implicit ok

  ElementKind kind() const noexcept {
    return _value.index() == 0 ? ElementKind::transformation
                               : ElementKind::boolean_matrix;
  }

  //! Degree of a transformation or dimension of a matrix.
  std::uint32_t size() const noexcept;

  Transformation const& transformation() const {
    return std::get<Transformation>(_value);
  }

  BooleanMatrix const& boolean_matrix() const {
    return std::get<BooleanMatrix>(_value);
  }

  bool operator==(Element const& that) const noexcept {
    return _value == that._value;
  }

  std::string to_string() const;

 private:
  std::variant<Transformation, BooleanMatrix> _value;
};

//! Returns x * y; throws UsageError if the operands have different kinds or
//! sizes. Engines count calls made through their snapshot, this free
//! function does not count anything.
Element multiply(Element const& x, Element const& y);

//! Seeded stable digest: equal elements always collide, and the value only
//! depends on (seed, kind, size, payload) so it is reproducible across runs
//! and platforms.
std::uint64_t digest(Element const& x, std::uint64_t seed);

//! Seed used for the engines' internal dedup maps.
inline constexpr std::uint64_t kDedupSeed = 0x51f0'3a1c'9e67'b2d5ULL;

//! Checks kind and size agreement, throwing UsageError otherwise.
void require_compatible(Element const& x, Element const& y);

//! Parses the on-disk generator format:
//!   {"type": "transformation"|"bmat", "degree"/"dim": n, "gens": [...]}
//! File order defines the letter order of the alphabet. Duplicate
//! generators, inconsistent sizes and malformed documents are rejected with
//! InputError.
std::vector<Element> parse_generators(std::string const& document);

//! Reads and parses a generator file from disk.
std::vector<Element> load_generators(std::string const& path);

}  // namespace cayley
#endif  // CAYLEY_ELEMENT_HPP_
