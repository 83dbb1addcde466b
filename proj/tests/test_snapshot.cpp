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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "cayley/bench.hpp"
#include "cayley/froidure_pin.hpp"
#include "cayley/snapshot.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

Snapshot complete_t3() {
  auto s = Snapshot::minimal(oracles::tn_generators(3));
  froidure_pin(s);
  return s;
}

}  // namespace

TEST_CASE("minimal snapshot of the T_3 generators") {
  auto const s = Snapshot::minimal(oracles::tn_generators(3));
  CHECK(s.size() == 3);
  CHECK(s.frontier() == 0);
  CHECK(s.applied() == 0);
  CHECK(s.products() == 0);
  for (element_index_type i = 0; i < 3; ++i) {
    for (letter_type a = 0; a < 3; ++a) {
      CHECK(s.right(i, a) == UNDEFINED);
      CHECK(s.left(i, a) == UNDEFINED);
    }
  }
}

TEST_CASE("minimal snapshot rejects degenerate generating sets") {
  CHECK_THROWS_AS(Snapshot::minimal({}), UsageError);
  Element x{Transformation({0, 1})};
  CHECK_THROWS_AS(Snapshot::minimal({x, x}), UsageError);
}

TEST_CASE("a single idempotent generator gives a one-element snapshot") {
  auto const s = Snapshot::minimal({Element{Transformation({0, 0})}});
  CHECK(s.size() == 1);
  CHECK(s.frontier() == 0);
  CHECK(validate(s).ok);
}

TEST_CASE("minimal snapshots of random generator sets validate") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    auto gens = random_generators(ElementKind::transformation, 4,
                                  1 + (i % 4), rng);
    auto const report = validate(Snapshot::minimal(gens), true);
    CHECK(report.ok);
  }
}

TEST_CASE("position finds generators and nothing else before enumeration") {
  auto const s = Snapshot::minimal(oracles::tn_generators(3));
  CHECK(s.position(oracles::tn_generators(3)[0]) == 0);
  CHECK_FALSE(s.position(Element{Transformation::identity(3)}).has_value());
  CHECK_THROWS_AS(s.position(Element{BooleanMatrix::identity(3)}),
                  UsageError);
}

TEST_CASE("after full enumeration every closure element has a position") {
  auto const s      = complete_t3();
  auto const oracle = oracles::brute_force_closure(oracles::tn_generators(3));
  REQUIRE(s.size() == oracle.size());
  std::set<element_index_type> positions;
  // walk the oracle's values through the dedup map
  for (element_index_type i = 0; i < s.size(); ++i) {
    auto const found = s.position(s.element(i));
    REQUIRE(found.has_value());
    positions.insert(*found);
    CHECK(oracle.count(s.element(i).to_string()) == 1);
  }
  CHECK(positions.size() == s.size());
}

TEST_CASE("word_of rebuilds reduced words in increasing short-lex order") {
  auto const s = complete_t3();
  for (letter_type a = 0; a < 3; ++a) {
    CHECK(s.word_of(a) == word_type{a});
  }
  for (element_index_type i = 1; i < s.size(); ++i) {
    CHECK(shortlex_less(s.word_of(i - 1), s.word_of(i)));
  }
  // evaluating the word through multiply reproduces the element
  for (element_index_type i = 0; i < s.size(); ++i) {
    auto const word = s.word_of(i);
    Element    value = s.generator(word[0]);
    for (std::size_t p = 1; p < word.size(); ++p) {
      value = multiply(value, s.generator(word[p]));
    }
    CHECK(value == s.element(i));
  }
  CHECK_THROWS_AS(s.word_of(s.size()), UsageError);
}

TEST_CASE("the identity's reduced word is minimal among equivalent words") {
  auto const s  = complete_t3();
  auto const id = s.position(Element{Transformation::identity(3)});
  REQUIRE(id.has_value());
  auto const word = s.word_of(*id);
  for (auto const& w : oracles::all_words(3, word.size())) {
    if (!shortlex_less(w, word)) {
      continue;
    }
    Element value = s.generator(w[0]);
    for (std::size_t p = 1; p < w.size(); ++p) {
      value = multiply(value, s.generator(w[p]));
    }
    CHECK_FALSE(value == Element{Transformation::identity(3)});
  }
}

TEST_CASE("every non-empty subword of a stored word is stored") {
  auto const s = complete_t3();
  std::set<word_type> stored;
  for (element_index_type i = 0; i < s.size(); ++i) {
    stored.insert(s.word_of(i));
  }
  for (auto const& w : stored) {
    for (std::size_t from = 0; from < w.size(); ++from) {
      for (std::size_t len = 1; len + from <= w.size(); ++len) {
        word_type const sub(w.begin() + from, w.begin() + from + len);
        CHECK(stored.count(sub) == 1);
      }
    }
  }
}

TEST_CASE("cayley_lookup returns stored entries without multiplying") {
  auto const minimal = Snapshot::minimal(oracles::tn_generators(3));
  for (element_index_type i = 0; i < 3; ++i) {
    for (letter_type a = 0; a < 3; ++a) {
      CHECK(minimal.cayley_lookup(CayleySide::right, i, a) == UNDEFINED);
      CHECK(minimal.cayley_lookup(CayleySide::left, i, a) == UNDEFINED);
    }
  }
  CHECK_THROWS_AS(minimal.cayley_lookup(CayleySide::right, 3, 0), UsageError);
  CHECK_THROWS_AS(minimal.cayley_lookup(CayleySide::right, 0, 5), UsageError);

  auto const s = complete_t3();
  auto const products_before = s.products();
  for (element_index_type i = 0; i < s.size(); ++i) {
    for (letter_type a = 0; a < 3; ++a) {
      auto const r = s.cayley_lookup(CayleySide::right, i, a);
      auto const l = s.cayley_lookup(CayleySide::left, i, a);
      CHECK(multiply(s.element(i), s.generator(a)) == s.element(r));
      CHECK(multiply(s.generator(a), s.element(i)) == s.element(l));
    }
  }
  CHECK(s.products() == products_before);
}

TEST_CASE("rules evaluate equal on both sides and rewrite to normal forms") {
  auto const s = complete_t3();
  CHECK(Snapshot::minimal(oracles::tn_generators(3)).rules_of().empty());

  auto const rules = s.rules_of();
  CHECK(rules.size() == 16);
  auto eval = [&](word_type const& w) {
    Element value = s.generator(w[0]);
    for (std::size_t p = 1; p < w.size(); ++p) {
      value = multiply(value, s.generator(w[p]));
    }
    return value;
  };
  for (auto const& [lhs, rhs] : rules) {
    CHECK(shortlex_less(rhs, lhs));
    CHECK(eval(lhs) == eval(rhs));
  }

  // exhaustive rewriting of all words of length <= 4 reaches the stored
  // reduced word of the corresponding element
  for (auto const& w : oracles::all_words(3, 4)) {
    auto const normal = oracles::rewrite_to_normal_form(w, rules);
    auto const index  = s.position(eval(w));
    REQUIRE(index.has_value());
    CHECK(normal == s.word_of(*index));
  }
}

TEST_CASE("validator flags a forced frontier violation") {
  auto s = complete_t3();
  CHECK(validate(s, true).ok);
  s.force_frontier(static_cast<element_index_type>(s.size()) + 1);
  auto const report = validate(s);
  CHECK_FALSE(report.ok);
  bool found = false;
  for (auto const& v : report.violations) {
    if (v.rule == "frontier-range") {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("validator deep mode passes on a fully enumerated T_4") {
  auto s = Snapshot::minimal(oracles::tn_generators(4));
  froidure_pin(s);
  auto const report = validate(s, true);
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("save/load round-trips are structurally identical") {
  auto const minimal = Snapshot::minimal(oracles::tn_generators(3));
  std::stringstream buf;
  save_snapshot(minimal, buf);
  CHECK(load_snapshot(buf) == minimal);

  auto full = complete_t3();
  std::stringstream buf2;
  save_snapshot(full, buf2);
  auto const loaded = load_snapshot(buf2);
  CHECK(loaded == full);
  CHECK(validate(loaded, true).ok);
}

TEST_CASE("a partial snapshot resumes to the full semigroup after reload") {
  auto s = Snapshot::minimal(oracles::tn_generators(4));
  froidure_pin(s, 100);
  CHECK(s.size() >= 100);
  CHECK(s.size() < 256);
  std::stringstream buf;
  save_snapshot(s, buf);
  auto resumed = load_snapshot(buf);
  froidure_pin(resumed);
  CHECK(resumed.size() == 256);
  CHECK(validate(resumed, true).ok);
}

TEST_CASE("load rejects corrupt snapshots") {
  auto const s = complete_t3();
  std::stringstream buf;
  save_snapshot(s, buf);
  auto const bytes = buf.str();

  {  // truncation
    std::stringstream in(bytes.substr(0, bytes.size() / 2));
    CHECK_THROWS_AS(load_snapshot(in), InputError);
  }
  {  // checksum failure
    auto corrupted = bytes;
    corrupted[bytes.size() / 2] ^= 0x5a;
    std::stringstream in(corrupted);
    CHECK_THROWS_AS(load_snapshot(in), InputError);
  }
  {  // bad magic
    auto corrupted = bytes;
    corrupted[0] = 'X';
    std::stringstream in(corrupted);
    CHECK_THROWS_AS(load_snapshot(in), InputError);
  }
  {  // future format version, with the trailing checksum made consistent
    auto patched = bytes;
    // the version field is the first word of the first section's payload:
    // 8 magic bytes, 4 section id, 8 section length
    patched[20] = 2;
    auto const body = patched.substr(0, patched.size() - 8);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : body) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    for (int i = 0; i < 8; ++i) {
      patched[body.size() + i] = static_cast<char>((h >> (8 * i)) & 0xff);
    }
    std::stringstream in(patched);
    try {
      load_snapshot(in);
      FAIL("version mismatch must be rejected");
    } catch (InputError const& e) {
      CHECK(std::string(e.what()).find("version") != std::string::npos);
    }
  }
}

TEST_CASE("complete snapshots have total tables") {
  auto const s = complete_t3();
  CHECK(s.complete());
  for (element_index_type i = 0; i < s.size(); ++i) {
    for (letter_type a = 0; a < 3; ++a) {
      CHECK(s.right(i, a) != UNDEFINED);
      CHECK(s.left(i, a) != UNDEFINED);
    }
  }
  // counter identity: one multiplication per new element or rule
  CHECK(s.products()
        == (s.size() - s.number_of_generators()) + s.rules().size());
}
