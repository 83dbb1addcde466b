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

#include "cayley/bench.hpp"
#include "cayley/element.hpp"
#include "oracles.hpp"

using namespace cayley;

TEST_CASE("transformation multiplication is a right action") {
  Element x{Transformation({1, 0})};
  Element y{Transformation({0, 0})};
  // the constant map absorbs on the right
  CHECK(multiply(x, y) == y);
  CHECK(multiply(y, x) == Element{Transformation({1, 1})});
}

TEST_CASE("boolean matrix identity is two-sided") {
  std::mt19937_64 rng(7);
  auto const      id = Element{BooleanMatrix::identity(3)};
  for (int i = 0; i < 20; ++i) {
    auto const m = random_boolean_matrix(3, rng);
    CHECK(multiply(id, m) == m);
    CHECK(multiply(m, id) == m);
  }
}

TEST_CASE("boolean matrix product matches the triple-loop oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto const x = random_boolean_matrix(3, rng);
    auto const y = random_boolean_matrix(3, rng);
    auto const expected
        = oracles::naive_bmat_product(x.boolean_matrix(), y.boolean_matrix());
    CHECK(multiply(x, y).boolean_matrix() == expected);
  }
  // and across a word boundary
  for (int i = 0; i < 20; ++i) {
    auto const x = random_boolean_matrix(70, rng);
    auto const y = random_boolean_matrix(70, rng);
    auto const expected
        = oracles::naive_bmat_product(x.boolean_matrix(), y.boolean_matrix());
    CHECK(multiply(x, y).boolean_matrix() == expected);
  }
}

TEST_CASE("multiplication is associative on random triples") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    auto const x = random_transformation(5, rng);
    auto const y = random_transformation(5, rng);
    auto const z = random_transformation(5, rng);
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
  }
  for (int i = 0; i < 1000; ++i) {
    auto const x = random_boolean_matrix(4, rng);
    auto const y = random_boolean_matrix(4, rng);
    auto const z = random_boolean_matrix(4, rng);
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
  }
}

TEST_CASE("mixed kind or size products are usage errors") {
  Element t{Transformation({1, 0})};
  Element t3{Transformation({1, 0, 2})};
  Element m{BooleanMatrix::identity(2)};
  CHECK_THROWS_AS(multiply(t, m), UsageError);
  CHECK_THROWS_AS(multiply(t, t3), UsageError);
}

TEST_CASE("digest is deterministic and equality-consistent") {
  Element x{Transformation({1, 2, 0})};
  Element y{Transformation({1, 2, 0})};
  CHECK(digest(x, kDedupSeed) == digest(x, kDedupSeed));
  CHECK(digest(x, kDedupSeed) == digest(y, kDedupSeed));
  CHECK(digest(x, kDedupSeed) != digest(x, kDedupSeed + 1));
}

TEST_CASE("all 27 elements of T_3 have distinct digests") {
  auto const closure = oracles::brute_force_closure(oracles::tn_generators(3));
  REQUIRE(closure.size() == 27);
  // rebuild the elements from their encodings via a fresh closure pass
  std::set<std::uint64_t>        digests;
  std::vector<Element>           todo = oracles::tn_generators(3);
  std::set<std::string>          seen;
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    if (!seen.insert(x.to_string()).second) {
      continue;
    }
    digests.insert(digest(x, kDedupSeed));
    for (auto const& g : oracles::tn_generators(3)) {
      todo.push_back(multiply(x, g));
      todo.push_back(multiply(g, x));
    }
  }
  CHECK(seen.size() == 27);
  CHECK(digests.size() == 27);
}

TEST_CASE("parse_generators reads the on-disk format") {
  auto const gens = parse_generators(
      R"({"type":"transformation","degree":3,"gens":[[1,2,0],[1,0,2],[0,1,0]]})");
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == Element{Transformation({1, 2, 0})});
  CHECK(gens[1] == Element{Transformation({1, 0, 2})});
  CHECK(gens[2] == Element{Transformation({0, 1, 0})});

  auto const mats = parse_generators(
      R"({"type":"bmat","dim":2,"gens":[[[1,0],[0,1]],[[0,1],[1,0]]]})");
  REQUIRE(mats.size() == 2);
  CHECK(mats[0] == Element{BooleanMatrix::identity(2)});
}

TEST_CASE("parse_generators rejects bad documents") {
  CHECK_THROWS_AS(parse_generators("not json"), InputError);
  CHECK_THROWS_AS(
      parse_generators(R"({"type":"transformation","degree":2,"gens":[]})"),
      InputError);
  CHECK_THROWS_AS(
      parse_generators(R"({"type":"nope","degree":2,"gens":[[0,1]]})"),
      InputError);
  // inconsistent degree
  CHECK_THROWS_AS(
      parse_generators(
          R"({"type":"transformation","degree":3,"gens":[[0,1]]})"),
      InputError);
  // image out of range
  CHECK_THROWS_AS(
      parse_generators(
          R"({"type":"transformation","degree":2,"gens":[[0,2]]})"),
      InputError);
  // non-boolean entries
  CHECK_THROWS_AS(
      parse_generators(R"({"type":"bmat","dim":1,"gens":[[[2]]]})"),
      InputError);

  try {
    parse_generators(
        R"({"type":"transformation","degree":2,"gens":[[0,1],[0,1]]})");
    FAIL("duplicate generators must be rejected");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).find("index 1") != std::string::npos);
  }
}
