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

// Benchmark harnesses behind the `bench` CLI subcommand. The closure suite
// samples random generating sets (A, X) and times three computations per
// sample: enumerating <A> to completion, extending that snapshot by X, and
// enumerating <A, X> from scratch up to the size the extension reached.
// The fragments suite sweeps the fragment count on a fixed semigroup. Both
// emit schema-stable CSV.

#ifndef CAYLEY_BENCH_HPP_
#define CAYLEY_BENCH_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "element.hpp"
#include "types.hpp"

namespace cayley {

Element random_transformation(std::uint32_t degree, std::mt19937_64& rng);
Element random_boolean_matrix(std::uint32_t dim, std::mt19937_64& rng);

//! `count` distinct uniformly random elements of the given kind and size.
std::vector<Element> random_generators(ElementKind      kind,
                                       std::uint32_t    size,
                                       std::uint32_t    count,
                                       std::mt19937_64& rng);

struct ClosureBenchConfig {
  ElementKind   kind      = ElementKind::transformation;
  std::uint32_t size      = 7;  // degree or dimension
  std::uint32_t min_gens  = 2;
  std::uint32_t max_gens  = 8;
  std::uint32_t min_extra = 1;
  std::uint32_t max_extra = 1;
  std::uint32_t samples   = 10;
  std::uint32_t trials    = 3;
  std::uint64_t seed      = 42;
  //! Samples whose base enumeration finishes faster than this are rejected
  //! to keep timing noise out of the ratios.
  double        floor_ms     = 10.0;
  std::uint64_t max_attempts = 1000;
};

struct ClosureBenchRow {
  std::uint32_t a_size;
  std::uint32_t x_size;
  std::uint64_t s_size;  // |<A>|
  std::uint64_t m_size;  // size returned by the extension
  double        t1_ms;
  double        t2_ms;
  double        t3_ms;
  //! The sampled generators, kept so callers can re-verify the sizes.
  std::vector<Element> gens;
  std::vector<Element> extras;
};

std::vector<ClosureBenchRow> run_closure_bench(ClosureBenchConfig const& cfg);

//! Header: a_size,x_size,s_size,m_size,t1_ms,t2_ms,t3_ms,t2_over_t3,
//! t1t2_over_t3
std::string closure_bench_csv(std::vector<ClosureBenchRow> const& rows);

struct FragmentsBenchRow {
  std::uint32_t k;
  std::uint64_t size;
  std::uint64_t products;
  double        ms;
};

std::vector<FragmentsBenchRow>
run_fragments_bench(std::vector<Element> const&       gens,
                    std::vector<std::uint32_t> const& fragment_counts,
                    std::uint32_t                     trials,
                    std::uint64_t                     limit,
                    std::uint64_t                     seed);

//! Header: k,size,products,ms
std::string fragments_bench_csv(std::vector<FragmentsBenchRow> const& rows);

}  // namespace cayley
#endif  // CAYLEY_BENCH_HPP_
