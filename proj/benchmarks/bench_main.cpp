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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cayley/bench.hpp"
#include "cayley/closure.hpp"
#include "cayley/concurrent.hpp"
#include "cayley/element.hpp"
#include "cayley/froidure_pin.hpp"

namespace {

using namespace cayley;

std::vector<Element> tn_gens(std::uint32_t n) {
  std::vector<std::uint32_t> cycle(n), swap(n), merge(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap[i]  = i < 2 ? 1 - i : i;
    merge[i] = i == n - 1 ? 0 : i;
  }
  return {Element(Transformation(cycle)), Element(Transformation(swap)),
          Element(Transformation(merge))};
}

void BM_transformation_product(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto const x = random_transformation(
      static_cast<std::uint32_t>(state.range(0)), rng);
  auto const y = random_transformation(
      static_cast<std::uint32_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(x, y));
  }
}
BENCHMARK(BM_transformation_product)->Arg(8)->Arg(64)->Arg(512);

void BM_boolean_matrix_product(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto const x = random_boolean_matrix(
      static_cast<std::uint32_t>(state.range(0)), rng);
  auto const y = random_boolean_matrix(
      static_cast<std::uint32_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(x, y));
  }
}
BENCHMARK(BM_boolean_matrix_product)->Arg(6)->Arg(64)->Arg(256);

void BM_sequential_enumeration(benchmark::State& state) {
  auto const gens = tn_gens(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto s = Snapshot::minimal(gens);
    froidure_pin(s);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_sequential_enumeration)->Arg(4)->Arg(5)->Arg(6)
    ->Unit(benchmark::kMillisecond);

void BM_concurrent_enumeration(benchmark::State& state) {
  auto const gens = tn_gens(6);
  auto const k    = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrent_froidure_pin(gens, k).size());
  }
}
BENCHMARK(BM_concurrent_enumeration)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_closure_extension(benchmark::State& state) {
  // extend the symmetric group by the rank-reducing generator
  auto base = Snapshot::minimal(
      {Element{Transformation({1, 2, 3, 4, 5, 0})},
       Element{Transformation({1, 0, 2, 3, 4, 5})}});
  froidure_pin(base);
  std::vector<Element> const extra{
      Element{Transformation({0, 1, 2, 3, 4, 0})}};
  for (auto _ : state) {
    auto t = closure(base, extra);
    froidure_pin(t);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_closure_extension)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
