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

#include "cayley/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "cayley/closure.hpp"
#include "cayley/concurrent.hpp"
#include "cayley/froidure_pin.hpp"
#include "cayley/snapshot.hpp"

namespace cayley {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

}  // namespace

Element random_transformation(std::uint32_t degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, degree - 1);
  std::vector<std::uint32_t>                   images(degree);
  for (auto& v : images) {
    v = dist(rng);
  }
  return Element(Transformation(std::move(images)));
}

Element random_boolean_matrix(std::uint32_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t>  bit(0, 1);
  std::vector<std::vector<std::uint32_t>> rows(
      dim, std::vector<std::uint32_t>(dim));
  for (auto& row : rows) {
    for (auto& v : row) {
      v = bit(rng);
    }
  }
  return Element(BooleanMatrix(rows));
}

std::vector<Element> random_generators(ElementKind      kind,
                                       std::uint32_t    size,
                                       std::uint32_t    count,
                                       std::mt19937_64& rng) {
  std::vector<Element> out;
  out.reserve(count);
  while (out.size() < count) {
    Element x = kind == ElementKind::transformation
                    ? random_transformation(size, rng)
                    : random_boolean_matrix(size, rng);
    bool duplicate = false;
    for (auto const& y : out) {
      if (x == y) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<ClosureBenchRow> run_closure_bench(ClosureBenchConfig const& cfg) {
  if (cfg.min_gens == 0 || cfg.min_gens > cfg.max_gens
      || cfg.min_extra > cfg.max_extra || cfg.samples == 0
      || cfg.trials == 0) {
    throw UsageError("invalid closure benchmark bounds");
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::uint32_t> n_gens(cfg.min_gens,
                                                      cfg.max_gens);
  std::uniform_int_distribution<std::uint32_t> n_extra(cfg.min_extra,
                                                       cfg.max_extra);

  std::vector<ClosureBenchRow> rows;
  std::uint64_t                attempts = 0;
  while (rows.size() < cfg.samples) {
    if (++attempts > cfg.max_attempts) {
      throw InputError("closure benchmark: rejection floor discarded too "
                       "many samples");
    }
    auto gens = random_generators(cfg.kind, cfg.size, n_gens(rng), rng);
    auto extras = random_generators(cfg.kind, cfg.size, n_extra(rng), rng);

    ClosureBenchRow row;
    row.a_size = static_cast<std::uint32_t>(gens.size());
    row.x_size = static_cast<std::uint32_t>(extras.size());
    row.t1_ms = row.t2_ms = row.t3_ms = 0.0;

    bool rejected = false;
    for (std::uint32_t trial = 0; trial < cfg.trials; ++trial) {
      auto t0   = std::chrono::steady_clock::now();
      auto base = Snapshot::minimal(gens);
      froidure_pin(base);
      auto const t1 = ms_since(t0);
      if (t1 < cfg.floor_ms) {
        rejected = true;
        break;
      }

      t0            = std::chrono::steady_clock::now();
      auto extended = closure(base, extras);
      auto const t2 = ms_since(t0);

      t0          = std::chrono::steady_clock::now();
      auto fresh  = Snapshot::minimal(extended.generators());
      froidure_pin(fresh, extended.size());
      auto const t3 = ms_since(t0);

      row.s_size = base.size();
      row.m_size = extended.size();
      row.t1_ms += t1 / cfg.trials;
      row.t2_ms += t2 / cfg.trials;
      row.t3_ms += t3 / cfg.trials;
    }
    if (rejected) {
      continue;
    }
    row.gens   = std::move(gens);
    row.extras = std::move(extras);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string closure_bench_csv(std::vector<ClosureBenchRow> const& rows) {
  std::ostringstream os;
  os << "a_size,x_size,s_size,m_size,t1_ms,t2_ms,t3_ms,t2_over_t3,"
        "t1t2_over_t3\n";
  for (auto const& row : rows) {
    double const t3 = row.t3_ms > 1e-6 ? row.t3_ms : 1e-6;
    os << row.a_size << "," << row.x_size << "," << row.s_size << ","
       << row.m_size << "," << fmt(row.t1_ms, 3) << "," << fmt(row.t2_ms, 3)
       << "," << fmt(row.t3_ms, 3) << "," << fmt(row.t2_ms / t3, 4) << ","
       << fmt((row.t1_ms + row.t2_ms) / t3, 4) << "\n";
  }
  return os.str();
}

std::vector<FragmentsBenchRow>
run_fragments_bench(std::vector<Element> const&       gens,
                    std::vector<std::uint32_t> const& fragment_counts,
                    std::uint32_t                     trials,
                    std::uint64_t                     limit,
                    std::uint64_t                     seed) {
  if (trials == 0 || fragment_counts.empty()) {
    throw UsageError("invalid fragments benchmark bounds");
  }
  std::vector<FragmentsBenchRow> rows;
  rows.reserve(fragment_counts.size());
  for (auto k : fragment_counts) {
    FragmentsBenchRow row{k, 0, 0, 0.0};
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
      ConcurrentOptions options;
      options.seed  = seed;
      auto const t0 = std::chrono::steady_clock::now();
      auto snapshot = concurrent_froidure_pin(gens, k, limit, options);
      row.ms += ms_since(t0) / trials;
      row.size     = snapshot.size();
      row.products = snapshot.products();
    }
    rows.push_back(row);
  }
  return rows;
}

std::string fragments_bench_csv(std::vector<FragmentsBenchRow> const& rows) {
  std::ostringstream os;
  os << "k,size,products,ms\n";
  for (auto const& row : rows) {
    os << row.k << "," << row.size << "," << row.products << ","
       << fmt(row.ms, 3) << "\n";
  }
  return os.str();
}

}  // namespace cayley
