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

// Batch front-end: enumerate, close, analyze, benchmark. JSON generator
// files in; report lines, CSV, DOT or snapshot files out.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley/analysis.hpp"
#include "cayley/bench.hpp"
#include "cayley/closure.hpp"
#include "cayley/concurrent.hpp"
#include "cayley/froidure_pin.hpp"
#include "cayley/snapshot.hpp"
#include "cayley/word.hpp"

namespace {

using namespace cayley;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void print_report(Snapshot const& s, double wall_ms) {
  std::cout << "size=" << s.size() << " products=" << s.products()
            << " rules=" << s.rules().size() << " ms="
            << static_cast<std::uint64_t>(wall_ms) << " complete="
            << (s.complete() ? "true" : "false") << "\n";
}

void write_text_file(std::string const& path, std::string const& text) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot open " + path + " for writing");
  }
  out << text;
}

struct EnumArgs {
  std::string   gens_path;
  std::string   resume_path;
  std::string   out_path;
  std::uint64_t limit     = 0;  // 0 = no limit
  std::uint32_t fragments = 0;  // 0 = sequential engine
  std::uint64_t seed      = kDefaultBucketSeed;
};

int cmd_enum(EnumArgs const& args) {
  if (args.gens_path.empty() == args.resume_path.empty()) {
    throw UsageError("exactly one of --gens and --resume is required");
  }
  if (!args.resume_path.empty() && args.fragments > 1) {
    throw UsageError("--resume cannot be combined with --fragments > 1");
  }
  auto const limit = args.limit == 0 ? LIMIT_MAX : args.limit;
  auto const t0    = std::chrono::steady_clock::now();

  Snapshot s = [&] {
    if (!args.resume_path.empty()) {
      auto loaded = load_snapshot_file(args.resume_path);
      froidure_pin(loaded, limit);
      return loaded;
    }
    auto gens = load_generators(args.gens_path);
    if (args.fragments >= 1) {
      ConcurrentOptions options;
      options.seed = args.seed;
      return concurrent_froidure_pin(gens, args.fragments, limit, options);
    }
    auto fresh = Snapshot::minimal(std::move(gens));
    froidure_pin(fresh, limit);
    return fresh;
  }();

  print_report(s, ms_since(t0));
  if (!args.out_path.empty()) {
    save_snapshot_file(s, args.out_path);
  }
  return 0;
}

struct ClosureArgs {
  std::string resume_path;
  std::string extra_path;
  std::string out_path;
  bool        complete = false;
};

int cmd_closure(ClosureArgs const& args) {
  auto const t0     = std::chrono::steady_clock::now();
  auto       base   = load_snapshot_file(args.resume_path);
  auto       extras = load_generators(args.extra_path);
  auto       s      = closure(base, extras);
  if (args.complete) {
    froidure_pin(s);
  }
  print_report(s, ms_since(t0));
  if (!args.out_path.empty()) {
    save_snapshot_file(s, args.out_path);
  }
  return 0;
}

struct AnalyzeArgs {
  std::string gens_path;
  std::string resume_path;
  std::string dot_path;
  std::string edges_path;
  std::string side = "right";
  bool        words = false;
};

int cmd_analyze(AnalyzeArgs const& args) {
  if (args.gens_path.empty() == args.resume_path.empty()) {
    throw UsageError("exactly one of --gens and --resume is required");
  }
  Snapshot s = args.resume_path.empty()
                   ? Snapshot::minimal(load_generators(args.gens_path))
                   : load_snapshot_file(args.resume_path);
  froidure_pin(s);  // analysis needs the complete snapshot

  auto const side
      = args.side == "left" ? CayleySide::left : CayleySide::right;
  if (!args.dot_path.empty() || !args.edges_path.empty()) {
    auto const graph = cayley_graph(s, side);
    if (!args.dot_path.empty()) {
      std::vector<std::string> labels;
      if (args.words) {
        labels.reserve(s.size());
        for (element_index_type i = 0; i < s.size(); ++i) {
          labels.push_back(render_word(s.word_of(i)));
        }
      }
      write_text_file(args.dot_path, export_dot(graph, labels));
    }
    if (!args.edges_path.empty()) {
      write_text_file(args.edges_path, export_edges(graph));
    }
  }

  auto const green = green_counts(s);
  std::cout << "size=" << s.size() << " R=" << green.r_classes
            << " L=" << green.l_classes << " H=" << green.h_classes
            << " D=" << green.d_classes << "\n";
  return 0;
}

struct BenchArgs {
  std::string   suite;
  std::string   out_path;
  // closure suite
  std::string   type     = "transformation";
  std::uint32_t size     = 7;
  std::uint32_t min_gens = 2, max_gens = 8;
  std::uint32_t min_extra = 1, max_extra = 1;
  std::uint32_t samples = 10;
  double        floor_ms = 10.0;
  // fragments suite
  std::string   gens_path;
  std::string   fragments_list = "1,2,4,8";
  std::uint64_t limit          = 0;
  // shared
  std::uint32_t trials = 3;
  std::uint64_t seed   = 42;
};

std::vector<std::uint32_t> parse_k_list(std::string const& text) {
  std::vector<std::uint32_t> out;
  std::stringstream          ss(text);
  std::string                item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (std::exception const&) {
      throw UsageError("invalid fragment count list: " + text);
    }
  }
  if (out.empty()) {
    throw UsageError("empty fragment count list");
  }
  return out;
}

int cmd_bench(BenchArgs const& args) {
  std::string csv;
  if (args.suite == "closure") {
    ClosureBenchConfig cfg;
    if (args.type == "transformation") {
      cfg.kind = ElementKind::transformation;
    } else if (args.type == "bmat") {
      cfg.kind = ElementKind::boolean_matrix;
    } else {
      throw UsageError("unknown element type " + args.type);
    }
    cfg.size      = args.size;
    cfg.min_gens  = args.min_gens;
    cfg.max_gens  = args.max_gens;
    cfg.min_extra = args.min_extra;
    cfg.max_extra = args.max_extra;
    cfg.samples   = args.samples;
    cfg.trials    = args.trials;
    cfg.seed      = args.seed;
    cfg.floor_ms  = args.floor_ms;
    csv           = closure_bench_csv(run_closure_bench(cfg));
  } else if (args.suite == "fragments") {
    if (args.gens_path.empty()) {
      throw UsageError("the fragments suite requires --gens");
    }
    auto gens = load_generators(args.gens_path);
    auto rows = run_fragments_bench(gens, parse_k_list(args.fragments_list),
                                    args.trials,
                                    args.limit == 0 ? LIMIT_MAX : args.limit,
                                    args.seed);
    csv = fragments_bench_csv(rows);
  } else {
    throw UsageError("unknown suite " + args.suite
                     + " (expected closure or fragments)");
  }
  if (args.out_path.empty()) {
    std::cout << csv;
  } else {
    write_text_file(args.out_path, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup enumeration toolkit"};
  app.require_subcommand(1);

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand(
      "enum", "enumerate a semigroup from generators or a saved snapshot");
  enum_cmd->add_option("--gens", enum_args.gens_path, "generator file");
  enum_cmd->add_option("--resume", enum_args.resume_path, "snapshot to resume");
  enum_cmd->add_option("--limit", enum_args.limit,
                       "enumerate at least this many elements (0 = all)");
  enum_cmd->add_option("--fragments", enum_args.fragments,
                       "use the concurrent engine with this many fragments");
  enum_cmd->add_option("--seed", enum_args.seed, "bucket digest seed");
  enum_cmd->add_option("--out", enum_args.out_path, "write snapshot here");

  ClosureArgs closure_args;
  auto* closure_cmd = app.add_subcommand(
      "closure", "extend a saved snapshot by additional generators");
  closure_cmd->add_option("--resume", closure_args.resume_path, "snapshot")
      ->required();
  closure_cmd->add_option("--extra", closure_args.extra_path,
                          "generator file with the additional generators")
      ->required();
  closure_cmd->add_flag("--complete", closure_args.complete,
                        "run the enumeration to completion afterwards");
  closure_cmd->add_option("--out", closure_args.out_path,
                          "write snapshot here");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Green's class counts and Cayley graph export");
  analyze_cmd->add_option("--gens", analyze_args.gens_path, "generator file");
  analyze_cmd->add_option("--resume", analyze_args.resume_path, "snapshot");
  analyze_cmd->add_option("--dot", analyze_args.dot_path,
                          "write the Cayley graph in DOT format");
  analyze_cmd->add_option("--edges", analyze_args.edges_path,
                          "write the Cayley graph as `i a j` lines");
  analyze_cmd->add_option("--side", analyze_args.side,
                          "which Cayley graph to export (right|left)")
      ->check(CLI::IsMember({"right", "left"}));
  analyze_cmd->add_flag("--words", analyze_args.words,
                        "label DOT vertices with reduced words");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "benchmark suites (CSV out)");
  bench_cmd->add_option("--suite", bench_args.suite, "closure or fragments")
      ->required();
  bench_cmd->add_option("--type", bench_args.type,
                        "element kind for the closure suite")
      ->check(CLI::IsMember({"transformation", "bmat"}));
  bench_cmd->add_option("--size", bench_args.size,
                        "degree or dimension for the closure suite");
  bench_cmd->add_option("--min-gens", bench_args.min_gens, "min |A|");
  bench_cmd->add_option("--max-gens", bench_args.max_gens, "max |A|");
  bench_cmd->add_option("--min-extra", bench_args.min_extra, "min |X|");
  bench_cmd->add_option("--max-extra", bench_args.max_extra, "max |X|");
  bench_cmd->add_option("--samples", bench_args.samples, "samples to keep");
  bench_cmd->add_option("--floor-ms", bench_args.floor_ms,
                        "reject samples whose base enumeration is faster");
  bench_cmd->add_option("--gens", bench_args.gens_path,
                        "generator file for the fragments suite");
  bench_cmd->add_option("--fragments-list", bench_args.fragments_list,
                        "comma separated fragment counts");
  bench_cmd->add_option("--limit", bench_args.limit, "size limit (0 = all)");
  bench_cmd->add_option("--trials", bench_args.trials,
                        "runs to average wall time over");
  bench_cmd->add_option("--seed", bench_args.seed, "sampling / bucket seed");
  bench_cmd->add_option("--out", bench_args.out_path, "write CSV here");

  try {
    app.parse(argc, argv);
    if (enum_cmd->parsed()) {
      return cmd_enum(enum_args);
    }
    if (closure_cmd->parsed()) {
      return cmd_closure(closure_args);
    }
    if (analyze_cmd->parsed()) {
      return cmd_analyze(analyze_args);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench_args);
    }
    return 1;
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (cayley::UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (cayley::InputError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (cayley::InternalError const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
