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

// Derived structure on top of a completed snapshot: Cayley graph export,
// strongly connected components, and Green's class counts (R, L, H, D).

#ifndef CAYLEY_ANALYSIS_HPP_
#define CAYLEY_ANALYSIS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "snapshot.hpp"
#include "types.hpp"
#include "word.hpp"

namespace cayley {

//! A digraph on element indices with letter-labelled edges.
struct IndexedDigraph {
  std::size_t number_of_vertices = 0;
  // adjacency[v] = (letter, target) pairs in deterministic order.
  std::vector<std::vector<std::pair<letter_type, element_index_type>>>
      adjacency;
};

//! The right (s -> s*a) or left (s -> a*s) Cayley graph of a complete
//! snapshot; out-degree equals the number of generators. Throws UsageError
//! on an incomplete snapshot.
IndexedDigraph cayley_graph(Snapshot const& s, CayleySide side);

struct SccResult {
  std::vector<element_index_type> component;  // id per vertex
  std::size_t                     count = 0;
};

//! Strongly connected components; ids are contiguous from 0 in reverse
//! topological order (every edge goes to an equal or smaller id).
SccResult scc(IndexedDigraph const& g);

struct GreenCounts {
  std::size_t r_classes;
  std::size_t l_classes;
  std::size_t h_classes;
  std::size_t d_classes;
};

//! R-classes are the components of the right Cayley graph, L-classes of the
//! left graph, H their common refinement, and D the components of the union
//! graph (which equals J on finite semigroups).
GreenCounts green_counts(Snapshot const& s);

//! Deterministic DOT rendering; when `labels` is non-empty it must hold one
//! label per vertex (the CLI passes rendered reduced words).
std::string export_dot(IndexedDigraph const&           g,
                       std::vector<std::string> const& labels = {});

//! One `i a j` triple per line, in deterministic order.
std::string export_edges(IndexedDigraph const& g);

}  // namespace cayley
#endif  // CAYLEY_ANALYSIS_HPP_
