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

#include "cayley/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace cayley {

IndexedDigraph cayley_graph(Snapshot const& s, CayleySide side) {
  if (!s.complete()) {
    throw UsageError("Cayley graph export requires a complete snapshot");
  }
  auto const r = static_cast<letter_type>(s.number_of_generators());
  IndexedDigraph g;
  g.number_of_vertices = s.size();
  g.adjacency.resize(s.size());
  for (element_index_type i = 0; i < s.size(); ++i) {
    g.adjacency[i].reserve(r);
    for (letter_type a = 0; a < r; ++a) {
      auto const target
          = side == CayleySide::right ? s.right(i, a) : s.left(i, a);
      g.adjacency[i].emplace_back(a, target);
    }
  }
  return g;
}

// Iterative Tarjan; components are numbered in completion order, which is
// reverse topological on the condensation.
SccResult scc(IndexedDigraph const& g) {
  auto const n = g.number_of_vertices;
  SccResult  out;
  out.component.assign(n, UNDEFINED);

  std::vector<element_index_type> index(n, UNDEFINED);
  std::vector<element_index_type> low(n, 0);
  std::vector<bool>               on_stack(n, false);
  std::vector<element_index_type> stack;
  element_index_type              next_index = 0;

  struct Frame {
    element_index_type v;
    std::size_t        edge;
  };
  std::vector<Frame> frames;

  for (element_index_type root = 0; root < n; ++root) {
    if (index[root] != UNDEFINED) {
      continue;
    }
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& frame = frames.back();
      auto const v = frame.v;
      if (frame.edge < g.adjacency[v].size()) {
        auto const w = g.adjacency[v][frame.edge].second;
        ++frame.edge;
        if (index[w] == UNDEFINED) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          auto const id = static_cast<element_index_type>(out.count++);
          element_index_type w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w]      = false;
            out.component[w] = id;
          } while (w != v);
        }
        frames.pop_back();
        if (!frames.empty()) {
          auto const parent     = frames.back().v;
          low[parent]           = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return out;
}

GreenCounts green_counts(Snapshot const& s) {
  if (!s.complete()) {
    throw UsageError("Green's class counts require a complete snapshot");
  }
  auto const right = scc(cayley_graph(s, CayleySide::right));
  auto const left  = scc(cayley_graph(s, CayleySide::left));

  std::unordered_set<std::uint64_t> pairs;
  for (element_index_type i = 0; i < s.size(); ++i) {
    pairs.insert(static_cast<std::uint64_t>(right.component[i]) * left.count
                 + left.component[i]);
  }

  IndexedDigraph both = cayley_graph(s, CayleySide::right);
  auto const     lg   = cayley_graph(s, CayleySide::left);
  for (element_index_type i = 0; i < s.size(); ++i) {
    both.adjacency[i].insert(both.adjacency[i].end(), lg.adjacency[i].begin(),
                             lg.adjacency[i].end());
  }

  return {right.count, left.count, pairs.size(), scc(both).count};
}

std::string export_dot(IndexedDigraph const&           g,
                       std::vector<std::string> const& labels) {
  if (!labels.empty() && labels.size() != g.number_of_vertices) {
    throw UsageError("label count does not match vertex count");
  }
  std::ostringstream os;
  os << "digraph cayley {\n";
  for (std::size_t v = 0; v < g.number_of_vertices; ++v) {
    os << "  n" << v;
    if (!labels.empty()) {
      os << " [label=\"" << labels[v] << "\"]";
    }
    os << ";\n";
  }
  for (std::size_t v = 0; v < g.number_of_vertices; ++v) {
    for (auto const& [letter, target] : g.adjacency[v]) {
      os << "  n" << v << " -> n" << target << " [label=\"a" << letter
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_edges(IndexedDigraph const& g) {
  std::ostringstream os;
  for (std::size_t v = 0; v < g.number_of_vertices; ++v) {
    for (auto const& [letter, target] : g.adjacency[v]) {
      os << v << " " << letter << " " << target << "\n";
    }
  }
  return os.str();
}

}  // namespace cayley
