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

#include <algorithm>
#include <cstddef>
#include <sstream>

#include "cayley/detail/dedup_map.hpp"
#include "cayley/snapshot.hpp"

namespace cayley {

namespace {

struct Checker {
  Snapshot const&        s;
  std::vector<Violation> out;

  void fail(std::string rule, std::string context, std::string message) {
    out.push_back({std::move(rule), std::move(context), std::move(message)});
  }

  std::string ctx(element_index_type i) {
    return "element " + std::to_string(i);
  }

  std::string ctx(element_index_type i, letter_type a) {
    return "element " + std::to_string(i) + ", letter " + std::to_string(a);
  }
};

}  // namespace

ValidationReport validate(Snapshot const& s, bool deep) {
  Checker c{s, {}};

  auto const n = static_cast<element_index_type>(s.size());
  auto const r = static_cast<letter_type>(s.number_of_generators());

  if (r == 0) {
    c.fail("generators", "", "empty generating set");
    return {false, std::move(c.out)};
  }
  if (n < r) {
    c.fail("generators", "", "fewer elements than generators");
    return {false, std::move(c.out)};
  }

  // Generators occupy the first r slots, in letter order, with length-1 words.
  for (letter_type a = 0; a < r; ++a) {
    auto const& m = s.meta(a);
    if (!(s.element(a) == s.generator(a)) || m.first != a || m.last != a
        || m.prefix != UNDEFINED || m.suffix != UNDEFINED || m.length != 1) {
      c.fail("generators", c.ctx(a), "generator slot inconsistent");
    }
  }

  // Prefix links must point strictly backwards so words are well-founded.
  bool words_ok = true;
  for (element_index_type i = r; i < n; ++i) {
    auto const& m = s.meta(i);
    if (m.prefix == UNDEFINED || m.prefix >= i || m.suffix == UNDEFINED
        || m.suffix >= i || m.last >= r || m.first >= r
        || m.length != s.meta(m.prefix).length + 1) {
      c.fail("meta-links", c.ctx(i), "prefix/suffix link out of order");
      words_ok = false;
    }
  }
  if (!words_ok) {
    return {false, std::move(c.out)};
  }

  std::vector<word_type> words(n);
  for (element_index_type i = 0; i < n; ++i) {
    words[i] = s.word_of(i);
  }

  // Strictly increasing short-lex order across indices.
  for (element_index_type i = 1; i < n; ++i) {
    if (!shortlex_less(words[i - 1], words[i])) {
      c.fail("ordering", c.ctx(i), "stored words not strictly increasing");
    }
  }

  // Word-level consistency of the meta record.
  for (element_index_type i = 0; i < n; ++i) {
    auto const& m = s.meta(i);
    if (words[i].front() != m.first || words[i].back() != m.last) {
      c.fail("meta-links", c.ctx(i), "first/last letter mismatch");
    }
    if (m.length != words[i].size()) {
      c.fail("meta-links", c.ctx(i), "length mismatch");
    }
    if (i >= r) {
      word_type suffix(words[i].begin() + 1, words[i].end());
      if (words[m.suffix] != suffix) {
        c.fail("meta-links", c.ctx(i),
               "suffix link does not store the suffix word");
      }
    }
  }

  // Frontier and applied ranges.
  auto const f = s.frontier();
  if (f > n) {
    c.fail("frontier-range", "", "frontier exceeds size + 1");
  }
  if (s.applied() > r || (s.applied() > 0 && f >= n)) {
    c.fail("frontier-range", "", "applied generator count out of range");
  }

  // Right table domain: full rows below the frontier, a letter-prefix on the
  // frontier row, nothing beyond.
  auto const fr = std::min(f, n);
  for (element_index_type i = 0; i < n; ++i) {
    for (letter_type a = 0; a < r; ++a) {
      auto const v        = s.right(i, a);
      bool const expected = i < fr || (i == fr && a < s.applied());
      if (expected && v == UNDEFINED) {
        c.fail("right-domain", c.ctx(i, a), "missing right table entry");
      } else if (!expected && v != UNDEFINED) {
        c.fail("right-domain", c.ctx(i, a), "unexpected right table entry");
      }
      if (v != UNDEFINED && v >= n) {
        c.fail("right-domain", c.ctx(i, a), "right target out of range");
      }
    }
  }

  // Left table domain: a whole prefix of fully defined rows, either caught up
  // with the frontier or lagging exactly one length class behind it.
  element_index_type lhat = 0;
  while (lhat < n && s.left(lhat, 0) != UNDEFINED) {
    ++lhat;
  }
  for (element_index_type i = 0; i < n; ++i) {
    for (letter_type a = 0; a < r; ++a) {
      auto const v = s.left(i, a);
      if (i < lhat && v == UNDEFINED) {
        c.fail("left-domain", c.ctx(i, a), "missing left table entry");
      } else if (i >= lhat && v != UNDEFINED) {
        c.fail("left-domain", c.ctx(i, a), "left rows not a leading block");
      }
      if (v != UNDEFINED && v >= n) {
        c.fail("left-domain", c.ctx(i, a), "left target out of range");
      }
    }
  }
  if (lhat != f) {
    if (f == 0) {
      c.fail("left-domain", "", "left table defined before any right row");
    } else {
      element_index_type below = 0;
      while (below < n && s.meta(below).length < s.meta(f - 1).length) {
        ++below;
      }
      if (lhat != below) {
        c.fail("left-domain", "",
               "left coverage is neither the frontier nor the previous "
               "length class");
      }
    }
  }

  // Every defined entry stores a word no greater than the product word.
  for (element_index_type i = 0; i < n; ++i) {
    for (letter_type a = 0; a < r; ++a) {
      if (auto v = s.right(i, a); v != UNDEFINED && v < n) {
        word_type ua = words[i];
        ua.push_back(a);
        if (shortlex_less(ua, words[v])) {
          c.fail("entry-reduced", c.ctx(i, a),
                 "right entry stores a larger word than the product");
        }
      }
      if (auto v = s.left(i, a); v != UNDEFINED && v < n) {
        word_type au;
        au.reserve(words[i].size() + 1);
        au.push_back(a);
        au.insert(au.end(), words[i].begin(), words[i].end());
        if (shortlex_less(au, words[v])) {
          c.fail("entry-reduced", c.ctx(i, a),
                 "left entry stores a larger word than the product");
        }
      }
    }
  }

  // Pairwise distinctness via a fresh dedup pass.
  {
    detail::DedupMap fresh;
    for (element_index_type i = 0; i < n; ++i) {
      auto const dig = digest(s.element(i), kDedupSeed);
      if (fresh.find(s.element(i), dig, s.elements()).has_value()) {
        c.fail("distinct", c.ctx(i), "duplicate element value");
      } else {
        fresh.insert(i, dig);
      }
    }
  }

  for (std::size_t ri = 0; ri < s.rules().size(); ++ri) {
    auto const& rule = s.rules()[ri];
    if (rule.lhs >= n || rule.rhs >= n || rule.letter >= r) {
      c.fail("rules", "rule " + std::to_string(ri), "index out of range");
      continue;
    }
    word_type lhs = words[rule.lhs];
    lhs.push_back(rule.letter);
    if (!shortlex_less(words[rule.rhs], lhs)) {
      c.fail("rules", "rule " + std::to_string(ri),
             "rule does not rewrite downwards");
    }
  }

  if (deep) {
    for (element_index_type i = 0; i < n; ++i) {
      for (letter_type a = 0; a < r; ++a) {
        if (auto v = s.right(i, a); v != UNDEFINED && v < n) {
          if (!(multiply(s.element(i), s.generator(a)) == s.element(v))) {
            c.fail("right-product", c.ctx(i, a),
                   "right entry disagrees with re-multiplication");
          }
        }
        if (auto v = s.left(i, a); v != UNDEFINED && v < n) {
          if (!(multiply(s.generator(a), s.element(i)) == s.element(v))) {
            c.fail("left-product", c.ctx(i, a),
                   "left entry disagrees with re-multiplication");
          }
        }
      }
    }
    for (element_index_type i = r; i < n; ++i) {
      auto const& m = s.meta(i);
      if (!(multiply(s.element(m.prefix), s.generator(m.last))
            == s.element(i))) {
        c.fail("meta-product", c.ctx(i), "prefix link re-multiplication");
      }
      if (!(multiply(s.generator(m.first), s.element(m.suffix))
            == s.element(i))) {
        c.fail("meta-product", c.ctx(i), "suffix link re-multiplication");
      }
    }
    for (std::size_t ri = 0; ri < s.rules().size(); ++ri) {
      auto const& rule = s.rules()[ri];
      if (rule.lhs < n && rule.rhs < n && rule.letter < r) {
        if (!(multiply(s.element(rule.lhs), s.generator(rule.letter))
              == s.element(rule.rhs))) {
          c.fail("rule-product", "rule " + std::to_string(ri),
                 "rule sides evaluate to different elements");
        }
      }
    }
  }

  return {c.out.empty(), std::move(c.out)};
}

}  // namespace cayley
