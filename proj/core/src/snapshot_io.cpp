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

// Snapshot file layout: the magic bytes, then length-prefixed sections
// (header, generators, meta, right table, left table, rules, counters) of
// little-endian fixed-width integers, then a 64-bit checksum of everything
// before it. Only generator payloads are stored; the other element values
// are rebuilt from the prefix links on load.

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "cayley/snapshot.hpp"

namespace cayley {

namespace {

constexpr char          kMagic[8]  = {'S', 'G', 'P', 'S', 'N', 'A', 'P', '1'};
constexpr std::uint32_t kVersion   = 1;
constexpr std::uint32_t kSecHeader = 1, kSecGens = 2, kSecMeta = 3,
                        kSecRight = 4, kSecLeft = 5, kSecRules = 6,
                        kSecCounters = 7;

std::uint64_t fnv1a64(std::string const& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Writer {
  std::string buf;

  void u8(std::uint8_t v) {
    buf.push_back(static_cast<char>(v));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
  }
};

struct Reader {
  std::string const& buf;
  std::size_t        pos = 0;

  void need(std::size_t n) const {
    if (pos + n > buf.size()) {
      throw InputError("snapshot file truncated");
    }
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(buf[pos++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[pos++]))
           << (8 * i);
    }
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos++]))
           << (8 * i);
    }
    return v;
  }
};

void write_element(Writer& w, Element const& x) {
  if (x.kind() == ElementKind::transformation) {
    for (auto v : x.transformation().images()) {
      w.u32(v);
    }
  } else {
    for (auto word : x.boolean_matrix().bits()) {
      w.u64(word);
    }
  }
}

Element read_element(Reader& rd, ElementKind kind, std::uint32_t size) {
  if (kind == ElementKind::transformation) {
    std::vector<std::uint32_t> images(size);
    for (auto& v : images) {
      v = rd.u32();
    }
    try {
      return Element(Transformation(std::move(images)));
    } catch (UsageError const& e) {
      throw InputError(std::string("corrupt generator payload: ") + e.what());
    }
  }
  std::uint32_t const        wpr = (size + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(size) * wpr);
  for (auto& word : bits) {
    word = rd.u64();
  }
  return Element(BooleanMatrix(size, std::move(bits)));
}

// Section frame: id, payload length, payload.
void begin_section(Writer& w, std::uint32_t id, Writer const& payload) {
  w.u32(id);
  w.u64(payload.buf.size());
  w.buf += payload.buf;
}

Reader expect_section(Reader& rd, std::uint32_t id) {
  auto const got = rd.u32();
  if (got != id) {
    throw InputError("snapshot section " + std::to_string(id)
                     + " missing (found " + std::to_string(got) + ")");
  }
  auto const len = rd.u64();
  rd.need(len);
  Reader section{rd.buf, rd.pos};
  rd.pos += len;
  return section;
}

}  // namespace

void save_snapshot(Snapshot const& s, std::ostream& out) {
  Writer w;
  w.buf.assign(kMagic, sizeof(kMagic));

  auto const n = static_cast<std::uint64_t>(s.size());
  auto const r = static_cast<std::uint32_t>(s.number_of_generators());

  Writer header;
  header.u32(kVersion);
  header.u8(static_cast<std::uint8_t>(s.generator(0).kind()));
  header.u32(s.generator(0).size());
  header.u32(r);
  header.u64(n);
  header.u64(s.frontier());
  header.u32(s.applied());
  begin_section(w, kSecHeader, header);

  Writer gens;
  for (letter_type a = 0; a < r; ++a) {
    write_element(gens, s.generator(a));
  }
  begin_section(w, kSecGens, gens);

  Writer meta;
  for (element_index_type i = 0; i < n; ++i) {
    auto const& m = s.meta(i);
    meta.u32(m.first);
    meta.u32(m.last);
    meta.u32(m.prefix);
    meta.u32(m.suffix);
    meta.u32(m.length);
  }
  begin_section(w, kSecMeta, meta);

  Writer right;
  for (element_index_type i = 0; i < n; ++i) {
    for (letter_type a = 0; a < r; ++a) {
      right.u32(s.right(i, a));
    }
  }
  begin_section(w, kSecRight, right);

  Writer left;
  for (element_index_type i = 0; i < n; ++i) {
    for (letter_type a = 0; a < r; ++a) {
      left.u32(s.left(i, a));
    }
  }
  begin_section(w, kSecLeft, left);

  Writer rules;
  rules.u64(s.rules().size());
  for (auto const& rule : s.rules()) {
    rules.u32(rule.lhs);
    rules.u32(rule.letter);
    rules.u32(rule.rhs);
  }
  begin_section(w, kSecRules, rules);

  Writer counters;
  counters.u64(s.products());
  begin_section(w, kSecCounters, counters);

  w.u64(fnv1a64(w.buf.substr(0, w.buf.size())));
  out.write(w.buf.data(), static_cast<std::streamsize>(w.buf.size()));
  if (!out) {
    throw InputError("failed to write snapshot");
  }
}

void save_snapshot_file(Snapshot const& s, std::string const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot open " + path + " for writing");
  }
  save_snapshot(s, out);
}

Snapshot load_snapshot(std::istream& in) {
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (bytes.size() < sizeof(kMagic) + 8) {
    throw InputError("snapshot file truncated");
  }
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw InputError("not a snapshot file (bad magic)");
  }
  std::string const body = bytes.substr(0, bytes.size() - 8);
  {
    Reader tail{bytes, bytes.size() - 8};
    if (tail.u64() != fnv1a64(body)) {
      throw InputError("snapshot checksum mismatch");
    }
  }
  Reader rd{body, sizeof(kMagic)};

  auto header = expect_section(rd, kSecHeader);
  if (auto v = header.u32(); v != kVersion) {
    throw InputError("unsupported snapshot format version "
                     + std::to_string(v));
  }
  auto const kind_byte = header.u8();
  if (kind_byte > 1) {
    throw InputError("unknown element kind in snapshot header");
  }
  auto const kind = static_cast<ElementKind>(kind_byte);
  auto const size = header.u32();
  auto const r    = header.u32();
  auto const n    = header.u64();
  auto const frontier = header.u64();
  auto const applied  = header.u32();
  if (r == 0 || n < r || size == 0 || frontier > n || applied > r
      || n >= UNDEFINED) {
    throw InputError("snapshot header out of range");
  }

  auto gens_section = expect_section(rd, kSecGens);
  std::vector<Element> gens;
  gens.reserve(r);
  for (std::uint32_t a = 0; a < r; ++a) {
    gens.push_back(read_element(gens_section, kind, size));
  }

  Snapshot s;
  try {
    s = Snapshot::minimal(std::move(gens));
  } catch (UsageError const& e) {
    throw InputError(std::string("corrupt generator section: ") + e.what());
  }

  auto meta_section = expect_section(rd, kSecMeta);
  std::vector<ElementMeta> metas;
  metas.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    ElementMeta m{};
    m.first  = meta_section.u32();
    m.last   = meta_section.u32();
    m.prefix = meta_section.u32();
    m.suffix = meta_section.u32();
    m.length = meta_section.u32();
    if (i < r) {
      if (m.first != i || m.last != i || m.length != 1
          || m.prefix != UNDEFINED || m.suffix != UNDEFINED) {
        throw InputError("snapshot meta disagrees with generator section");
      }
    } else {
      if (m.first >= r || m.last >= r || m.prefix >= i || m.suffix >= i) {
        throw InputError("snapshot meta links out of range");
      }
    }
    metas.push_back(m);
  }

  // Rebuild non-generator element values from the prefix links; these raw
  // multiplications are reconstruction, not enumeration, so the product
  // counter is untouched.
  for (std::uint64_t i = r; i < n; ++i) {
    auto const& m = metas[i];
    s.append_element(multiply(s.element(m.prefix), s.generator(m.last)),
                     m);
  }

  auto right_section = expect_section(rd, kSecRight);
  for (element_index_type i = 0; i < n; ++i) {
    for (letter_type a = 0; a < r; ++a) {
      auto const v = right_section.u32();
      if (v != UNDEFINED && v >= n) {
        throw InputError("right table target out of range");
      }
      s.set_right(i, a, v);
    }
  }

  auto left_section = expect_section(rd, kSecLeft);
  for (element_index_type i = 0; i < n; ++i) {
    for (letter_type a = 0; a < r; ++a) {
      auto const v = left_section.u32();
      if (v != UNDEFINED && v >= n) {
        throw InputError("left table target out of range");
      }
      s.set_left(i, a, v);
    }
  }

  auto rules_section = expect_section(rd, kSecRules);
  auto const n_rules = rules_section.u64();
  for (std::uint64_t i = 0; i < n_rules; ++i) {
    auto const lhs    = rules_section.u32();
    auto const letter = rules_section.u32();
    auto const rhs    = rules_section.u32();
    if (lhs >= n || rhs >= n || letter >= r) {
      throw InputError("rule indices out of range");
    }
    s.add_rule(lhs, letter, rhs);
  }

  auto counters = expect_section(rd, kSecCounters);
  s.add_products(counters.u64());

  s.force_frontier(static_cast<element_index_type>(frontier));
  s.set_applied(applied);
  return s;
}

Snapshot load_snapshot_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open snapshot file " + path);
  }
  return load_snapshot(in);
}

}  // namespace cayley
