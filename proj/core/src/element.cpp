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

#include "cayley/element.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cayley {

namespace {

// splitmix64 finaliser; fixed constants keep digests stable across runs.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Transformation::Transformation(std::vector<std::uint32_t> images)
    : _images(std::move(images)) {
  if (_images.empty()) {
    throw UsageError("transformation degree must be positive");
  }
  for (auto v : _images) {
    if (v >= _images.size()) {
      throw UsageError("transformation image value " + std::to_string(v)
                       + " out of range [0, " + std::to_string(_images.size())
                       + ")");
    }
  }
}

Transformation Transformation::operator*(Transformation const& that) const {
  std::vector<std::uint32_t> out(_images.size());
  for (std::size_t pt = 0; pt < _images.size(); ++pt) {
    out[pt] = that._images[_images[pt]];
  }
  return Transformation(std::move(out));
}

Transformation Transformation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> out(degree);
  for (std::uint32_t pt = 0; pt < degree; ++pt) {
    out[pt] = pt;
  }
  return Transformation(std::move(out));
}

BooleanMatrix::BooleanMatrix(
    std::vector<std::vector<std::uint32_t>> const& rows)
    : _dim(static_cast<std::uint32_t>(rows.size())) {
  if (rows.empty()) {
    throw UsageError("boolean matrix dimension must be positive");
  }
  std::uint32_t const wpr = (_dim + 63) / 64;
  _bits.assign(static_cast<std::size_t>(_dim) * wpr, 0);
  for (std::uint32_t r = 0; r < _dim; ++r) {
    if (rows[r].size() != _dim) {
      throw UsageError("boolean matrix row " + std::to_string(r)
                       + " has length " + std::to_string(rows[r].size())
                       + ", expected " + std::to_string(_dim));
    }
    for (std::uint32_t c = 0; c < _dim; ++c) {
      if (rows[r][c] > 1) {
        throw UsageError("boolean matrix entries must be 0 or 1");
      }
      if (rows[r][c] != 0) {
        _bits[static_cast<std::size_t>(r) * wpr + c / 64]
            |= std::uint64_t(1) << (c % 64);
      }
    }
  }
}

BooleanMatrix::BooleanMatrix(std::uint32_t dim, std::vector<std::uint64_t> bits)
    : _dim(dim), _bits(std::move(bits)) {
  if (_dim == 0) {
    throw UsageError("boolean matrix dimension must be positive");
  }
  if (_bits.size() != static_cast<std::size_t>(_dim) * words_per_row()) {
    throw UsageError("boolean matrix bit payload has the wrong length");
  }
}

bool BooleanMatrix::at(std::uint32_t r, std::uint32_t c) const {
  return (_bits[static_cast<std::size_t>(r) * words_per_row() + c / 64]
          >> (c % 64))
         & 1;
}

BooleanMatrix BooleanMatrix::operator*(BooleanMatrix const& that) const {
  std::uint32_t const        wpr = words_per_row();
  std::vector<std::uint64_t> out(_bits.size(), 0);
  for (std::uint32_t r = 0; r < _dim; ++r) {
    std::uint64_t const* xrow = _bits.data() + static_cast<std::size_t>(r) * wpr;
    std::uint64_t* orow = out.data() + static_cast<std::size_t>(r) * wpr;
    for (std::uint32_t k = 0; k < _dim; ++k) {
      // branchless word-wide AND with an all-ones/all-zeros mask, OR-reduced
      auto const mask
          = -static_cast<std::uint64_t>((xrow[k / 64] >> (k % 64)) & 1);
      std::uint64_t const* yrow
          = that._bits.data() + static_cast<std::size_t>(k) * wpr;
      for (std::uint32_t w = 0; w < wpr; ++w) {
        orow[w] |= mask & yrow[w];
      }
    }
  }
  return BooleanMatrix(_dim, std::move(out));
}

BooleanMatrix BooleanMatrix::identity(std::uint32_t dim) {
  std::uint32_t const        wpr = (dim + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(dim) * wpr, 0);
  for (std::uint32_t r = 0; r < dim; ++r) {
    bits[static_cast<std::size_t>(r) * wpr + r / 64] |= std::uint64_t(1)
                                                        << (r % 64);
  }
  return BooleanMatrix(dim, std::move(bits));
}

std::uint32_t Element::size() const noexcept {
  return kind() == ElementKind::transformation ? transformation().degree()
                                               : boolean_matrix().dim();
}

std::string Element::to_string() const {
  std::ostringstream os;
  if (kind() == ElementKind::transformation) {
    os << "[";
    auto const& im = transformation().images();
    for (std::size_t i = 0; i < im.size(); ++i) {
      os << (i == 0 ? "" : ", ") << im[i];
    }
    os << "]";
  } else {
    auto const& m = boolean_matrix();
    os << "[";
    for (std::uint32_t r = 0; r < m.dim(); ++r) {
      os << (r == 0 ? "[" : ", [");
      for (std::uint32_t c = 0; c < m.dim(); ++c) {
        os << (c == 0 ? "" : ", ") << (m.at(r, c) ? 1 : 0);
      }
      os << "]";
    }
    os << "]";
  }
  return os.str();
}

void require_compatible(Element const& x, Element const& y) {
  if (x.kind() != y.kind()) {
    throw UsageError("cannot multiply elements of different kinds");
  }
  if (x.size() != y.size()) {
    throw UsageError("cannot multiply elements of sizes "
                     + std::to_string(x.size()) + " and "
                     + std::to_string(y.size()));
  }
}

Element multiply(Element const& x, Element const& y) {
  require_compatible(x, y);
  if (x.kind() == ElementKind::transformation) {
    return Element(x.transformation() * y.transformation());
  }
  return Element(x.boolean_matrix() * y.boolean_matrix());
}

std::uint64_t digest(Element const& x, std::uint64_t seed) {
  std::uint64_t h = mix64(seed ^ (static_cast<std::uint64_t>(x.kind()) + 1));
  h = mix64(h ^ x.size());
  if (x.kind() == ElementKind::transformation) {
    for (auto v : x.transformation().images()) {
      h = mix64(h ^ v);
    }
  } else {
    for (auto w : x.boolean_matrix().bits()) {
      h = mix64(h ^ w);
    }
  }
  return h;
}

namespace {

std::vector<Element> parse_generators_json(nlohmann::json const& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc.contains("gens")) {
    throw InputError("generator document must be an object with \"type\" and "
                     "\"gens\" fields");
  }
  std::string const type = doc.at("type").get<std::string>();
  bool const is_transf = (type == "transformation");
  if (!is_transf && type != "bmat") {
    throw InputError("unknown generator type \"" + type + "\"");
  }
  char const* size_key = is_transf ? "degree" : "dim";
  if (!doc.contains(size_key) || !doc.at(size_key).is_number_unsigned()
      || doc.at(size_key).get<std::uint64_t>() == 0) {
    throw InputError(std::string("\"") + size_key
                     + "\" must be a positive integer");
  }
  auto const n = doc.at(size_key).get<std::uint32_t>();
  if (!doc.at("gens").is_array() || doc.at("gens").empty()) {
    throw InputError("\"gens\" must be a non-empty array");
  }

  std::vector<Element> out;
  out.reserve(doc.at("gens").size());
  for (auto const& g : doc.at("gens")) {
    try {
      if (is_transf) {
        auto images = g.get<std::vector<std::uint32_t>>();
        if (images.size() != n) {
          throw InputError("generator has degree "
                           + std::to_string(images.size()) + ", expected "
                           + std::to_string(n));
        }
        out.emplace_back(Transformation(std::move(images)));
      } else {
        auto rows = g.get<std::vector<std::vector<std::uint32_t>>>();
        if (rows.size() != n) {
          throw InputError("generator has dim " + std::to_string(rows.size())
                           + ", expected " + std::to_string(n));
        }
        out.emplace_back(BooleanMatrix(rows));
      }
    } catch (UsageError const& e) {
      throw InputError(std::string("invalid generator: ") + e.what());
    } catch (nlohmann::json::exception const& e) {
      throw InputError(std::string("invalid generator encoding: ") + e.what());
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (out[i] == out[j]) {
        throw InputError("duplicate generator at index " + std::to_string(i)
                         + " (equal to index " + std::to_string(j) + ")");
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Element> parse_generators(std::string const& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (nlohmann::json::exception const& e) {
    throw InputError(std::string("malformed generator document: ") + e.what());
  }
  return parse_generators_json(doc);
}

std::vector<Element> load_generators(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open generator file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generators(buf.str());
}

}  // namespace cayley
