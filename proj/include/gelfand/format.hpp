// Copyright 2026 The gelfand Authors
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

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "gelfand/diagram.hpp"
#include "gelfand/error.hpp"

namespace gelfand {

// "1 -2 | 2 -1": bottom vertices negative, blocks and vertices in encoding order.
inline std::string to_text(const Diagram& d) {
  std::string out;
  for (const auto& b : d.blocks()) {
    if (!out.empty()) out += " | ";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(Vertex::decode(d.k(), b[i]).signed_value());
    }
  }
  return out;
}

inline std::vector<std::vector<int>> signed_blocks(const Diagram& d) {
  std::vector<std::vector<int>> out;
  for (const auto& b : d.blocks()) {
    out.emplace_back();
    for (int v : b) out.back().push_back(Vertex::decode(d.k(), v).signed_value());
  }
  return out;
}

inline Diagram from_signed_blocks(int k, const std::vector<std::vector<int>>& sb) {
  std::vector<std::vector<int>> enc;
  for (const auto& b : sb) {
    enc.emplace_back();
    for (int v : b) {
      if (v == 0 || std::abs(v) > k)
        throw ValidationError("vertex " + std::to_string(v) + " out of range for k=" + std::to_string(k));
      enc.back().push_back(v > 0 ? v : k - v);
    }
  }
  return canonicalize(k, enc);
}

namespace detail {

inline std::vector<std::vector<int>> parse_signed_blocks(const std::string& text) {
  std::vector<std::vector<int>> blocks(1);
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("diagram syntax error at position " + std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '|') {
      if (blocks.back().empty()) fail("empty block");
      blocks.emplace_back();
      ++i;
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i + (c == '-' || c == '+');
      size_t start = j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == start) fail("expected digits");
      if (j - start > 6) fail("vertex too large");
      int v = std::stoi(text.substr(start, j - start));
      blocks.back().push_back(c == '-' ? -v : v);
      i = j;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (blocks.back().empty()) {
    if (blocks.size() > 1) fail("empty block");
    blocks.clear();
  }
  return blocks;
}

}  // namespace detail

inline Diagram parse_diagram(const std::string& text, int k) {
  return from_signed_blocks(k, detail::parse_signed_blocks(text));
}

// k read off as the largest vertex magnitude
inline Diagram parse_diagram(const std::string& text) {
  auto sb = detail::parse_signed_blocks(text);
  int k = 0;
  for (const auto& b : sb)
    for (int v : b) k = std::max(k, std::abs(v));
  return from_signed_blocks(k, sb);
}

}  // namespace gelfand
