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

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "gelfand/diagram.hpp"
#include "gelfand/error.hpp"

namespace gelfand {

enum class Family {
  Partition,
  PlanarPartition,
  SymmetricGroup,
  Brauer,
  RookMonoid,
  RookBrauer,
  TemperleyLieb,
  Motzkin,
  PlanarRook,
};

inline constexpr std::array<Family, 9> kAllFamilies = {
    Family::Partition,  Family::PlanarPartition, Family::SymmetricGroup,
    Family::Brauer,     Family::RookMonoid,      Family::RookBrauer,
    Family::TemperleyLieb, Family::Motzkin,      Family::PlanarRook};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Partition: return "partition";
    case Family::PlanarPartition: return "planar-partition";
    case Family::SymmetricGroup: return "symmetric-group";
    case Family::Brauer: return "brauer";
    case Family::RookMonoid: return "rook";
    case Family::RookBrauer: return "rook-brauer";
    case Family::TemperleyLieb: return "tl";
    case Family::Motzkin: return "motzkin";
    case Family::PlanarRook: return "planar-rook";
  }
  return "?";
}

inline Family parse_family(std::string s) {
  for (auto& c : s) {
    c = char(std::tolower(static_cast<unsigned char>(c)));
    if (c == '_') c = '-';
  }
  struct Alias {
    const char* name;
    Family fam;
  };
  static const Alias aliases[] = {
      {"partition", Family::Partition},       {"p", Family::Partition},
      {"planar-partition", Family::PlanarPartition}, {"planarpartition", Family::PlanarPartition},
      {"pp", Family::PlanarPartition},        {"symmetric-group", Family::SymmetricGroup},
      {"symmetricgroup", Family::SymmetricGroup}, {"s", Family::SymmetricGroup},
      {"sym", Family::SymmetricGroup},        {"brauer", Family::Brauer},
      {"b", Family::Brauer},                  {"rook", Family::RookMonoid},
      {"rookmonoid", Family::RookMonoid},     {"rook-monoid", Family::RookMonoid},
      {"r", Family::RookMonoid},              {"rook-brauer", Family::RookBrauer},
      {"rookbrauer", Family::RookBrauer},     {"rb", Family::RookBrauer},
      {"tl", Family::TemperleyLieb},          {"temperley-lieb", Family::TemperleyLieb},
      {"temperleylieb", Family::TemperleyLieb}, {"motzkin", Family::Motzkin},
      {"m", Family::Motzkin},                 {"planar-rook", Family::PlanarRook},
      {"planarrook", Family::PlanarRook},     {"pr", Family::PlanarRook},
  };
  for (const auto& a : aliases)
    if (s == a.name) return a.fam;
  throw ValidationError("unknown family '" + s + "'");
}

inline bool is_planar_family(Family f) {
  return f == Family::PlanarPartition || f == Family::TemperleyLieb || f == Family::Motzkin ||
         f == Family::PlanarRook;
}

// The rook monoid algebras specialise x = 1.
inline bool parameter_is_one(Family f) {
  return f == Family::RookMonoid || f == Family::PlanarRook;
}

// Noncrossing in the boundary order 1..k, k'..1'.
inline bool is_planar(const Diagram& d) {
  const int k = d.k(), n = 2 * k;
  if (n == 0) return true;
  // boundary position p -> encoded vertex
  auto vertex_at = [k](int p) { return p < k ? p + 1 : k + (2 * k - p); };
  std::vector<int> last(d.num_blocks(), -1);
  for (int p = 0; p < n; ++p) last[d.label(vertex_at(p))] = p;
  std::vector<char> open(d.num_blocks(), 0);
  std::vector<int> stack;
  for (int p = 0; p < n; ++p) {
    int b = d.label(vertex_at(p));
    if (open[b]) {
      if (stack.back() != b) return false;
      if (last[b] == p) {
        stack.pop_back();
        open[b] = 0;
      }
    } else if (last[b] != p) {
      // first visit of a block with more to come
      open[b] = 1;
      stack.push_back(b);
    }
  }
  return true;
}

namespace detail {

struct BlockShape {
  int tops = 0, bottoms = 0;
};

inline std::vector<BlockShape> block_shapes(const Diagram& d) {
  std::vector<BlockShape> s(d.num_blocks());
  for (int i = 1; i <= d.k(); ++i) {
    s[d.label(i)].tops++;
    s[d.label(d.k() + i)].bottoms++;
  }
  return s;
}

}  // namespace detail

inline bool in_family(const Diagram& d, Family fam) {
  if (d.k() == 0) return true;
  auto shapes = detail::block_shapes(d);
  auto all = [&](auto pred) {
    for (const auto& s : shapes)
      if (!pred(s)) return false;
    return true;
  };
  auto brauer = [](const detail::BlockShape& s) { return s.tops + s.bottoms == 2; };
  auto rook = [](const detail::BlockShape& s) { return s.tops <= 1 && s.bottoms <= 1; };
  auto rook_brauer = [](const detail::BlockShape& s) {
    return s.tops + s.bottoms == 1 || s.tops + s.bottoms == 2;
  };
  switch (fam) {
    case Family::Partition: return true;
    case Family::PlanarPartition: return is_planar(d);
    case Family::SymmetricGroup: return rank(d) == d.k();
    case Family::Brauer: return all(brauer);
    case Family::RookMonoid: return all(rook);
    case Family::RookBrauer: return all(rook_brauer);
    case Family::TemperleyLieb: return all(brauer) && is_planar(d);
    case Family::Motzkin: return all(rook_brauer) && is_planar(d);
    case Family::PlanarRook: return all(rook) && is_planar(d);
  }
  return false;
}

// Shape (a): singletons in the last column.  Shape (b): horizontal pairs on the last two.
inline bool uses_pair_idempotent(Family fam) {
  return fam == Family::Brauer || fam == Family::TemperleyLieb;
}

inline bool has_idempotent(Family fam) { return fam != Family::SymmetricGroup; }

// k - k' for the subalgebra A_k' sitting inside e_k A_k e_k
inline int derived_shift(Family fam) { return uses_pair_idempotent(fam) ? 2 : 1; }

inline Diagram e_k(Family fam, int k) {
  if (!has_idempotent(fam)) throw ValidationError("the symmetric group algebra has no e_k");
  if (uses_pair_idempotent(fam)) {
    if (k < 2) throw ValidationError("pair-shaped e_k needs k >= 2");
    std::vector<std::vector<int>> bl;
    for (int i = 1; i <= k - 2; ++i) bl.push_back({i, k + i});
    bl.push_back({k - 1, k});
    bl.push_back({2 * k - 1, 2 * k});
    return canonicalize(k, bl);
  }
  if (k < 1) throw ValidationError("e_k needs k >= 1");
  std::vector<std::vector<int>> bl;
  for (int i = 1; i <= k - 1; ++i) bl.push_back({i, k + i});
  bl.push_back({k});
  bl.push_back({2 * k});
  return canonicalize(k, bl);
}

}  // namespace gelfand
