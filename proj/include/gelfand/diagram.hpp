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
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/error.hpp"

namespace gelfand {

// Vertices are encoded as integers: top i -> i, bottom i' -> k + i.
struct Vertex {
  int index;
  bool bottom;

  int encode(int k) const { return bottom ? k + index : index; }
  static Vertex decode(int k, int v) { return v > k ? Vertex{v - k, true} : Vertex{v, false}; }
  // text form: bottom vertices are negative
  int signed_value() const { return bottom ? -index : index; }
};

using Block = std::vector<int>;  // encoded vertices, ascending

// A set partition of the 2k vertices.  Stored as its restricted growth
// string: label_[v-1] is the index of the block of vertex v, with blocks
// numbered in order of their least vertex.  That string is canonical, so
// equality and ordering work on it directly.
class Diagram {
 public:
  static constexpr int kMaxK = 120;

  Diagram() = default;  // k = 0, the empty diagram

  // Any labelling of 1..2k; relabelled into restricted growth form.
  template <class Labels>
  static Diagram from_labels(int k, const Labels& raw) {
    if (k < 0 || k > kMaxK) throw ValidationError("k out of range: " + std::to_string(k));
    if (int(raw.size()) != 2 * k) throw ValidationError("label string has wrong length");
    Diagram d;
    d.k_ = k;
    d.label_.resize(raw.size());
    std::vector<int> seen;
    for (size_t v = 0; v < raw.size(); ++v) {
      int r = int(raw[v]);
      if (r < 0) throw ValidationError("negative label");
      if (r >= int(seen.size())) seen.resize(r + 1, -1);
      if (seen[r] < 0) seen[r] = d.nblocks_++;
      d.label_[v] = std::uint8_t(seen[r]);
    }
    return d;
  }

  int k() const { return k_; }
  int num_blocks() const { return nblocks_; }
  int label(int v) const { return label_[v - 1]; }  // v is an encoded vertex
  const std::vector<std::uint8_t>& labels() const { return label_; }

  std::vector<Block> blocks() const {
    std::vector<Block> out(nblocks_);
    for (int v = 1; v <= 2 * k_; ++v) out[label_[v - 1]].push_back(v);
    return out;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.k_ == b.k_ && a.label_ == b.label_;
  }
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
  friend bool operator<(const Diagram& a, const Diagram& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.label_ < b.label_;
  }

  size_t hash() const {
    size_t h = std::hash<int>{}(k_);
    for (auto c : label_) h = h * 1000003u ^ c;
    return h;
  }

 private:
  int k_ = 0;
  int nblocks_ = 0;
  std::vector<std::uint8_t> label_;
};

struct DiagramHash {
  size_t operator()(const Diagram& d) const { return d.hash(); }
};

inline Diagram canonicalize(int k, const std::vector<std::vector<int>>& raw_blocks) {
  if (k < 0 || k > Diagram::kMaxK) throw ValidationError("k out of range: " + std::to_string(k));
  std::vector<int> lab(2 * k, -1);
  for (size_t b = 0; b < raw_blocks.size(); ++b) {
    if (raw_blocks[b].empty()) throw ValidationError("empty block");
    for (int v : raw_blocks[b]) {
      if (v < 1 || v > 2 * k)
        throw ValidationError("vertex " + std::to_string(v) + " out of range for k=" + std::to_string(k));
      if (lab[v - 1] >= 0) throw ValidationError("vertex " + std::to_string(v) + " in two blocks");
      lab[v - 1] = int(b);
    }
  }
  for (int v = 1; v <= 2 * k; ++v)
    if (lab[v - 1] < 0) throw ValidationError("vertex " + std::to_string(v) + " missing");
  return Diagram::from_labels(k, lab);
}

inline Diagram identity(int k) {
  std::vector<int> lab(2 * k);
  for (int i = 0; i < k; ++i) lab[i] = lab[k + i] = i;
  return Diagram::from_labels(k, lab);
}

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// Glue each vertex of d onto node[v-1] of the union-find.
inline void glue(UnionFind& uf, const Diagram& d, const int* node) {
  int first[2 * Diagram::kMaxK];
  std::fill(first, first + d.num_blocks(), -1);
  for (int v = 1; v <= 2 * d.k(); ++v) {
    int b = d.label(v);
    if (first[b] < 0)
      first[b] = node[v - 1];
    else
      uf.unite(first[b], node[v - 1]);
  }
}

}  // namespace detail

struct Composite {
  Diagram diagram;
  int kappa = 0;
};

// d1 on top of d2.  kappa counts components trapped in the middle row.
inline Composite compose(const Diagram& d1, const Diagram& d2) {
  if (d1.k() != d2.k())
    throw DimensionError("compose: k mismatch " + std::to_string(d1.k()) + " vs " + std::to_string(d2.k()));
  const int k = d1.k();
  // nodes: 0..k-1 top of d1, k..2k-1 middle, 2k..3k-1 bottom of d2
  detail::UnionFind uf(3 * k);
  std::vector<int> n1(2 * k), n2(2 * k);
  for (int i = 0; i < k; ++i) {
    n1[i] = i;
    n1[k + i] = k + i;
    n2[i] = k + i;
    n2[k + i] = 2 * k + i;
  }
  detail::glue(uf, d1, n1.data());
  detail::glue(uf, d2, n2.data());

  std::vector<int> lab(2 * k);
  std::vector<char> outer(3 * k, 0);
  for (int i = 0; i < k; ++i) {
    int a = uf.find(i), b = uf.find(2 * k + i);
    lab[i] = a;
    lab[k + i] = b;
    outer[a] = outer[b] = 1;
  }
  Composite out;
  for (int i = k; i < 2 * k; ++i) {
    int r = uf.find(i);
    if (r == i && !outer[r]) ++out.kappa;  // roots are minimal nodes, count each once
  }
  out.diagram = Diagram::from_labels(k, lab);
  return out;
}

inline int mirror(int k, int v) { return v > k ? v - k : v + k; }

inline Diagram transpose(const Diagram& d) {
  const int k = d.k();
  std::vector<int> lab(2 * k);
  for (int v = 1; v <= 2 * k; ++v) lab[mirror(k, v) - 1] = d.label(v);
  return Diagram::from_labels(k, lab);
}

inline bool is_symmetric(const Diagram& d) { return transpose(d) == d; }

// per block: does it touch the top row / the bottom row
struct BlockRows {
  std::vector<char> top, bottom;
};

inline BlockRows block_rows(const Diagram& d) {
  BlockRows r{std::vector<char>(d.num_blocks(), 0), std::vector<char>(d.num_blocks(), 0)};
  for (int i = 1; i <= d.k(); ++i) {
    r.top[d.label(i)] = 1;
    r.bottom[d.label(d.k() + i)] = 1;
  }
  return r;
}

inline int rank(const Diagram& d) {
  auto r = block_rows(d);
  int n = 0;
  for (int b = 0; b < d.num_blocks(); ++b) n += r.top[b] && r.bottom[b];
  return n;
}

// Blocks with B' = B, ordered by least top vertex.
inline std::vector<Block> fixed_blocks(const Diagram& d) {
  const int k = d.k();
  std::vector<char> ok(d.num_blocks(), 1);
  for (int v = 1; v <= 2 * k; ++v)
    if (d.label(v) != d.label(mirror(k, v))) ok[d.label(v)] = 0;
  std::vector<Block> out;
  auto bl = d.blocks();
  for (int b = 0; b < d.num_blocks(); ++b)
    if (ok[b]) out.push_back(bl[b]);
  return out;  // a fixed block's least vertex is a top vertex, so block order is the right order
}

inline int num_fixed_blocks(const Diagram& d) { return int(fixed_blocks(d).size()); }

// Restricted growth strings of the top row (tau) and bottom row (beta) partitions.
inline std::vector<int> top_partition(const Diagram& d) {
  std::vector<int> out(d.k());
  std::vector<int> seen(d.num_blocks(), -1);
  int n = 0;
  for (int i = 1; i <= d.k(); ++i) {
    int b = d.label(i);
    if (seen[b] < 0) seen[b] = n++;
    out[i - 1] = seen[b];
  }
  return out;
}

inline std::vector<int> bottom_partition(const Diagram& d) {
  std::vector<int> out(d.k());
  std::vector<int> seen(d.num_blocks(), -1);
  int n = 0;
  for (int i = 1; i <= d.k(); ++i) {
    int b = d.label(d.k() + i);
    if (seen[b] < 0) seen[b] = n++;
    out[i - 1] = seen[b];
  }
  return out;
}

// Same blocks on k + extra columns, with identity strands appended on the right.
inline Diagram embed(const Diagram& d, int extra) {
  const int k = d.k(), n = k + extra;
  std::vector<int> lab(2 * n);
  for (int i = 1; i <= k; ++i) {
    lab[i - 1] = d.label(i);
    lab[n + i - 1] = d.label(k + i);
  }
  for (int j = 0; j < extra; ++j) lab[k + j] = lab[n + k + j] = d.num_blocks() + j;
  return Diagram::from_labels(n, lab);
}

}  // namespace gelfand

template <>
struct std::hash<gelfand::Diagram> {
  size_t operator()(const gelfand::Diagram& d) const { return d.hash(); }
};
