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
#include <numeric>
#include <utility>
#include <vector>

#include "gelfand/diagram.hpp"
#include "gelfand/family.hpp"

namespace gelfand {

namespace detail {

// every restricted growth string of length n
template <class Fn>
void for_each_rgs(int n, std::vector<int>& a, int pos, int maxl, Fn& fn) {
  if (pos == n) {
    fn(a);
    return;
  }
  for (int l = 0; l <= maxl + 1; ++l) {
    a[pos] = l;
    for_each_rgs(n, a, pos + 1, std::max(maxl, l), fn);
  }
}

// Matchings on vertices 1..2k in encoding order; singletons optional.
template <class Fn>
void for_each_matching(int k, bool singletons, std::vector<int>& lab, int next, Fn& fn) {
  int v = 0;
  while (v < 2 * k && lab[v] >= 0) ++v;
  if (v == 2 * k) {
    fn(Diagram::from_labels(k, lab));
    return;
  }
  lab[v] = next;
  if (singletons) for_each_matching(k, singletons, lab, next + 1, fn);
  for (int w = v + 1; w < 2 * k; ++w) {
    if (lab[w] >= 0) continue;
    lab[w] = next;
    for_each_matching(k, singletons, lab, next + 1, fn);
    lab[w] = -1;
  }
  lab[v] = -1;
}

// Noncrossing matchings along the boundary 1..k, k'..1'.
struct PlanarMatchingGen {
  int k;
  bool singletons;
  bool through_only;  // pairs must join the two rows (planar rook)
  std::vector<int> lab;
  std::vector<std::pair<int, int>> pending;  // boundary intervals [lo, hi)
  int next = 0;

  int vertex_at(int p) const { return p < k ? p + 1 : k + (2 * k - p); }

  template <class Fn>
  void run(Fn& fn) {
    if (pending.empty()) {
      fn(Diagram::from_labels(k, lab));
      return;
    }
    auto [lo, hi] = pending.back();
    pending.pop_back();
    if (lo >= hi) {
      run(fn);
      pending.emplace_back(lo, hi);
      return;
    }
    int v = vertex_at(lo);
    lab[v - 1] = next++;
    if (singletons) {
      pending.emplace_back(lo + 1, hi);
      run(fn);
      pending.pop_back();
    }
    for (int q = lo + 1; q < hi; ++q) {
      if (!singletons && (q - lo) % 2 == 0) continue;  // odd interior can't be perfectly matched
      if (through_only && !(lo < k && q >= k)) continue;
      int w = vertex_at(q);
      lab[w - 1] = lab[v - 1];
      pending.emplace_back(q + 1, hi);
      pending.emplace_back(lo + 1, q);
      run(fn);
      pending.pop_back();
      pending.pop_back();
      lab[w - 1] = -1;
    }
    --next;
    lab[v - 1] = -1;
    pending.emplace_back(lo, hi);
  }
};

template <class Fn>
void for_each_partial_injection(int k, int i, std::vector<int>& img, std::vector<char>& used, Fn& fn) {
  if (i == k) {
    // top i -> label i; bottom j joins its preimage, else gets a fresh label
    std::vector<int> lab(2 * k);
    for (int t = 0; t < k; ++t) lab[t] = t;
    for (int j = 0; j < k; ++j) lab[k + j] = k + j;
    for (int t = 0; t < k; ++t)
      if (img[t] >= 0) lab[k + img[t]] = t;
    fn(Diagram::from_labels(k, lab));
    return;
  }
  img[i] = -1;
  for_each_partial_injection(k, i + 1, img, used, fn);
  for (int j = 0; j < k; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    img[i] = j;
    for_each_partial_injection(k, i + 1, img, used, fn);
    used[j] = 0;
  }
  img[i] = -1;
}

}  // namespace detail

// Diagram of a permutation given as images w(1..k): blocks {w(i), i'}.
inline Diagram permutation_diagram(const std::vector<int>& images) {
  const int k = int(images.size());
  std::vector<int> lab(2 * k);
  for (int i = 0; i < k; ++i) {
    lab[images[i] - 1] = i;
    lab[k + i] = i;
  }
  return Diagram::from_labels(k, lab);
}

// Calls fn(const Diagram&) once per diagram of the family, in no particular order.
template <class Fn>
void for_each_diagram(Family fam, int k, Fn&& fn) {
  switch (fam) {
    case Family::Partition:
    case Family::PlanarPartition: {
      std::vector<int> a(2 * k, 0);
      auto emit = [&](const std::vector<int>& rgs) {
        Diagram d = Diagram::from_labels(k, rgs);
        if (fam == Family::Partition || is_planar(d)) fn(d);
      };
      if (k == 0) {
        emit(a);
        return;
      }
      detail::for_each_rgs(2 * k, a, 1, 0, emit);
      return;
    }
    case Family::Brauer:
    case Family::RookBrauer: {
      std::vector<int> lab(2 * k, -1);
      detail::for_each_matching(k, fam == Family::RookBrauer, lab, 0, fn);
      return;
    }
    case Family::TemperleyLieb:
    case Family::Motzkin:
    case Family::PlanarRook: {
      detail::PlanarMatchingGen g{k, fam != Family::TemperleyLieb, fam == Family::PlanarRook,
                                  std::vector<int>(2 * k, -1), {{0, 2 * k}}};
      g.run(fn);
      return;
    }
    case Family::RookMonoid: {
      std::vector<int> img(k, -1);
      std::vector<char> used(k, 0);
      detail::for_each_partial_injection(k, 0, img, used, fn);
      return;
    }
    case Family::SymmetricGroup: {
      std::vector<int> w(k);
      std::iota(w.begin(), w.end(), 1);
      do {
        fn(permutation_diagram(w));
      } while (std::next_permutation(w.begin(), w.end()));
      return;
    }
  }
}

// All diagrams of the family, sorted by canonical encoding.
inline std::vector<Diagram> enumerate(Family fam, int k) {
  std::vector<Diagram> out;
  for_each_diagram(fam, k, [&](const Diagram& d) { out.push_back(d); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline int max_top_block(Family fam, int k) {
  switch (fam) {
    case Family::Partition:
    case Family::PlanarPartition: return std::max(k, 1);
    case Family::Brauer:
    case Family::TemperleyLieb:
    case Family::RookBrauer:
    case Family::Motzkin: return 2;
    default: return 1;
  }
}

// Which roles a top-row block of the given size may play in a symmetric diagram.
inline bool may_propagate(Family fam, int size) {
  switch (fam) {
    case Family::Brauer:
    case Family::TemperleyLieb:
    case Family::RookBrauer:
    case Family::Motzkin: return size == 1;
    default: return true;
  }
}

inline bool may_stay(Family fam, int size) {
  switch (fam) {
    case Family::SymmetricGroup: return false;
    case Family::Brauer:
    case Family::TemperleyLieb: return size == 2;
    default: return true;
  }
}

struct SymmetricGen {
  Family fam;
  int k;
  std::vector<std::vector<int>> tblocks;  // top-row partition, columns 1..k
  std::vector<int> prop;                  // indices into tblocks that propagate
  std::vector<int> partner;               // involution on prop, -1 unset

  template <class Fn>
  void emit(Fn& fn) {
    std::vector<int> lab(2 * k, -1);
    int next = 0;
    std::vector<char> is_prop(tblocks.size(), 0);
    for (int b : prop) is_prop[b] = 1;
    for (size_t b = 0; b < tblocks.size(); ++b) {
      if (is_prop[b]) continue;
      int top = next++, bot = next++;
      for (int i : tblocks[b]) {
        lab[i - 1] = top;
        lab[k + i - 1] = bot;
      }
    }
    for (size_t a = 0; a < prop.size(); ++a) {
      // block T with partner U: T u U' ; fixed when U = T
      const auto& T = tblocks[prop[a]];
      const auto& U = tblocks[prop[partner[a]]];
      int l = next++;
      for (int i : T) lab[i - 1] = l;
      for (int i : U) lab[k + i - 1] = l;
    }
    Diagram d = Diagram::from_labels(k, lab);
    if (in_family(d, fam)) fn(d);
  }

  template <class Fn>
  void pair_up(size_t a, Fn& fn) {
    while (a < prop.size() && partner[a] >= 0) ++a;
    if (a == prop.size()) {
      emit(fn);
      return;
    }
    partner[a] = int(a);
    pair_up(a + 1, fn);
    for (size_t c = a + 1; c < prop.size(); ++c) {
      if (partner[c] >= 0) continue;
      partner[a] = int(c);
      partner[c] = int(a);
      pair_up(a + 1, fn);
      partner[c] = -1;
    }
    partner[a] = -1;
  }

  template <class Fn>
  void choose(size_t b, Fn& fn) {
    if (b == tblocks.size()) {
      partner.assign(prop.size(), -1);
      pair_up(0, fn);
      return;
    }
    int sz = int(tblocks[b].size());
    if (may_stay(fam, sz)) choose(b + 1, fn);
    if (may_propagate(fam, sz)) {
      prop.push_back(int(b));
      choose(b + 1, fn);
      prop.pop_back();
    }
  }

  // set partitions of 1..k with block size bounded
  template <class Fn>
  void split(int i, int maxsz, Fn& fn) {
    if (i > k) {
      choose(0, fn);
      return;
    }
    for (size_t b = 0; b < tblocks.size(); ++b) {
      if (int(tblocks[b].size()) >= maxsz) continue;
      tblocks[b].push_back(i);
      split(i + 1, maxsz, fn);
      tblocks[b].pop_back();  // index, not reference: the recursion may reallocate
    }
    tblocks.push_back({i});
    split(i + 1, maxsz, fn);
    tblocks.pop_back();
  }
};

}  // namespace detail

// Every symmetric diagram (d^T = d) of the family, in no particular order.
template <class Fn>
void for_each_symmetric(Family fam, int k, Fn&& fn) {
  detail::SymmetricGen g{fam, k, {}, {}, {}};
  g.split(1, detail::max_top_block(fam, k), fn);
}

}  // namespace gelfand
