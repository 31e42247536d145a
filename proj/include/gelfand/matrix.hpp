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
#include <map>
#include <utility>
#include <vector>

#include "gelfand/error.hpp"

namespace gelfand {

// Square sparse matrix, rows stored as column-sorted (col, value) lists.
template <class S>
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<int, S>>;

  SparseMatrix() = default;
  explicit SparseMatrix(int n) : n_(n), rows_(n) {}

  static SparseMatrix identity(int n) {
    SparseMatrix m(n);
    for (int i = 0; i < n; ++i) m.rows_[i].emplace_back(i, S(1));
    return m;
  }

  int size() const { return n_; }
  const Row& row(int i) const { return rows_[i]; }

  S at(int i, int j) const {
    for (const auto& [c, v] : rows_[i])
      if (c == j) return v;
    return S(0);
  }

  // accumulate v into (i, j)
  void add(int i, int j, const S& v) {
    if (v == S(0)) return;
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const std::pair<int, S>& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      it->second += v;
      if (it->second == S(0)) r.erase(it);
    } else {
      r.insert(it, {j, v});
    }
  }

  size_t nonzeros() const {
    size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  S trace() const {
    S t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  // no column holds more than one nonzero
  bool is_column_monomial() const {
    std::vector<char> hit(n_, 0);
    for (const auto& r : rows_)
      for (const auto& e : r) {
        if (hit[e.first]) return false;
        hit[e.first] = 1;
      }
    return true;
  }

  template <class F>
  auto map(F f) const {
    using T = decltype(f(std::declval<S>()));
    SparseMatrix<T> out(n_);
    for (int i = 0; i < n_; ++i)
      for (const auto& [c, v] : rows_[i]) out.add(i, c, f(v));
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.n_ != b.n_) throw DimensionError("matrix size mismatch");
    SparseMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      std::map<int, S> acc;
      for (const auto& [l, x] : a.rows_[i])
        for (const auto& [j, y] : b.rows_[l]) acc[j] += x * y;
      for (auto& [j, v] : acc)
        if (!(v == S(0))) out.rows_[i].emplace_back(j, std::move(v));
    }
    return out;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
    if (a.n_ != b.n_) throw DimensionError("matrix size mismatch");
    for (int i = 0; i < a.n_; ++i)
      for (const auto& [j, v] : b.rows_[i]) a.add(i, j, v);
    return a;
  }

  SparseMatrix scaled(const S& c) const {
    SparseMatrix out(n_);
    if (c == S(0)) return out;
    for (int i = 0; i < n_; ++i)
      for (const auto& [j, v] : rows_[i]) out.rows_[i].emplace_back(j, v * c);
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Row> rows_;
};

}  // namespace gelfand
