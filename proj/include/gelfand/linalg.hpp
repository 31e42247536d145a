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

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gelfand/error.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

// Incremental row echelon form over Q.  Rows are fed one at a time and
// reduced against the stored pivots; only the rank is needed.
class EchelonBuilder {
 public:
  using Row = std::vector<std::pair<size_t, Rational>>;

  explicit EchelonBuilder(size_t unknowns) : n_(unknowns) {}

  size_t unknowns() const { return n_; }
  size_t rank() const { return pivots_.size(); }
  size_t nullity() const { return n_ - pivots_.size(); }
  bool full() const { return pivots_.size() == n_; }

  // true if the row was independent of what came before
  bool add(const Row& row) {
    std::map<size_t, Rational> acc;
    for (const auto& [c, v] : row) {
      if (c >= n_) throw DimensionError("column out of range");
      acc[c] += v;
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    while (!acc.empty()) {
      auto lead = acc.begin();
      auto piv = pivots_.find(lead->first);
      if (piv == pivots_.end()) {
        Rational inv = 1 / lead->second;
        Row stored;
        stored.reserve(acc.size());
        for (auto& [c, v] : acc) stored.emplace_back(c, v * inv);
        pivots_.emplace(lead->first, std::move(stored));
        return true;
      }
      Rational f = lead->second;
      for (const auto& [c, v] : piv->second) {
        auto [slot, fresh] = acc.try_emplace(c, 0);
        slot->second -= f * v;
        if (slot->second == 0) acc.erase(slot);
      }
    }
    return false;
  }

 private:
  size_t n_;
  std::map<size_t, Row> pivots_;  // leading column -> row with leading coefficient 1
};

// Nullity of the stacked system A x = 0, A given as sparse rows.
inline size_t nullspace_dimension(size_t unknowns, const std::vector<EchelonBuilder::Row>& rows) {
  EchelonBuilder e(unknowns);
  for (const auto& r : rows) {
    e.add(r);
    if (e.full()) break;
  }
  return e.nullity();
}

// dim { X (m x n) : X A_i = B_i X for all i }, A_i n x n, B_i m x m.
inline size_t intertwiner_dimension(const std::vector<SparseMatrix<Rational>>& as,
                                    const std::vector<SparseMatrix<Rational>>& bs) {
  if (as.size() != bs.size()) throw DimensionError("intertwiner: matrix lists differ in length");
  if (as.empty()) return 0;
  const int n = as.front().size(), m = bs.front().size();
  if (n == 0 || m == 0) return 0;
  EchelonBuilder e(size_t(n) * size_t(m));
  std::set<EchelonBuilder::Row> seen;
  for (size_t g = 0; g < as.size(); ++g) {
    const auto& A = as[g];
    const auto& B = bs[g];
    if (A.size() != n || B.size() != m) throw DimensionError("intertwiner: inconsistent sizes");
    std::vector<std::vector<std::pair<int, Rational>>> acol(n);
    for (int l = 0; l < n; ++l)
      for (const auto& [j, v] : A.row(l)) acol[j].emplace_back(l, v);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        // (X A)_ij - (B X)_ij
        std::map<size_t, Rational> eq;
        for (const auto& [l, v] : acol[j]) eq[size_t(i) * n + l] += v;
        for (const auto& [l, v] : B.row(i)) eq[size_t(l) * n + j] -= v;
        EchelonBuilder::Row row;
        for (auto& [c, v] : eq)
          if (v != 0) row.emplace_back(c, v);
        if (row.empty() || !seen.insert(row).second) continue;
        e.add(row);
        if (e.full()) return 0;
      }
  }
  return e.nullity();
}

inline size_t commutant_dimension(const std::vector<SparseMatrix<Rational>>& ms) {
  return intertwiner_dimension(ms, ms);
}

}  // namespace gelfand
