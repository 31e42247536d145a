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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/algebra.hpp"
#include "gelfand/diagram.hpp"
#include "gelfand/enumerate.hpp"
#include "gelfand/error.hpp"
#include "gelfand/family.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

// The symmetric diagrams of rank r with f fixed blocks, sorted.
struct SymmetricBasis {
  Family family = Family::Partition;
  int k = 0, r = 0, f = 0;
  std::vector<Diagram> diagrams;

  int size() const { return int(diagrams.size()); }

  // -1 when absent; diagrams are kept sorted
  int index_of(const Diagram& d) const {
    auto it = std::lower_bound(diagrams.begin(), diagrams.end(), d);
    return (it != diagrams.end() && *it == d) ? int(it - diagrams.begin()) : -1;
  }
};

// All nonempty graded pieces, keyed by (r, f).
inline std::map<std::pair<int, int>, SymmetricBasis> symmetric_bases(Family fam, int k) {
  std::map<std::pair<int, int>, SymmetricBasis> out;
  for_each_symmetric(fam, k, [&](const Diagram& d) {
    int r = rank(d), f = num_fixed_blocks(d);
    auto& b = out[{r, f}];
    b.family = fam;
    b.k = k;
    b.r = r;
    b.f = f;
    b.diagrams.push_back(d);
  });
  for (auto& [key, b] : out) std::sort(b.diagrams.begin(), b.diagrams.end());
  return out;
}

inline SymmetricBasis enumerate_symmetric(Family fam, int k, int r, int f) {
  if (!(0 <= f && f <= r && r <= k)) throw ValidationError("need 0 <= f <= r <= k");
  SymmetricBasis b;
  b.family = fam;
  b.k = k;
  b.r = r;
  b.f = f;
  for_each_symmetric(fam, k, [&](const Diagram& d) {
    if (rank(d) == r && num_fixed_blocks(d) == f) b.diagrams.push_back(d);
  });
  std::sort(b.diagrams.begin(), b.diagrams.end());
  return b;
}

// Sign of the permutation that d t d^T induces on the fixed blocks of t.
inline int sign_S(const Diagram& d, const Diagram& t) {
  if (d.k() != t.k()) throw DimensionError("sign_S: k mismatch");
  if (!is_symmetric(t)) throw ValidationError("sign_S: t is not symmetric");
  const int k = d.k();
  const Diagram dt = transpose(d);
  // rows 0..3 of the stack d / t / d^T, row j holds nodes j*k .. j*k+k-1
  detail::UnionFind uf(4 * k);
  std::vector<int> nodes(2 * k);
  auto glue_rows = [&](const Diagram& x, int row) {
    for (int i = 0; i < k; ++i) {
      nodes[i] = row * k + i;
      nodes[k + i] = (row + 1) * k + i;
    }
    detail::glue(uf, x, nodes.data());
  };
  glue_rows(d, 0);
  glue_rows(t, 1);
  glue_rows(dt, 2);

  Diagram v = compose(compose(d, t).diagram, dt).diagram;
  if (rank(v) != rank(t)) throw UndefinedSignError("sign_S: conjugation drops the rank");

  // least top-row vertex reached by each component
  std::vector<int> top_min(4 * k, -1);
  for (int i = k - 1; i >= 0; --i) top_min[uf.find(i)] = i + 1;

  auto image_fixed = fixed_blocks(v);
  std::vector<int> pos_of_label(v.num_blocks(), -1);
  for (size_t j = 0; j < image_fixed.size(); ++j) pos_of_label[v.label(image_fixed[j].front())] = int(j);

  auto src = fixed_blocks(t);
  if (src.size() != image_fixed.size()) throw InternalError("sign_S: fixed block count changed");
  std::vector<int> sigma;
  for (const auto& blk : src) {
    int i = blk.front();  // least top vertex of t's block, sits on row 1
    int m = top_min[uf.find(k + i - 1)];
    if (m < 0) throw UndefinedSignError("sign_S: fixed block does not reach the top row");
    int p = pos_of_label[v.label(m)];
    if (p < 0) throw InternalError("sign_S: fixed block maps to a non-fixed block");
    sigma.push_back(p);
  }
  int inv = 0;
  for (size_t a = 0; a < sigma.size(); ++a)
    for (size_t b = a + 1; b < sigma.size(); ++b) inv += sigma[a] > sigma[b];
  return inv % 2 ? -1 : 1;
}

struct ActionResult {
  bool zero = true;
  int kappa = 0;
  int sign = 1;
  Diagram image;
};

// d . t = x^kappa(d,t) S(d,t) d o t o d^T, or zero when the rank drops
inline ActionResult act(const Diagram& d, const Diagram& t) {
  if (d.k() != t.k()) throw DimensionError("act: k mismatch");
  auto u = compose(d, t);
  auto v = compose(u.diagram, transpose(d));
  ActionResult out;
  if (rank(v.diagram) < rank(t)) return out;
  out.zero = false;
  out.kappa = u.kappa;
  out.sign = sign_S(d, t);
  out.image = std::move(v.diagram);
  return out;
}

template <class S>
struct RepMatrixT {
  std::shared_ptr<const SymmetricBasis> basis;
  SparseMatrix<S> entries;
};

using RepMatrix = RepMatrixT<Poly>;
using RationalRepMatrix = RepMatrixT<Rational>;

// Swappable action, so harness self-tests can inject faults.
using ActionFn = ActionResult (*)(const Diagram&, const Diagram&);

inline SparseMatrix<Poly> action_matrix(const SymmetricBasis& basis, const Diagram& d,
                                        ActionFn action = &act) {
  if (d.k() != basis.k) throw DimensionError("diagram and basis differ in k");
  if (!in_family(d, basis.family)) throw ValidationError("diagram not in family " + family_name(basis.family));
  SparseMatrix<Poly> m(basis.size());
  for (int col = 0; col < basis.size(); ++col) {
    ActionResult a = action(d, basis.diagrams[col]);
    if (a.zero) continue;
    int row = basis.index_of(a.image);
    if (row < 0) throw InternalError("action left the graded basis");
    m.add(row, col, weight(basis.family, a.kappa) * Poly(a.sign));
  }
  return m;
}

inline RepMatrix representation_matrix(std::shared_ptr<const SymmetricBasis> basis, const Diagram& d,
                                       ActionFn action = &act) {
  RepMatrix m{basis, action_matrix(*basis, d, action)};
  return m;
}

inline RepMatrix representation_matrix(const SymmetricBasis& basis, const Diagram& d) {
  return representation_matrix(std::make_shared<const SymmetricBasis>(basis), d);
}

// linear extension to an algebra element
inline SparseMatrix<Poly> action_matrix(const SymmetricBasis& basis, const AlgebraElement& a,
                                        ActionFn action = &act) {
  SparseMatrix<Poly> m(basis.size());
  for (const auto& [d, c] : a.terms()) m = m + action_matrix(basis, d, action).scaled(c);
  return m;
}

inline RationalRepMatrix specialize(const RepMatrix& m, const Rational& x0) {
  return {m.basis, m.entries.map([&](const Poly& p) { return p.evaluate(x0); })};
}

inline Poly model_character(const SymmetricBasis& basis, const Diagram& d, ActionFn action = &act) {
  return action_matrix(basis, d, action).trace();
}

namespace detail {

struct RowRoles {
  std::vector<std::vector<int>> tops;  // top parts, ordered by least column
  std::vector<int> role;               // -2 stays, -1 fixed, else index of partner part
};

inline RowRoles row_roles(const Diagram& s) {
  const int k = s.k();
  RowRoles out;
  std::vector<int> part_of_label(s.num_blocks(), -1);
  for (int i = 1; i <= k; ++i) {
    int b = s.label(i);
    if (part_of_label[b] < 0) {
      part_of_label[b] = int(out.tops.size());
      out.tops.emplace_back();
    }
    out.tops[part_of_label[b]].push_back(i);
  }
  for (const auto& T : out.tops) {
    int b = s.label(T.front());
    // the bottom part of block b mirrors some top part U
    int partner = -2;
    for (int j = 1; j <= k; ++j)
      if (s.label(k + j) == b) {
        partner = part_of_label[s.label(j)];
        break;
      }
    out.role.push_back(partner);
  }
  for (size_t a = 0; a < out.tops.size(); ++a)
    if (out.role[a] == int(a)) out.role[a] = -1;
  return out;
}

}  // namespace detail

// A diagram d of the family with d o s o d^T = t.
inline Diagram find_conjugator(Family fam, const Diagram& s, const Diagram& t) {
  if (s.k() != t.k()) throw DimensionError("find_conjugator: k mismatch");
  if (!is_symmetric(s) || !is_symmetric(t)) throw ValidationError("find_conjugator needs symmetric diagrams");
  if (!in_family(s, fam) || !in_family(t, fam)) throw ValidationError("diagram not in family " + family_name(fam));
  if (rank(s) != rank(t) || num_fixed_blocks(s) != num_fixed_blocks(t))
    throw NoConjugatorError("find_conjugator: (rank, fixed) differ");
  const int k = s.k();
  auto rs = detail::row_roles(s), rt = detail::row_roles(t);

  // fixed parts in order, pairs as (smaller, larger) in order of their smaller part
  auto fixed = [](const detail::RowRoles& r) {
    std::vector<int> v;
    for (size_t a = 0; a < r.tops.size(); ++a)
      if (r.role[a] == -1) v.push_back(int(a));
    return v;
  };
  auto pairs = [](const detail::RowRoles& r) {
    std::vector<std::pair<int, int>> v;
    for (size_t a = 0; a < r.tops.size(); ++a)
      if (r.role[a] > int(a)) v.emplace_back(int(a), r.role[a]);
    return v;
  };
  auto fs = fixed(rs), ft = fixed(rt);
  auto ps = pairs(rs), pt = pairs(rt);
  if (fs.size() != ft.size() || ps.size() != pt.size()) throw NoConjugatorError("find_conjugator: shapes differ");

  // top row carries tau(t), bottom row carries tau(s)'
  std::vector<int> lab(2 * k);
  const int off = int(rt.tops.size());
  for (size_t a = 0; a < rt.tops.size(); ++a)
    for (int i : rt.tops[a]) lab[i - 1] = int(a);
  std::vector<int> join(rs.tops.size(), -1);  // s part -> t part it is joined to
  for (size_t j = 0; j < fs.size(); ++j) join[fs[j]] = ft[j];
  for (size_t j = 0; j < ps.size(); ++j) {
    join[ps[j].first] = pt[j].first;
    join[ps[j].second] = pt[j].second;
  }
  for (size_t a = 0; a < rs.tops.size(); ++a)
    for (int i : rs.tops[a]) lab[k + i - 1] = join[a] >= 0 ? join[a] : off + int(a);
  Diagram d = Diagram::from_labels(k, lab);

  if (compose(compose(d, s).diagram, transpose(d)).diagram != t || !in_family(d, fam))
    throw InternalError("find_conjugator: construction did not conjugate");
  return d;
}

}  // namespace gelfand
