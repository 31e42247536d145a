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
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/diagram.hpp"
#include "gelfand/enumerate.hpp"
#include "gelfand/error.hpp"
#include "gelfand/model.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int k) {
    Permutation p;
    p.w_.resize(k);
    std::iota(p.w_.begin(), p.w_.end(), 1);
    return p;
  }

  // images w(1), ..., w(k)
  static Permutation from_images(std::vector<int> w) {
    std::vector<char> hit(w.size(), 0);
    for (int v : w) {
      if (v < 1 || v > int(w.size()) || hit[v - 1])
        throw ValidationError("not a permutation of 1.." + std::to_string(w.size()));
      hit[v - 1] = 1;
    }
    Permutation p;
    p.w_ = std::move(w);
    return p;
  }

  // product of disjoint cycles, e.g. {{1,3},{4,6}}
  static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(k);
    for (const auto& c : cycles)
      for (size_t a = 0; a < c.size(); ++a) p.w_[c[a] - 1] = c[(a + 1) % c.size()];
    return from_images(p.w_);
  }

  int k() const { return int(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& images() const { return w_; }

  Permutation inverse() const {
    Permutation p;
    p.w_.resize(w_.size());
    for (int i = 1; i <= k(); ++i) p.w_[w_[i - 1] - 1] = i;
    return p;
  }

  // (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.k() != b.k()) throw DimensionError("permutation sizes differ");
    Permutation p;
    p.w_.resize(a.w_.size());
    for (int i = 1; i <= a.k(); ++i) p.w_[i - 1] = a(b(i));
    return p;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

  bool is_involution() const {
    for (int i = 1; i <= k(); ++i)
      if ((*this)((*this)(i)) != i) return false;
    return true;
  }

  int fixed_points() const {
    int n = 0;
    for (int i = 1; i <= k(); ++i) n += (*this)(i) == i;
    return n;
  }

 private:
  std::vector<int> w_;
};

inline int perm_sign(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.k(); ++i)
    for (int j = i + 1; j <= w.k(); ++j) inv += w(i) > w(j);
  return inv % 2 ? -1 : 1;
}

// blocks {w(i), i'}
inline Diagram to_diagram(const Permutation& w) { return permutation_diagram(w.images()); }

inline Permutation from_diagram(const Diagram& d) {
  const int k = d.k();
  if (rank(d) != k) throw ValidationError("not a permutation diagram");
  std::vector<int> top_of(d.num_blocks(), 0);
  for (int i = 1; i <= k; ++i) top_of[d.label(i)] = i;
  std::vector<int> w(k);
  for (int i = 1; i <= k; ++i) w[i - 1] = top_of[d.label(k + i)];
  return Permutation::from_images(w);
}

inline Permutation conjugate(const Permutation& w, const Permutation& t) { return w * t * w.inverse(); }

// All involutions of 1..k with exactly f fixed points, sorted.
inline std::vector<Permutation> involutions(int k, int f) {
  std::vector<Permutation> out;
  if (f < 0 || f > k || (k - f) % 2) return out;
  std::vector<int> w(k, 0);
  std::function<void(int, int)> rec = [&](int i, int fixed_left) {
    while (i <= k && w[i - 1]) ++i;
    if (i > k) {
      if (fixed_left == 0) out.push_back(Permutation::from_images(w));
      return;
    }
    if (fixed_left > 0) {
      w[i - 1] = i;
      rec(i + 1, fixed_left - 1);
      w[i - 1] = 0;
    }
    for (int j = i + 1; j <= k; ++j) {
      if (w[j - 1]) continue;
      w[i - 1] = j;
      w[j - 1] = i;
      rec(i + 1, fixed_left);
      w[j - 1] = 0;
    }
    w[i - 1] = 0;
  };
  rec(1, f);
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_involution(const Permutation& t) {
  if (!t.is_involution()) throw ValidationError("t is not an involution");
}

// parity of {i < j : t(i) = i, t(j) = j, w(i) > w(j)}
inline int saxl_sign(const Permutation& w, const Permutation& t) {
  require_involution(t);
  if (w.k() != t.k()) throw DimensionError("permutation sizes differ");
  int n = 0;
  for (int i = 1; i <= t.k(); ++i)
    for (int j = i + 1; j <= t.k(); ++j)
      if (t(i) == i && t(j) == j && w(i) > w(j)) ++n;
  return n % 2 ? -1 : 1;
}

// parity over the 2-cycles (i j) of t, i < j, with w(i) > w(j)
inline int apr_sign(const Permutation& w, const Permutation& t) {
  require_involution(t);
  if (w.k() != t.k()) throw DimensionError("permutation sizes differ");
  int n = 0;
  for (int i = 1; i <= t.k(); ++i)
    if (t(i) > i && w(i) > w(t(i))) ++n;
  return n % 2 ? -1 : 1;
}

struct IntegerPartition {
  std::vector<int> parts;  // weakly decreasing, positive

  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x <= 0) throw ValidationError("partition parts must be positive");
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
      throw ValidationError("partition parts must be weakly decreasing");
  }

  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int odd() const {
    int c = 0;
    for (int x : parts) c += x % 2;
    return c;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }

  friend bool operator==(const IntegerPartition& a, const IntegerPartition& b) { return a.parts == b.parts; }
  friend bool operator!=(const IntegerPartition& a, const IntegerPartition& b) { return !(a == b); }
  friend bool operator<(const IntegerPartition& a, const IntegerPartition& b) { return a.parts < b.parts; }
};

// partitions of n, reverse lexicographic: (n), (n-1,1), ...
inline std::vector<IntegerPartition> partitions(int n) {
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// centralizer order z_mu
inline BigInt centralizer_order(const IntegerPartition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts) mult[p]++;
  BigInt z = 1;
  for (auto [p, m] : mult) {
    for (int i = 0; i < m; ++i) z *= p;
    z *= factorial(m);
  }
  return z;
}

inline BigInt class_size(const IntegerPartition& mu) { return factorial(mu.n()) / centralizer_order(mu); }

// consecutive cycles (1..mu_1)(mu_1+1 ..) ...
inline Permutation class_representative(const IntegerPartition& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int p : mu.parts) {
    std::vector<int> c;
    for (int i = 0; i < p; ++i) c.push_back(next++);
    cycles.push_back(c);
  }
  return Permutation::from_cycles(mu.n(), cycles);
}

inline IntegerPartition cycle_type(const Permutation& w) {
  std::vector<char> seen(w.k(), 0);
  std::vector<int> parts;
  for (int i = 1; i <= w.k(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    for (int j = i; !seen[j - 1]; j = w(j)) {
      seen[j - 1] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return IntegerPartition(parts);
}

namespace detail {

// Murnaghan-Nakayama on beta sets: strip a rim hook of length mu[idx] per step.
inline long long mn_beta(std::vector<int>& beta, const std::vector<int>& mu, size_t idx) {
  if (idx == mu.size()) return 1;
  const int h = mu[idx];
  long long total = 0;
  for (size_t a = 0; a < beta.size(); ++a) {
    int b = beta[a], nb = b - h;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int c : beta) between += (c > nb && c < b);
    beta[a] = nb;
    long long sub = mn_beta(beta, mu, idx + 1);
    beta[a] = b;
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace detail

inline long long mn_character(const IntegerPartition& lam, const IntegerPartition& mu) {
  if (lam.n() != mu.n()) throw ValidationError("mn_character: sizes differ");
  const int m = int(lam.parts.size());
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = lam.parts[i] + (m - 1 - i);
  return detail::mn_beta(beta, mu.parts, 0);
}

inline long long irreducible_dimension(const IntegerPartition& lam) {
  return mn_character(lam, IntegerPartition(std::vector<int>(lam.n(), 1)));
}

// m(f, lam) = <phi^f, chi^lam>, phi^f the character of the Saxl block with f fixed points
struct SaxlTable {
  int k = 0;
  std::vector<IntegerPartition> lambdas;
  std::vector<int> fs;
  std::map<std::pair<int, IntegerPartition>, BigInt> m;

  BigInt at(int f, const IntegerPartition& lam) const {
    auto it = m.find({f, lam});
    return it == m.end() ? BigInt(0) : it->second;
  }
};

// phi^f on each class representative, read off the diagram model
inline std::map<IntegerPartition, BigInt> saxl_block_character(int k, int f) {
  std::map<IntegerPartition, BigInt> out;
  if ((k - f) % 2) {
    for (const auto& mu : partitions(k)) out[mu] = 0;
    return out;
  }
  SymmetricBasis basis = enumerate_symmetric(Family::SymmetricGroup, k, k, f);
  for (const auto& mu : partitions(k)) {
    Poly c = model_character(basis, to_diagram(class_representative(mu)));
    if (c.degree() > 0) throw InternalError("symmetric group character depends on x");
    out[mu] = c.coeff(0);
  }
  return out;
}

inline SaxlTable saxl_decomposition(int k) {
  if (k < 0) throw ValidationError("k must be nonnegative");
  SaxlTable tab;
  tab.k = k;
  tab.lambdas = partitions(k);
  auto mus = partitions(k);
  BigInt order = factorial(k);
  for (int f = k % 2; f <= k; f += 2) {
    tab.fs.push_back(f);
    auto phi = saxl_block_character(k, f);
    for (const auto& lam : tab.lambdas) {
      BigInt s = 0;
      for (const auto& mu : mus) s += class_size(mu) * phi[mu] * mn_character(lam, mu);
      if (s % order != 0) throw InternalError("non-integral multiplicity at " + lam.str());
      tab.m[{f, lam}] = s / order;
    }
  }
  return tab;
}

struct AprReport {
  bool ok = true;
  std::string counterexample;
};

// chi_Saxl(w) = sign(w) chi_APR(w) on every class and every f; also the diagram
// model must agree with the group formula for the Saxl sign.
inline AprReport apr_tensor_check(int k) {
  AprReport rep;
  for (int f = k % 2; f <= k; f += 2) {
    auto invs = involutions(k, f);
    auto diagram_phi = saxl_block_character(k, f);
    for (const auto& mu : partitions(k)) {
      Permutation w = class_representative(mu);
      long long saxl = 0, apr = 0;
      for (const auto& t : invs) {
        if (conjugate(w, t) != t) continue;
        saxl += saxl_sign(w, t);
        apr += apr_sign(w, t);
      }
      std::string where = "k=" + std::to_string(k) + " f=" + std::to_string(f) + " class " + mu.str();
      if (saxl != perm_sign(w) * apr) {
        rep.ok = false;
        rep.counterexample = where + ": saxl " + std::to_string(saxl) + " vs sign*apr " +
                             std::to_string(perm_sign(w) * apr);
        return rep;
      }
      if (BigInt(saxl) != diagram_phi[mu]) {
        rep.ok = false;
        rep.counterexample = where + ": diagram trace " + diagram_phi[mu].str() + " vs group trace " +
                             std::to_string(saxl);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace gelfand
