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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gelfand/diagram.hpp"
#include "gelfand/enumerate.hpp"
#include "gelfand/family.hpp"
#include "gelfand/scalars.hpp"
#include "gelfand/symgroup.hpp"

namespace gelfand {

inline BigInt binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt b = 1;
  for (long long i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

// n!! for odd n, with (-1)!! = 1; even n gives the even double factorial
inline BigInt double_factorial(long long n) {
  BigInt r = 1;
  for (long long i = n; i > 1; i -= 2) r *= i;
  return r;
}

inline BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

inline BigInt bell(int n) {
  BigInt b = 0;
  for (int j = 0; j <= n; ++j) b += stirling2(n, j);
  return b;
}

inline BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

inline BigInt motzkin(int n) {
  // M_n = sum_j C(n, 2j) Cat_j
  BigInt m = 0;
  for (int j = 0; 2 * j <= n; ++j) m += binomial(n, 2 * j) * catalan(j);
  return m;
}

// number of perfect matchings on 2m points, 0 for odd point counts
inline BigInt matchings(long long points) {
  if (points < 0 || points % 2) return 0;
  return double_factorial(points - 1);
}

// Count of symmetric diagrams of rank r with f fixed blocks.  nullopt when
// the family has no closed form (planar partition).
inline std::optional<BigInt> predicted_symmetric_count(Family fam, int k, int r, int f) {
  if (!(0 <= f && f <= r && r <= k)) return BigInt(0);
  if ((r - f) % 2) return BigInt(0);
  const int l = (r - f) / 2;
  // involutions on the r propagating parts with f fixed points
  const BigInt inv = binomial(r, 2 * l) * matchings(2 * l);
  switch (fam) {
    case Family::Partition: {
      BigInt s = 0;
      for (int b = r; b <= k; ++b) s += stirling2(k, b) * binomial(b, r);
      return s * inv;
    }
    case Family::PlanarPartition: return std::nullopt;
    case Family::SymmetricGroup: return r == k ? inv : BigInt(0);
    case Family::Brauer:
      if ((k - r) % 2) return BigInt(0);
      return binomial(k, r) * matchings(k - r) * inv;
    case Family::RookMonoid: return binomial(k, r) * inv;
    case Family::RookBrauer: {
      BigInt s = 0;
      for (int c = 0; 2 * c <= k - r; ++c) s += binomial(k - r, 2 * c) * matchings(2 * c);
      return binomial(k, r) * s * inv;
    }
    case Family::TemperleyLieb: {
      if (f != r || (k - r) % 2) return BigInt(0);
      int m = (k - r) / 2;
      return binomial(k, m) - binomial(k, m - 1);
    }
    case Family::Motzkin: {
      if (f != r) return BigInt(0);
      // choose the columns not covered by singletons, then a symmetric TL diagram on them
      BigInt s = 0;
      for (int c = 0; r + 2 * c <= k; ++c)
        s += binomial(k, r + 2 * c) * (binomial(r + 2 * c, c) - binomial(r + 2 * c, c - 1));
      return s;
    }
    case Family::PlanarRook: return f == r ? binomial(k, r) : BigInt(0);
  }
  return std::nullopt;
}

inline int partitions_with_odd(int r, int f) {
  if (r < 0 || f < 0 || f > r || (r - f) % 2) return 0;
  int n = 0;
  for (const auto& lam : partitions(r)) n += lam.odd() == f;
  return n;
}

// Irreducible labels: integer partitions for the nonplanar families, integers for planar ones.
struct LabelSet {
  Family family = Family::Partition;
  int k = 0;
  std::vector<IntegerPartition> partitions;
  std::vector<int> integers;

  size_t size() const { return is_planar_family(family) ? integers.size() : partitions.size(); }

  // nonplanar labels with a given number of odd parts
  std::vector<IntegerPartition> with_odd(int f) const {
    std::vector<IntegerPartition> out;
    for (const auto& p : partitions)
      if (p.odd() == f) out.push_back(p);
    return out;
  }
};

inline LabelSet labels(Family fam, int k) {
  if (k < 0) throw ValidationError("k must be nonnegative");
  LabelSet ls;
  ls.family = fam;
  ls.k = k;
  auto add_all = [&](int r) {
    for (auto& p : partitions(r)) ls.partitions.push_back(p);
  };
  switch (fam) {
    case Family::Partition:
    case Family::RookMonoid:
    case Family::RookBrauer:
      for (int r = k; r >= 0; --r) add_all(r);
      break;
    case Family::Brauer:
      for (int r = k; r >= 0; r -= 2) add_all(r);
      break;
    case Family::SymmetricGroup: add_all(k); break;
    case Family::TemperleyLieb:
      for (int r = k; r >= 0; r -= 2) ls.integers.push_back(r);
      break;
    case Family::Motzkin:
    case Family::PlanarRook:
      for (int r = k; r >= 0; --r) ls.integers.push_back(r);
      break;
    case Family::PlanarPartition:
      throw ValidationError("no label set is recorded for planar partition algebras");
  }
  return ls;
}

// Left endpoints of the contractions, topped up with the rightmost fixed points.
inline std::set<int> tl_subset(const Diagram& d) {
  if (!is_symmetric(d) || !in_family(d, Family::TemperleyLieb))
    throw ValidationError("tl_subset needs a symmetric Temperley-Lieb diagram");
  const int k = d.k();
  std::set<int> L;
  std::vector<int> fixed;
  for (int i = 1; i <= k; ++i) {
    int partner = 0;
    for (int v = 1; v <= 2 * k; ++v)
      if (v != i && d.label(v) == d.label(i)) partner = v;
    if (partner <= k && partner > i) L.insert(i);
    if (partner == k + i) fixed.push_back(i);
  }
  int need = k / 2 - int(L.size());
  for (int a = 0; a < need; ++a) L.insert(fixed[fixed.size() - 1 - a]);
  return L;
}

inline Diagram tl_diagram(const std::set<int>& L, int k) {
  if (int(L.size()) != k / 2) throw ValidationError("subset must have floor(k/2) elements");
  for (int i : L)
    if (i < 1 || i > k) throw ValidationError("subset element out of range: " + std::to_string(i));
  std::vector<int> mate(k + 1, 0);  // 0 empty, -1 fixed, else partner column
  for (auto it = L.rbegin(); it != L.rend(); ++it) {
    int i = *it, j = i + 1;
    while (j <= k && (L.count(j) || mate[j])) ++j;
    if (j <= k) {
      mate[i] = j;
      mate[j] = i;
    } else {
      mate[i] = -1;
    }
  }
  std::vector<std::vector<int>> bl;
  for (int i = 1; i <= k; ++i) {
    if (mate[i] > i) {
      bl.push_back({i, mate[i]});
      bl.push_back({k + i, k + mate[i]});
    } else if (mate[i] <= 0) {
      bl.push_back({i, k + i});
    }
  }
  return canonicalize(k, bl);
}

// Tables of total symmetric diagram counts, k = 0..10.
struct ReferenceTables {
  static const std::vector<long long>& s() {
    static const std::vector<long long> v{1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
    return v;
  }
  static const std::vector<long long>& p() {
    static const std::vector<long long> v{1, 2, 7, 31, 164, 999, 6841, 51790, 428131, 3827967, 36738144};
    return v;
  }
  static const std::vector<long long>& b() {
    static const std::vector<long long> v{1, 1, 3, 7, 25, 81, 331, 1303, 5937, 26785, 133651};
    return v;
  }
  static const std::vector<long long>& r() {
    static const std::vector<long long> v{1, 2, 5, 14, 43, 142, 499, 1850, 7193, 29186, 123109};
    return v;
  }
  static const std::vector<long long>& rb() {
    static const std::vector<long long> v{1, 2, 6, 20, 76, 312, 1384, 6512, 32400, 168992, 921184};
    return v;
  }
  static const std::vector<long long>& tl() {
    static const std::vector<long long> v{1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252};
    return v;
  }
  static const std::vector<long long>& m() {
    static const std::vector<long long> v{1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046, 17303};
    return v;
  }
  static long long pr(int k) { return 1LL << k; }

  // the tabulated sequence for a family, if any
  static const std::vector<long long>* for_family(Family fam) {
    switch (fam) {
      case Family::SymmetricGroup: return &s();
      case Family::Partition: return &p();
      case Family::Brauer: return &b();
      case Family::RookMonoid: return &r();
      case Family::RookBrauer: return &rb();
      case Family::TemperleyLieb: return &tl();
      case Family::Motzkin: return &m();
      default: return nullptr;
    }
  }
};

// sum over (r, f) of the closed form
inline std::optional<BigInt> predicted_total(Family fam, int k) {
  BigInt s = 0;
  for (int r = 0; r <= k; ++r)
    for (int f = 0; f <= r; ++f) {
      auto c = predicted_symmetric_count(fam, k, r, f);
      if (!c) return std::nullopt;
      s += *c;
    }
  return s;
}

inline BigInt binomial_transform(const std::vector<long long>& a, int k) {
  BigInt s = 0;
  for (int i = 0; i <= k; ++i) s += binomial(k, i) * a[i];
  return s;
}

struct SequenceReport {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

// Binomial transforms r = B(s), rb = B(b), m = B(tl); tl_k = C(k, k/2); pr_k = 2^k;
// all also matched against the closed-form totals.
inline SequenceReport sequence_checks(int max_k) {
  if (max_k > 10) throw ValidationError("tables stop at k = 10");
  SequenceReport rep;
  using T = ReferenceTables;
  for (int k = 0; k <= max_k; ++k) {
    std::string at = " at k=" + std::to_string(k);
    rep.expect(binomial_transform(T::s(), k) == T::r()[k], "r = B(s)" + at);
    rep.expect(binomial_transform(T::b(), k) == T::rb()[k], "rb = B(b)" + at);
    rep.expect(binomial_transform(T::tl(), k) == T::m()[k], "m = B(tl)" + at);
    rep.expect(binomial(k, k / 2) == T::tl()[k], "tl = C(k, k/2)" + at);
    rep.expect(*predicted_total(Family::PlanarRook, k) == T::pr(k), "pr = 2^k" + at);
    for (Family fam : kAllFamilies) {
      const auto* tab = T::for_family(fam);
      if (!tab) continue;
      rep.expect(*predicted_total(fam, k) == (*tab)[k], family_name(fam) + " closed-form total" + at);
    }
  }
  // enumerated totals where enumeration is cheap
  const std::pair<Family, int> bounds[] = {
      {Family::SymmetricGroup, 8}, {Family::Partition, 5},     {Family::Brauer, 7},
      {Family::RookMonoid, 7},     {Family::RookBrauer, 6},    {Family::TemperleyLieb, 10},
      {Family::Motzkin, 7},        {Family::PlanarRook, 10}};
  for (auto [fam, bound] : bounds)
    for (int k = 0; k <= std::min(bound, max_k); ++k) {
      long long n = 0;
      for_each_symmetric(fam, k, [&](const Diagram&) { ++n; });
      long long want = fam == Family::PlanarRook ? T::pr(k) : (*T::for_family(fam))[k];
      rep.expect(n == want, family_name(fam) + " enumerated total at k=" + std::to_string(k));
    }
  return rep;
}

}  // namespace gelfand
