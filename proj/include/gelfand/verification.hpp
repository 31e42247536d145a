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

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/algebra.hpp"
#include "gelfand/combinatorics.hpp"
#include "gelfand/enumerate.hpp"
#include "gelfand/format.hpp"
#include "gelfand/linalg.hpp"
#include "gelfand/model.hpp"
#include "gelfand/symgroup.hpp"

namespace gelfand {

enum class Mode { Exhaustive, Sampled };

inline std::string mode_name(Mode m) { return m == Mode::Exhaustive ? "exhaustive" : "sampled"; }

struct CheckReport {
  std::string check;
  Family family = Family::Partition;
  int k = 0;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  std::string witness;  // empty on pass
  double ms = 0;

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
  void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
};

namespace detail {

// times a check body and fills in the common fields
template <class Body>
CheckReport timed(const std::string& name, Family fam, int k, Body body) {
  CheckReport rep;
  rep.check = name;
  rep.family = fam;
  rep.k = k;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.fail(std::string("exception: ") + e.what());
  }
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline std::string rf(int r, int f) { return "(" + std::to_string(r) + "," + std::to_string(f) + ")"; }

// every graded block with its matrices, built on demand per diagram index
struct ModelCache {
  Family fam;
  int k;
  ActionFn action;
  std::vector<Diagram> diagrams;
  std::vector<SymmetricBasis> blocks;
  std::vector<std::vector<std::optional<SparseMatrix<Poly>>>> mats;  // [block][diagram]

  ModelCache(Family f, int kk, ActionFn a) : fam(f), k(kk), action(a), diagrams(enumerate(f, kk)) {
    for (auto& [key, b] : symmetric_bases(f, kk)) blocks.push_back(std::move(b));
    mats.assign(blocks.size(), std::vector<std::optional<SparseMatrix<Poly>>>(diagrams.size()));
  }

  int index(const Diagram& d) const {
    auto it = std::lower_bound(diagrams.begin(), diagrams.end(), d);
    if (it == diagrams.end() || *it != d) throw InternalError("product left the family: " + to_text(d));
    return int(it - diagrams.begin());
  }

  const SparseMatrix<Poly>& at(size_t b, int i) {
    auto& slot = mats[b][i];
    if (!slot) slot = action_matrix(blocks[b], diagrams[i], action);
    return *slot;
  }

  std::vector<SparseMatrix<Rational>> specialized(size_t b, const Rational& x0) {
    std::vector<SparseMatrix<Rational>> out;
    out.reserve(diagrams.size());
    for (size_t i = 0; i < diagrams.size(); ++i)
      out.push_back(at(b, int(i)).map([&](const Poly& p) { return p.evaluate(x0); }));
    return out;
  }
};

}  // namespace detail

inline CheckReport check_dimensions(Family fam, int k) {
  return detail::timed("dimensions", fam, k, [&](CheckReport& rep) {
    BigInt want;
    switch (fam) {
      case Family::Partition: want = bell(2 * k); break;
      case Family::SymmetricGroup: want = factorial(k); break;
      case Family::Brauer: want = double_factorial(2 * k - 1); break;
      case Family::RookMonoid:
        for (int l = 0; l <= k; ++l) want += binomial(k, l) * binomial(k, l) * factorial(l);
        break;
      case Family::RookBrauer:
        for (int l = 0; l <= k; ++l) want += binomial(2 * k, 2 * l) * double_factorial(2 * l - 1);
        break;
      case Family::TemperleyLieb: want = catalan(k); break;
      case Family::Motzkin: want = motzkin(2 * k); break;
      case Family::PlanarRook: want = binomial(2 * k, k); break;
      case Family::PlanarPartition: want = catalan(2 * k); break;
    }
    long long n = 0;
    for_each_diagram(fam, k, [&](const Diagram& d) {
      ++n;
      if (!in_family(d, fam)) rep.fail("generated diagram not in family: " + to_text(d));
    });
    rep.param("expected", want.str());
    rep.param("enumerated", std::to_string(n));
    if (BigInt(n) != want) rep.fail("enumerated " + std::to_string(n) + ", expected " + want.str());
  });
}

inline CheckReport check_symmetric_counts(Family fam, int k) {
  return detail::timed("symmetric_counts", fam, k, [&](CheckReport& rep) {
    std::map<std::pair<int, int>, long long> got;
    long long total = 0;
    for_each_symmetric(fam, k, [&](const Diagram& d) {
      if (!is_symmetric(d) || !in_family(d, fam)) rep.fail("generator produced " + to_text(d));
      got[{rank(d), num_fixed_blocks(d)}]++;
      ++total;
    });
    rep.param("total", std::to_string(total));
    for (int r = 0; r <= k; ++r)
      for (int f = 0; f <= r; ++f) {
        auto want = predicted_symmetric_count(fam, k, r, f);
        if (!want) continue;
        long long n = got.count({r, f}) ? got[{r, f}] : 0;
        if (BigInt(n) != *want)
          rep.fail("block " + detail::rf(r, f) + ": enumerated " + std::to_string(n) + ", predicted " + want->str());
      }
    const auto* tab = ReferenceTables::for_family(fam);
    long long want_total = -1;
    if (tab && k < int(tab->size())) want_total = (*tab)[k];
    if (fam == Family::PlanarRook && k < 62) want_total = ReferenceTables::pr(k);
    if (want_total >= 0 && total != want_total)
      rep.fail("total " + std::to_string(total) + ", table says " + std::to_string(want_total));
  });
}

// rho(d1) rho(d2) = rho(d1 d2) on every graded block
inline CheckReport check_module_axiom(Family fam, int k, Mode mode, std::uint64_t seed, size_t samples = 10000,
                                      ActionFn action = &act) {
  return detail::timed("module_axiom", fam, k, [&](CheckReport& rep) {
    rep.param("mode", mode_name(mode));
    detail::ModelCache cache(fam, k, action);
    const size_t n = cache.diagrams.size();
    size_t pairs = 0;
    auto check_pair = [&](int i, int j) {
      const Diagram& d1 = cache.diagrams[i];
      const Diagram& d2 = cache.diagrams[j];
      auto [d3, kappa] = compose(d1, d2);
      Poly c = weight(fam, kappa);
      int idx = cache.index(d3);
      ++pairs;
      for (size_t b = 0; b < cache.blocks.size(); ++b) {
        const auto& m1 = cache.at(b, i);
        const auto& m2 = cache.at(b, j);
        if (!m1.is_column_monomial()) {
          rep.fail("non-monomial column in matrix of " + to_text(d1));
          return false;
        }
        if (m1 * m2 != cache.at(b, idx).scaled(c)) {
          rep.fail("d1 = " + to_text(d1) + " ; d2 = " + to_text(d2) + " ; block " +
                   detail::rf(cache.blocks[b].r, cache.blocks[b].f));
          return false;
        }
      }
      return true;
    };
    if (mode == Mode::Exhaustive) {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (!check_pair(int(i), int(j))) return;
    } else {
      rep.param("seed", std::to_string(seed));
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<size_t> pick(0, n - 1);
      for (size_t s = 0; s < samples; ++s) {
        int i = int(pick(rng)), j = int(pick(rng));
        if (!check_pair(i, j)) return;
      }
    }
    rep.param("pairs", std::to_string(pairs));
    rep.param("blocks", std::to_string(cache.blocks.size()));
  });
}

inline Rational default_x0(int k) { return Rational(2 * k + 3); }

namespace detail {

// Hom dimensions between all graded blocks at a specialization point
inline std::vector<std::vector<size_t>> hom_table(ModelCache& cache, const Rational& x0, bool same_rank_only) {
  std::vector<std::vector<SparseMatrix<Rational>>> at_x0;
  for (size_t b = 0; b < cache.blocks.size(); ++b) at_x0.push_back(cache.specialized(b, x0));
  const size_t nb = cache.blocks.size();
  std::vector<std::vector<size_t>> h(nb, std::vector<size_t>(nb, 0));
  for (size_t a = 0; a < nb; ++a)
    for (size_t b = 0; b < nb; ++b) {
      if (same_rank_only && cache.blocks[a].r != cache.blocks[b].r) continue;
      h[a][b] = intertwiner_dimension(at_x0[b], at_x0[a]);
    }
  return h;
}

}  // namespace detail

// Each graded block has the expected commutant, and the whole model has |labels|.
inline CheckReport check_multiplicity_free(Family fam, int k, ActionFn action = &act) {
  return detail::timed("multiplicity_free", fam, k, [&](CheckReport& rep) {
    if (fam == Family::PlanarPartition) {
      rep.param("note", "no label set recorded; skipped");
      return;
    }
    detail::ModelCache cache(fam, k, action);
    const size_t want_full = labels(fam, k).size();
    Rational x0 = default_x0(k);
    const int tries = fam == Family::RookBrauer ? 3 : 1;
    std::string last;
    for (int attempt = 0; attempt < tries; ++attempt, x0 += 2) {
      auto h = detail::hom_table(cache, x0, false);
      size_t full = 0;
      bool excess = false;
      last.clear();
      for (size_t a = 0; a < h.size(); ++a)
        for (size_t b = 0; b < h.size(); ++b) full += h[a][b];
      for (size_t b = 0; b < cache.blocks.size(); ++b) {
        const auto& blk = cache.blocks[b];
        size_t want = is_planar_family(fam) ? 1 : size_t(partitions_with_odd(blk.r, blk.f));
        if (h[b][b] != want) {
          excess = excess || h[b][b] > want;
          if (last.empty())
            last = "block " + detail::rf(blk.r, blk.f) + ": commutant " + std::to_string(h[b][b]) +
                   ", expected " + std::to_string(want);
        }
      }
      if (last.empty() && full != want_full) {
        excess = full > want_full;
        last = "full model commutant " + std::to_string(full) + ", expected " + std::to_string(want_full);
      }
      if (last.empty()) {
        rep.param("x0", to_string(x0));
        rep.param("full_commutant", std::to_string(full));
        return;
      }
      if (!excess) break;  // only an excess may be blamed on a bad parameter
    }
    rep.param("x0", to_string(x0));
    rep.fail(last);
  });
}

// no intertwiners between blocks of different rank
inline CheckReport check_disjointness(Family fam, int k, ActionFn action = &act) {
  return detail::timed("disjointness", fam, k, [&](CheckReport& rep) {
    detail::ModelCache cache(fam, k, action);
    Rational x0 = default_x0(k);
    rep.param("x0", to_string(x0));
    std::vector<std::vector<SparseMatrix<Rational>>> at_x0;
    for (size_t b = 0; b < cache.blocks.size(); ++b) at_x0.push_back(cache.specialized(b, x0));
    size_t pairs = 0;
    for (size_t a = 0; a < cache.blocks.size(); ++a)
      for (size_t b = 0; b < cache.blocks.size(); ++b) {
        if (cache.blocks[a].r == cache.blocks[b].r) continue;
        ++pairs;
        size_t dim = intertwiner_dimension(at_x0[a], at_x0[b]);
        if (dim != 0) {
          rep.fail("Hom(" + detail::rf(cache.blocks[a].r, cache.blocks[a].f) + " -> " +
                   detail::rf(cache.blocks[b].r, cache.blocks[b].f) + ") has dimension " + std::to_string(dim));
          return;
        }
      }
    rep.param("block_pairs", std::to_string(pairs));
  });
}

namespace detail {

// the rank-k block character on a permutation diagram, computed in the group
inline long long top_block_character(Family fam, const Diagram& d, int f) {
  Permutation w = from_diagram(d);
  long long s = 0;
  for (const auto& t : involutions(d.k(), f)) {
    if (!in_family(to_diagram(t), fam) || conjugate(w, t) != t) continue;
    s += saxl_sign(w, t);
  }
  return s;
}

}  // namespace detail

// phi_k(a e_k) = x phi_k'(a) below the top rank; the top-rank blocks vanish off C_k
inline CheckReport check_character_recursion(Family fam, int k, ActionFn action = &act) {
  return detail::timed("character_recursion", fam, k, [&](CheckReport& rep) {
    auto big = symmetric_bases(fam, k);
    if (has_idempotent(fam) && k - derived_shift(fam) >= 0) {
      const int shift = derived_shift(fam), kp = k - shift;
      auto small = symmetric_bases(fam, kp);
      const Diagram e = e_k(fam, k);
      size_t evals = 0;
      for (const auto& a : enumerate(fam, kp)) {
        auto [d, kappa] = compose(embed(a, shift), e);
        Poly scale = weight(fam, kappa);
        for (int r = 0; r < k; ++r)
          for (int f = 0; f <= r; ++f) {
            auto bi = big.find({r, f});
            auto si = small.find({r, f});
            Poly lhs = bi == big.end() ? Poly() : model_character(bi->second, d, action) * scale;
            Poly rhs = si == small.end() ? Poly() : model_character(si->second, a, action) * weight(fam, 1);
            ++evals;
            if (lhs != rhs) {
              rep.fail("a = " + to_text(a) + " ; block " + detail::rf(r, f) + " ; lhs " + lhs.str() + " ; rhs " +
                       rhs.str());
              return;
            }
          }
      }
      rep.param("recursion_evaluations", std::to_string(evals));
    } else {
      rep.param("note", has_idempotent(fam) ? "k below the idempotent" : "no e_k; top rank only");
    }
    for (const auto& d : enumerate(fam, k))
      for (const auto& [key, basis] : big) {
        if (key.first != k) continue;
        Poly got = model_character(basis, d, action);
        Poly want = rank(d) < k ? Poly() : Poly(detail::top_block_character(fam, d, key.second));
        if (got != want) {
          rep.fail("d = " + to_text(d) + " ; block " + detail::rf(key.first, key.second) + " ; got " + got.str() +
                   " ; expected " + want.str());
          return;
        }
      }
  });
}

// p_t t = t p_t = x^ell t
inline CheckReport check_absorption(Family fam, int k) {
  return detail::timed("absorption", fam, k, [&](CheckReport& rep) {
    long long n = 0;
    for_each_symmetric(fam, k, [&](const Diagram& t) {
      if (!rep.pass) return;
      ++n;
      auto [p, ell] = p_t(t);
      if (!in_family(p, fam) || rank(p) != rank(t)) {
        rep.fail("p_t outside family or rank changed for t = " + to_text(t));
        return;
      }
      AlgebraElement want = AlgebraElement::basis(fam, t, weight(fam, ell));
      if (multiply(fam, p, t) != want || multiply(fam, t, p) != want)
        rep.fail("t = " + to_text(t) + " ; p_t = " + to_text(p) + " ; ell = " + std::to_string(ell));
    });
    rep.param("symmetric_diagrams", std::to_string(n));
  });
}

inline CheckReport check_saxl(int k) {
  return detail::timed("saxl", Family::SymmetricGroup, k, [&](CheckReport& rep) {
    SaxlTable tab = saxl_decomposition(k);
    for (int f : tab.fs)
      for (const auto& lam : tab.lambdas) {
        BigInt want = lam.odd() == f ? 1 : 0;
        if (tab.at(f, lam) != want) {
          rep.fail("m(" + std::to_string(f) + ", " + lam.str() + ") = " + tab.at(f, lam).str());
          return;
        }
      }
  });
}

inline CheckReport check_apr(int k) {
  return detail::timed("apr", Family::SymmetricGroup, k, [&](CheckReport& rep) {
    auto r = apr_tensor_check(k);
    if (!r.ok) rep.fail(r.counterexample);
  });
}

inline CheckReport check_tl_bijection(int k) {
  return detail::timed("tl_bijection", Family::TemperleyLieb, k, [&](CheckReport& rep) {
    long long n = 0;
    for_each_symmetric(Family::TemperleyLieb, k, [&](const Diagram& d) {
      ++n;
      if (rep.pass && tl_diagram(tl_subset(d), k) != d) rep.fail("round trip broke at " + to_text(d));
    });
    // every floor(k/2)-subset back and forth
    const int m = k / 2;
    long long subsets = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) != m) continue;
      std::set<int> L;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1u) L.insert(i + 1);
      ++subsets;
      if (rep.pass && tl_subset(tl_diagram(L, k)) != L) rep.fail("subset round trip broke at mask " + std::to_string(mask));
    }
    if (n != subsets) rep.fail(std::to_string(n) + " diagrams vs " + std::to_string(subsets) + " subsets");
    rep.param("diagrams", std::to_string(n));
  });
}

struct Bounds {
  int dimensions = -1;
  int symmetric_counts = -1;
  int module_axiom = -1;       // exhaustive up to here, sampled one size up
  int multiplicity_free = -1;  // also disjointness
  int recursion = -1;          // character recursion and absorption
};

struct Config {
  std::map<Family, Bounds> families;
  int saxl = -1;
  int apr = -1;
  int tl_bijection = -1;
  int sequences = -1;
  std::uint64_t seed = 20260101;
  size_t samples = 10000;
  ActionFn action = &act;

  static Config acceptance() {
    Config c;
    c.families[Family::Partition] = {3, 5, 2, 2, 2};
    c.families[Family::Brauer] = {5, 7, 4, 3, 4};
    c.families[Family::RookMonoid] = {4, 7, 3, 3, 3};
    c.families[Family::RookBrauer] = {4, 6, 3, 3, 3};
    c.families[Family::TemperleyLieb] = {8, 10, 5, 5, 5};
    c.families[Family::Motzkin] = {5, 7, 4, 4, 4};
    c.families[Family::PlanarRook] = {6, 10, 4, 5, 4};
    c.families[Family::SymmetricGroup] = {6, 8, 4, -1, 4};
    c.saxl = 7;
    c.apr = 6;
    c.tl_bijection = 12;
    c.sequences = 10;
    return c;
  }

  // quick settings for a single family
  static Config for_family(Family fam, int max_k) {
    Config c;
    c.families[fam] = {max_k, max_k, max_k, max_k, max_k};
    return c;
  }
};

inline CheckReport check_sequences(int max_k) {
  return detail::timed("sequences", Family::Partition, max_k, [&](CheckReport& rep) {
    auto s = sequence_checks(max_k);
    if (!s.ok) rep.fail(s.failures.front());
  });
}

// Runs every configured check in a fixed order.
inline std::vector<CheckReport> run_all(const Config& cfg) {
  std::vector<CheckReport> out;
  for (const auto& [fam, b] : cfg.families) {
    for (int k = 0; k <= b.dimensions; ++k) out.push_back(check_dimensions(fam, k));
    for (int k = 0; k <= b.symmetric_counts; ++k) out.push_back(check_symmetric_counts(fam, k));
    for (int k = 1; k <= b.module_axiom; ++k)
      out.push_back(check_module_axiom(fam, k, Mode::Exhaustive, cfg.seed, cfg.samples, cfg.action));
    if (b.module_axiom >= 0)
      out.push_back(check_module_axiom(fam, b.module_axiom + 1, Mode::Sampled, cfg.seed, cfg.samples, cfg.action));
    for (int k = 1; k <= b.multiplicity_free; ++k) {
      out.push_back(check_multiplicity_free(fam, k, cfg.action));
      out.push_back(check_disjointness(fam, k, cfg.action));
    }
    for (int k = 1; k <= b.recursion; ++k) {
      out.push_back(check_character_recursion(fam, k, cfg.action));
      out.push_back(check_absorption(fam, k));
    }
  }
  for (int k = 1; k <= cfg.saxl; ++k) out.push_back(check_saxl(k));
  for (int k = 1; k <= cfg.apr; ++k) out.push_back(check_apr(k));
  for (int k = 0; k <= cfg.tl_bijection; ++k) out.push_back(check_tl_bijection(k));
  if (cfg.sequences >= 0) out.push_back(check_sequences(cfg.sequences));
  return out;
}

inline bool all_pass(const std::vector<CheckReport>& reps) {
  for (const auto& r : reps)
    if (!r.pass) return false;
  return true;
}

}  // namespace gelfand
