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

#include <map>
#include <string>
#include <utility>

#include "gelfand/diagram.hpp"
#include "gelfand/error.hpp"
#include "gelfand/family.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

// x^kappa, or 1 where the family fixes x = 1
inline Poly weight(Family fam, int kappa) {
  return parameter_is_one(fam) ? Poly(1) : Poly::x_pow(unsigned(kappa));
}

class AlgebraElement {
 public:
  AlgebraElement(Family fam, int k) : fam_(fam), k_(k) {}

  static AlgebraElement basis(Family fam, const Diagram& d, Poly c = Poly(1)) {
    AlgebraElement a(fam, d.k());
    a.add(d, c);
    return a;
  }

  Family family() const { return fam_; }
  int k() const { return k_; }
  const std::map<Diagram, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly coeff(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Poly() : it->second;
  }

  void add(const Diagram& d, const Poly& c) {
    if (d.k() != k_) throw DimensionError("diagram has k=" + std::to_string(d.k()) + ", element has k=" + std::to_string(k_));
    if (!in_family(d, fam_)) throw ValidationError("diagram not in family " + family_name(fam_));
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    same_space(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    same_space(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  AlgebraElement scaled(const Poly& c) const {
    AlgebraElement r(fam_, k_);
    for (const auto& [d, v] : terms_) r.add(d, v * c);
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.fam_ == b.fam_ && a.k_ == b.k_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  void same_space(const AlgebraElement& o) const {
    if (o.k_ != k_) throw DimensionError("algebra elements differ in k");
    if (o.fam_ != fam_) throw DimensionError("algebra elements differ in family");
  }

 private:
  Family fam_;
  int k_;
  std::map<Diagram, Poly> terms_;
};

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.same_space(b);
  AlgebraElement r(a.family(), a.k());
  for (const auto& [d1, c1] : a.terms())
    for (const auto& [d2, c2] : b.terms()) {
      auto [d, kappa] = compose(d1, d2);
      r.add(d, c1 * c2 * weight(a.family(), kappa));
    }
  return r;
}

inline AlgebraElement multiply(Family fam, const Diagram& d1, const Diagram& d2) {
  return multiply(AlgebraElement::basis(fam, d1), AlgebraElement::basis(fam, d2));
}

// the part of a supported on diagrams of rank <= r
inline AlgebraElement rank_filter(const AlgebraElement& a, int r) {
  AlgebraElement out(a.family(), a.k());
  for (const auto& [d, c] : a.terms())
    if (rank(d) <= r) out.add(d, c);
  return out;
}

struct Expectation {
  int power = 0;
  Diagram eps;
};

// e_k d e_k = x^power (eps (x) 1) e_k, eps living on k - shift columns
inline Expectation conditional_expectation(Family fam, const Diagram& d) {
  if (!in_family(d, fam)) throw ValidationError("diagram not in family " + family_name(fam));
  const int k = d.k();
  const Diagram e = e_k(fam, k);
  auto [u, k1] = compose(d, e);
  auto [v, k2] = compose(e, u);
  const int kp = k - derived_shift(fam);
  // drop the last columns; what is left must be a diagram on kp columns
  std::vector<int> lab(2 * kp);
  for (int i = 1; i <= kp; ++i) {
    lab[i - 1] = v.label(i);
    lab[kp + i - 1] = v.label(k + i);
  }
  Expectation out{k1 + k2, Diagram::from_labels(kp, lab)};
  auto [w, k3] = compose(embed(out.eps, k - kp), e);
  if (w != v || k3 != 0 || !in_family(out.eps, fam))
    throw InternalError("conditional expectation failed to factor");
  return out;
}

struct Absorber {
  Diagram p;
  int ell = 0;
};

// p_t: same row partitions as t, every propagating block straightened to T u T'.
inline Absorber p_t(const Diagram& t) {
  if (!is_symmetric(t)) throw ValidationError("p_t needs a symmetric diagram");
  const int k = t.k();
  auto rows = block_rows(t);
  std::vector<int> lab(2 * k);
  const int nb = t.num_blocks();
  for (int i = 1; i <= k; ++i) {
    int b = t.label(i);
    lab[i - 1] = b;
    // the bottom copy of a propagating top part joins it; otherwise keep t's bottom block
    lab[k + i - 1] = (rows.top[b] && rows.bottom[b]) ? b : nb + t.label(k + i);
  }
  Absorber out{Diagram::from_labels(k, lab), 0};
  out.ell = compose(out.p, t).kappa;
  return out;
}

}  // namespace gelfand
