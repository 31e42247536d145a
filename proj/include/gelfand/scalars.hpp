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
#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gelfand/error.hpp"

namespace gelfand {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parse "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("not a rational number: '" + s + "'");
  }
}

inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Integer polynomial in x.  Terms kept sorted by exponent, no zero coefficients.
class Poly {
 public:
  using Term = std::pair<unsigned, BigInt>;

  Poly() = default;
  Poly(long long c) {  // NOLINT: implicit from integers is convenient
    if (c != 0) terms_.emplace_back(0u, BigInt(c));
  }
  explicit Poly(const BigInt& c) {
    if (c != 0) terms_.emplace_back(0u, c);
  }

  static Poly monomial(const BigInt& c, unsigned e) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }
  static Poly x_pow(unsigned e) { return monomial(BigInt(1), e); }
  static Poly x() { return x_pow(1); }

  // from (exponent, coefficient) pairs in any order, duplicates summed
  static Poly from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p;
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : int(terms_.back().first); }

  BigInt coeff(unsigned e) const {
    for (const auto& t : terms_)
      if (t.first == e) return t.second;
    return 0;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = combine(*this, o, 1); }
  Poly& operator-=(const Poly& o) { return *this = combine(*this, o, -1); }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, 1); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, -1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // monomial fast path, the common case in model matrices
    if (a.terms_.size() == 1 && b.terms_.size() == 1)
      return monomial(a.terms_[0].second * b.terms_[0].second,
                      a.terms_[0].first + b.terms_[0].first);
    std::vector<Term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) ts.emplace_back(s.first + t.first, s.second * t.second);
    return from_terms(std::move(ts));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rational evaluate(const Rational& x0) const {
    Rational acc = 0;
    unsigned e = degree() < 0 ? 0 : unsigned(degree());
    auto it = terms_.rbegin();
    // Horner over every exponent from the top down
    for (long long i = e; i >= 0; --i) {
      acc *= x0;
      if (it != terms_.rend() && it->first == unsigned(i)) {
        acc += Rational(it->second);
        ++it;
      }
    }
    return acc;
  }

  // "c_d*x^d + ... + c_0"; unit coefficients are dropped
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      BigInt c = it->second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string mono;
      if (it->first == 1)
        mono = "x";
      else if (it->first > 1)
        mono = "x^" + std::to_string(it->first);
      if (mono.empty())
        out += c.str();
      else if (c == 1)
        out += mono;
      else
        out += c.str() + "*" + mono;
    }
    return out;
  }

 private:
  static Poly combine(const Poly& a, const Poly& b, int sb) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, sb > 0 ? b.terms_[j].second : BigInt(-b.terms_[j].second));
        ++j;
      } else {
        BigInt c = a.terms_[i].second;
        if (sb > 0)
          c += b.terms_[j].second;
        else
          c -= b.terms_[j].second;
        if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

inline Rational evaluate(const Poly& p, const Rational& x0) { return p.evaluate(x0); }

// Parse the text form written by Poly::str (also tolerates missing spaces).
inline Poly parse_poly(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw ValidationError("empty polynomial");
  std::vector<Poly::Term> ts;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("bad polynomial '" + text + "' at " + std::to_string(i) + ": " + why);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!ts.empty()) {
      fail("expected sign");
    }
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    BigInt c = 1;
    bool have_c = j > i;
    if (have_c) c = BigInt(s.substr(i, j - i));
    i = j;
    unsigned e = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_c) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'x') fail("expected x");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected exponent");
        e = unsigned(std::stoul(s.substr(i, j - i)));
        i = j;
      }
    } else if (!have_c) {
      fail("expected term");
    }
    ts.emplace_back(e, sign * c);
  }
  return Poly::from_terms(std::move(ts));
}

}  // namespace gelfand
