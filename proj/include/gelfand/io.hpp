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

// JSON and CSV serialisation.  Needs the single-header nlohmann json (vendor/json.hpp).

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gelfand/algebra.hpp"
#include "gelfand/format.hpp"
#include "gelfand/model.hpp"
#include "gelfand/symgroup.hpp"
#include "gelfand/verification.hpp"

namespace gelfand::io {

using json = nlohmann::json;

inline json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(v));
  return json(v.str());
}

inline BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
    }
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

inline json to_json(const Diagram& d) { return json{{"k", d.k()}, {"blocks", signed_blocks(d)}}; }

inline Diagram diagram_from_json(const json& j) {
  try {
    return from_signed_blocks(j.at("k").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad diagram json: ") + e.what());
  }
}

inline json to_json(const Poly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(json::array({it->first, bigint_to_json(it->second)}));
  return json{{"poly", terms}};
}

inline Poly poly_from_json(const json& j) {
  std::vector<Poly::Term> ts;
  try {
    for (const auto& t : j.at("poly")) ts.emplace_back(t.at(0).get<unsigned>(), bigint_from_json(t.at(1)));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad polynomial json: ") + e.what());
  }
  return Poly::from_terms(std::move(ts));
}

inline json to_json(const AlgebraElement& a) {
  json terms = json::array();
  for (const auto& [d, c] : a.terms()) terms.push_back(json::array({to_text(d), to_json(c)}));
  return json{{"k", a.k()}, {"family", family_name(a.family())}, {"terms", terms}};
}

inline AlgebraElement element_from_json(const json& j) {
  try {
    AlgebraElement a(parse_family(j.at("family").get<std::string>()), j.at("k").get<int>());
    for (const auto& t : j.at("terms")) a.add(parse_diagram(t.at(0).get<std::string>(), a.k()), poly_from_json(t.at(1)));
    return a;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad algebra element json: ") + e.what());
  }
}

inline json to_json(const SymmetricBasis& b) {
  json ds = json::array();
  for (const auto& d : b.diagrams) ds.push_back(to_text(d));
  return json{{"family", family_name(b.family)}, {"k", b.k}, {"r", b.r}, {"f", b.f}, {"diagrams", ds}};
}

inline json value_json(const Poly& p) { return to_json(p); }
inline json value_json(const Rational& q) { return json(to_string(q)); }

template <class S>
json to_json(const RepMatrixT<S>& m) {
  json rows = json::array();
  for (int i = 0; i < m.entries.size(); ++i) {
    json row = json::array();
    for (const auto& [c, v] : m.entries.row(i)) row.push_back(json::array({c, value_json(v)}));
    rows.push_back(row);
  }
  return json{{"basis", to_json(*m.basis)}, {"rows", rows}};
}

inline std::string value_text(const Poly& p) { return p.str(); }
inline std::string value_text(const Rational& q) { return to_string(q); }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// dense, one line per row
template <class S>
std::string to_csv(const RepMatrixT<S>& m) {
  std::ostringstream os;
  const int n = m.entries.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) os << (j ? "," : "") << csv_field(value_text(m.entries.at(i, j)));
    os << "\n";
  }
  return os.str();
}

inline json to_json(const CheckReport& r) {
  json params = json::object();
  for (const auto& [key, v] : r.params) params[key] = v;
  return json{{"check", r.check},
              {"family", family_name(r.family)},
              {"k", r.k},
              {"params", params},
              {"status", r.pass ? "pass" : "fail"},
              {"witness", r.pass ? json(nullptr) : json(r.witness)},
              {"ms", r.ms}};
}

inline std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.check << " " << family_name(r.family) << " k=" << r.k;
  for (const auto& [key, v] : r.params) os << " " << key << "=" << v;
  if (!r.pass) os << " witness: " << r.witness;
  return os.str();
}

inline json to_json(const SaxlTable& t) {
  json rows = json::array();
  for (const auto& lam : t.lambdas) {
    json m = json::object();
    for (int f : t.fs) m[std::to_string(f)] = bigint_to_json(t.at(f, lam));
    rows.push_back(json{{"lambda", lam.parts}, {"m", m}});
  }
  return json{{"k", t.k}, {"rows", rows}};
}

// rows lambda, columns f
inline std::string to_csv(const SaxlTable& t) {
  std::ostringstream os;
  os << "lambda";
  for (int f : t.fs) os << ",f=" << f;
  os << "\n";
  for (const auto& lam : t.lambdas) {
    os << csv_field(lam.str());
    for (int f : t.fs) os << "," << t.at(f, lam).str();
    os << "\n";
  }
  return os.str();
}

}  // namespace gelfand::io
