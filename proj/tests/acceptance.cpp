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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gelfand/gelfand.hpp"
#include "gelfand/io.hpp"

using namespace gelfand;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> checks;  // CheckReport::check names feeding into it
  std::vector<std::string> extra;   // failures from direct checks
  int ran = 0;
  std::string first_failure;
};

// planar families are exactly the planar members of their parents
std::vector<std::string> planarity_filter() {
  std::vector<std::string> bad;
  struct Pair { Family child, parent; int k; };
  for (auto [child, parent, k] : {Pair{Family::TemperleyLieb, Family::Brauer, 5}, Pair{Family::Motzkin, Family::RookBrauer, 4},
                                  Pair{Family::PlanarRook, Family::RookMonoid, 4}}) {
    long long n = 0;
    for_each_diagram(parent, k, [&](const Diagram& d) { n += is_planar(d); });
    long long want = (long long)enumerate(child, k).size();
    if (n != want)
      bad.push_back(family_name(child) + " k=" + std::to_string(k) + ": filtered " + std::to_string(n) + " vs " +
                    std::to_string(want));
  }
  return bad;
}

std::vector<std::string> tl_example() {
  Diagram d = tl_diagram({3, 4, 8, 9, 11}, 11);
  if (to_text(d) != fixtures::kTl11) return {"k=11 example gave " + to_text(d)};
  return {};
}

std::vector<std::string> drawn_fixtures() {
  std::vector<std::string> bad;
  auto c = compose(parse_diagram(fixtures::kComposeLeft, 12), parse_diagram(fixtures::kComposeRight, 12));
  if (c.kappa != fixtures::kComposeKappa || to_text(c.diagram) != fixtures::kComposeProduct)
    bad.push_back("composition: kappa " + std::to_string(c.kappa) + ", product " + to_text(c.diagram));

  auto s9 = act(parse_diagram(fixtures::kS9W, 9), parse_diagram(fixtures::kS9T, 9));
  if (s9.zero || s9.sign != -1 || to_text(s9.image) != fixtures::kS9Image)
    bad.push_back("S_9 conjugation: sign " + std::to_string(s9.sign) + ", image " + to_text(s9.image));

  auto p14 = act(parse_diagram(fixtures::kP14D, 14), parse_diagram(fixtures::kP14T, 14));
  Poly coeff = weight(Family::Partition, p14.kappa) * Poly(p14.sign);
  if (p14.zero || coeff != -Poly::x() || to_text(p14.image) != fixtures::kP14Image)
    bad.push_back("P_14 conjugation: coefficient " + coeff.str() + ", image " + to_text(p14.image));

  Diagram d2 = parse_diagram(fixtures::kFixedBlocks, 10);
  auto fb = fixed_blocks(d2);
  std::vector<Block> want{{6, 7, 10, 16, 17, 20}, {8, 18}};
  if (fb != want) bad.push_back("fixed blocks of d_2: found " + std::to_string(fb.size()));
  return bad;
}

}  // namespace

int main() {
  std::vector<Criterion> crit{
      {1, "algebra dimensions by enumeration", {"dimensions"}, planarity_filter()},
      {2, "symmetric diagram tables", {"symmetric_counts"}, {}},
      {3, "module axiom", {"module_axiom"}, {}},
      {4, "Saxl multiplicities", {"saxl"}, {}},
      {5, "Saxl vs APR characters", {"apr"}, {}},
      {6, "multiplicity-free models", {"multiplicity_free"}, {}},
      {7, "disjointness of ranks", {"disjointness"}, {}},
      {8, "character recursion", {"character_recursion"}, {}},
      {9, "absorption", {"absorption"}, {}},
      {10, "TL subset bijection", {"tl_bijection"}, tl_example()},
      {11, "drawn regression fixtures", {}, drawn_fixtures()},
      {12, "binomial-transform identities", {"sequences"}, {}},
  };

  auto reps = run_all(Config::acceptance());
  double total_ms = 0;
  for (const auto& r : reps) {
    total_ms += r.ms;
    for (auto& c : crit)
      for (const auto& name : c.checks)
        if (name == r.check) {
          ++c.ran;
          if (!r.pass && c.first_failure.empty()) c.first_failure = io::to_text(r);
        }
  }

  bool ok = true;
  for (auto& c : crit) {
    if (c.first_failure.empty() && !c.extra.empty()) c.first_failure = c.extra.front();
    if (c.checks.size() && c.ran == 0) c.first_failure = "no checks ran";
    bool pass = c.first_failure.empty();
    ok = ok && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
    if (c.ran) std::cout << " (" << c.ran << " checks)";
    if (!pass) std::cout << " -- " << c.first_failure;
    std::cout << "\n";
  }
  std::cout << "checks: " << reps.size() << ", " << int(total_ms) << " ms\n";
  return ok ? 0 : 1;
}
