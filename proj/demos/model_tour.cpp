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

// Walks through the Gelfand model of one diagram algebra: the graded blocks,
// a few signed actions, and the commutant that certifies multiplicity-freeness.
//
//   model_tour [family] [k]      defaults: brauer 3

#include <iostream>
#include <string>

#include "gelfand/gelfand.hpp"

using namespace gelfand;

int main(int argc, char** argv) {
  try {
    Family fam = parse_family(argc > 1 ? argv[1] : "brauer");
    int k = argc > 2 ? std::stoi(argv[2]) : 3;

    auto all = enumerate(fam, k);
    std::cout << family_name(fam) << " k=" << k << ": " << all.size() << " diagrams\n";

    auto bases = symmetric_bases(fam, k);
    for (const auto& [key, b] : bases) {
      std::cout << "block (" << key.first << "," << key.second << "): " << b.size() << " symmetric diagrams\n";
      for (const auto& t : b.diagrams) std::cout << "    " << to_text(t) << "\n";
    }

    // how the first few generators move things around
    int shown = 0;
    for (const auto& d : all) {
      if (d == identity(k) || shown == 3) continue;
      ++shown;
      std::cout << "\nd = " << to_text(d) << "\n";
      for (const auto& [key, b] : bases)
        for (const auto& t : b.diagrams) {
          auto a = act(d, t);
          if (a.zero) continue;
          Poly c = weight(fam, a.kappa) * Poly(a.sign);
          std::cout << "    d . [" << to_text(t) << "] = " << c << " [" << to_text(a.image) << "]\n";
        }
    }

    if (fam != Family::PlanarPartition) {
      auto rep = check_multiplicity_free(fam, k);
      std::cout << "\n" << (rep.pass ? "multiplicity-free" : "NOT multiplicity-free");
      for (const auto& [key, v] : rep.params) std::cout << "  " << key << "=" << v;
      std::cout << "  (" << labels(fam, k).size() << " irreducibles)\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
