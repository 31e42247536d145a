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

// Prints the multiplicity of each irreducible of S_k in each fixed-point
// piece of the involution model. Every column has exactly one 1 per row.
//
//   saxl_table [k]      default 5

#include <iomanip>
#include <iostream>
#include <string>

#include "gelfand/gelfand.hpp"

using namespace gelfand;

int main(int argc, char** argv) {
  int k = argc > 1 ? std::stoi(argv[1]) : 5;
  if (k < 0 || k > 9) {
    std::cerr << "k between 0 and 9, please\n";
    return 2;
  }
  SaxlTable tab = saxl_decomposition(k);
  std::cout << std::setw(16) << "lambda" << std::setw(6) << "dim";
  for (int f : tab.fs) std::cout << std::setw(5) << ("f=" + std::to_string(f));
  std::cout << "\n";
  for (const auto& lam : tab.lambdas) {
    std::cout << std::setw(16) << lam.str() << std::setw(6) << irreducible_dimension(lam);
    for (int f : tab.fs) std::cout << std::setw(5) << tab.at(f, lam).str();
    std::cout << "\n";
  }
  BigInt inv = 0;
  for (int f : tab.fs) inv += BigInt(involutions(k, f).size());
  std::cout << "involutions: " << inv << "\n";
}
