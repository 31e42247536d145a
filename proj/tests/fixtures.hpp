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

// Hand-transcribed reference diagrams.  Values are frozen; do not regenerate from the library.

namespace fixtures {

// twelve-column composition, kappa = 1
inline constexpr const char* kComposeLeft =
    "1 3 -4 -6 | 2 | 4 7 | 5 -1 -5 | 6 -9 | 8 -7 | 9 10 -12 | 11 | 12 -10 | -2 -3 | -8 -11";
inline constexpr const char* kComposeRight =
    "1 -1 -3 -5 | 2 11 | 3 8 | 4 -2 | 5 6 | 7 -12 | 9 10 | 12 | -4 | -6 -7 -9 | -8 | -10 | -11";
inline constexpr const char* kComposeProduct =
    "1 3 5 -1 -2 -3 -5 | 2 | 4 7 | 6 12 | 8 -12 | 9 10 | 11 | -4 | -6 -7 -9 | -8 | -10 | -11";
inline constexpr int kComposeKappa = 1;

// S_9 conjugation: w t w^-1, induced sign -1
inline constexpr const char* kS9W = "1 -3 | 2 -7 | 3 -1 | 4 -5 | 5 -2 | 6 -4 | 7 -8 | 8 -9 | 9 -6";
inline constexpr const char* kS9T = "1 -3 | 2 -2 | 3 -1 | 4 -6 | 5 -5 | 6 -4 | 7 -7 | 8 -9 | 9 -8";
inline constexpr const char* kS9Image = "1 -3 | 2 -2 | 3 -1 | 4 -4 | 5 -5 | 6 -9 | 7 -8 | 8 -7 | 9 -6";
inline constexpr const char* kS9WInverse = "1 -3 | 2 -5 | 3 -1 | 4 -6 | 5 -4 | 6 -9 | 7 -2 | 8 -7 | 9 -8";

// P_14 signed conjugation, coefficient -x
inline constexpr const char* kP14D =
    "1 2 3 -1 -2 | 4 6 -12 | 5 | 7 -5 | 8 11 12 14 -6 | 9 -3 | 10 13 | -4 | -7 -9 -10 -11 | -8 | -13 | -14";
inline constexpr const char* kP14T =
    "1 2 -5 | 3 4 10 -3 -4 -10 | 5 -1 -2 | 6 8 -6 -8 | 7 | 9 11 | 12 14 -12 -14 | 13 | -7 | -9 -11 | -13";
inline constexpr const char* kP14Image =
    "1 2 3 -7 | 4 6 -4 -6 | 5 | 7 -1 -2 -3 | 8 11 12 14 -8 -11 -12 -14 | 9 -9 | 10 13 | -5 | -10 -13";
inline constexpr const char* kP14DT =
    "1 2 -1 -2 -3 | 3 -9 | 4 | 5 -7 | 6 -8 -11 -12 -14 | 7 9 10 11 | 8 | 12 -4 -6 | 13 | 14 | -5 | -10 -13";

// ten columns, two fixed blocks {8,8'} and {6,7,10,6',7',10'}
inline constexpr const char* kFixedBlocks =
    "1 -3 | 2 -4 -5 | 3 -1 | 4 5 -2 | 6 7 10 -6 -7 -10 | 8 -8 | 9 | -9";
inline constexpr const char* kFixedBlocksD1 =
    "1 -3 -4 | 2 3 -1 -2 | 4 -6 | 5 -5 | 6 7 | 8 | 9 -10 | 10 -8 | -7 -9";
inline constexpr const char* kFixedBlocksD1T =
    "1 2 -2 -3 | 3 4 -1 | 5 -5 | 6 -4 | 7 9 | 8 -10 | 10 -9 | -6 -7 | -8";

// sixteen columns: t and its absorber p_t
inline constexpr const char* kAbsorberT =
    "1 3 4 -6 -7 -8 | 2 | 5 | 6 7 8 -1 -3 -4 | 9 11 13 | 10 12 | 14 16 -14 -16 | 15 -15 | -2 | -5 | -9 -11 -13 | -10 -12";
inline constexpr const char* kAbsorberP =
    "1 3 4 -1 -3 -4 | 2 | 5 | 6 7 8 -6 -7 -8 | 9 11 13 | 10 12 | 14 16 -14 -16 | 15 -15 | -2 | -5 | -9 -11 -13 | -10 -12";

// essential idempotents at k = 6
inline constexpr const char* kE6Pair = "1 -1 | 2 -2 | 3 -3 | 4 -4 | 5 6 | -5 -6";
inline constexpr const char* kE6Single = "1 -1 | 2 -2 | 3 -3 | 4 -4 | 5 -5 | 6 | -6";

// one sample per family, ten columns
struct FamilySample {
  const char* text;
  const char* families;  // every family containing it
};
inline constexpr FamilySample kFamilySamples[] = {
    {"1 3 -1 -2 | 2 | 4 8 -3 -5 | 5 6 | 7 | 9 | 10 -6 -7 -8 -10 | -4 | -9", "partition planar-partition"},
    {"1 -2 | 2 -4 | 3 -5 | 4 -6 | 5 -1 | 6 -8 | 7 -3 | 8 -9 | 9 -10 | 10 -7", "partition symmetric-group brauer rook rook-brauer"},
    {"1 3 | 2 -4 | 4 8 | 5 6 | 7 -9 | 9 -10 | 10 -8 | -1 -3 | -2 -6 | -5 -7", "partition brauer rook-brauer"},
    {"1 2 | 3 -5 | 4 7 | 5 6 | 8 -6 | 9 -7 | 10 -10 | -1 -4 | -2 -3 | -8 -9", "partition planar-partition brauer rook-brauer tl motzkin"},
    {"1 4 | 2 -4 | 3 8 | 5 | 6 | 7 -10 | 9 | 10 -8 | -1 -3 | -2 -6 | -5 -7 | -9", "partition rook-brauer"},
    {"1 2 | 3 -5 | 4 | 5 6 | 7 | 8 -6 | 9 | 10 -10 | -1 -4 | -2 -3 | -7 | -8 -9", "partition planar-partition rook-brauer motzkin"},
    {"1 -2 | 2 | 3 -5 | 4 | 5 -1 | 6 -8 | 7 -3 | 8 -9 | 9 -10 | 10 -7 | -4 | -6", "partition rook rook-brauer"},
    {"1 -2 | 2 | 3 -3 | 4 | 5 -4 | 6 -5 | 7 -7 | 8 -9 | 9 | 10 -10 | -1 | -6 | -8", "partition planar-partition rook rook-brauer motzkin planar-rook"},
};

// conjugation d s d^T = t in three families
struct Conjugation {
  const char* family;
  const char* d;
  const char* s;
  const char* dt;
  const char* t;
};
inline constexpr Conjugation kConjugations[] = {
    {"partition", "1 3 4 7 -1 -3 -5 | 2 8 9 | 5 -4 -6 | 6 -11 -12 | 10 11 12 -8 -10 | -2 | -7 -9",
     "1 3 5 -1 -3 -5 | 2 | 4 6 -8 -10 | 7 9 | 8 10 -4 -6 | 11 12 -11 -12 | -2 | -7 -9",
     "1 3 5 -1 -3 -4 -7 | 2 | 4 6 -5 | 7 9 | 8 10 -10 -11 -12 | 11 12 -6 | -2 -8 -9",
     "1 3 4 7 -1 -3 -4 -7 | 2 8 9 | 5 -10 -11 -12 | 6 -6 | 10 11 12 -5 | -2 -8 -9"},
    {"brauer", "1 -1 | 2 8 | 3 4 | 5 -3 | 6 -10 | 7 -2 | 9 -13 | 10 13 | 11 -5 | 12 -6 | 14 -9 | -4 -7 | -8 -12 | -11 -14",
     "1 -3 | 2 -5 | 3 -1 | 4 7 | 5 -2 | 6 -9 | 8 12 | 9 -6 | 10 -10 | 11 14 | 13 -13 | -4 -7 | -8 -12 | -11 -14",
     "1 -1 | 2 -7 | 3 -5 | 4 7 | 5 -11 | 6 -12 | 8 12 | 9 -14 | 10 -6 | 11 14 | 13 -9 | -2 -8 | -3 -4 | -10 -13",
     "1 -5 | 2 8 | 3 4 | 5 -1 | 6 -6 | 7 -11 | 9 -9 | 10 13 | 11 -7 | 12 -14 | 14 -12 | -2 -8 | -3 -4 | -10 -13"},
    {"tl", "1 -3 | 2 -10 | 3 8 | 4 7 | 5 6 | 9 -11 | 10 13 | 11 12 | 14 -14 | -1 -2 | -4 -9 | -5 -6 | -7 -8 | -12 -13",
     "1 2 | 3 -3 | 4 9 | 5 6 | 7 8 | 10 -10 | 11 -11 | 12 13 | 14 -14 | -1 -2 | -4 -9 | -5 -6 | -7 -8 | -12 -13",
     "1 2 | 3 -1 | 4 9 | 5 6 | 7 8 | 10 -2 | 11 -9 | 12 13 | 14 -14 | -3 -8 | -4 -7 | -5 -6 | -10 -13 | -11 -12",
     "1 -1 | 2 -2 | 3 8 | 4 7 | 5 6 | 9 -9 | 10 13 | 11 12 | 14 -14 | -3 -8 | -4 -7 | -5 -6 | -10 -13 | -11 -12"},
};

// TL_11 subset {3,4,8,9,11}
inline constexpr const char* kTl11 = "1 -1 | 2 -2 | 3 6 | 4 5 | 7 -7 | 8 -8 | 9 10 | 11 -11 | -3 -6 | -4 -5 | -9 -10";

// reference sequences of symmetric-diagram totals, k = 0..
inline constexpr long long kS[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
inline constexpr long long kP[] = {1, 2, 7, 31, 164, 999};
inline constexpr long long kB[] = {1, 1, 3, 7, 25, 81, 331, 1303};
inline constexpr long long kR[] = {1, 2, 5, 14, 43, 142, 499, 1850};
inline constexpr long long kRB[] = {1, 2, 6, 20, 76, 312, 1384};
inline constexpr long long kTL[] = {1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252};
inline constexpr long long kM[] = {1, 2, 5, 13, 35, 96, 267, 750};

}  // namespace fixtures
