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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gelfand/gelfand.hpp"

using namespace gelfand;

TEST(Numbers, Examples) {
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(catalan(4), 14);
  EXPECT_EQ(motzkin(4), 9);
  EXPECT_EQ(bell(4), 15);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(matchings(6), 15);
  EXPECT_EQ(matchings(5), 0);
}

// closed forms against brute force on small sets
TEST(Numbers, AgreeWithEnumeration) {
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(bell(2 * k), BigInt(enumerate(Family::Partition, k).size()));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(catalan(k), BigInt(enumerate(Family::TemperleyLieb, k).size()));
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(motzkin(2 * k), BigInt(enumerate(Family::Motzkin, k).size()));
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(double_factorial(2 * k - 1), BigInt(enumerate(Family::Brauer, k).size()));
}

TEST(SymmetricCounts, PartitionTwo) {
  EXPECT_EQ(*predicted_symmetric_count(Family::Partition, 2, 0, 0), 2);
  EXPECT_EQ(*predicted_symmetric_count(Family::Partition, 2, 1, 1), 3);
  EXPECT_EQ(*predicted_symmetric_count(Family::Partition, 2, 2, 0), 1);
  EXPECT_EQ(*predicted_symmetric_count(Family::Partition, 2, 2, 2), 1);
  EXPECT_EQ(*predicted_total(Family::Partition, 2), 7);
}

TEST(SymmetricCounts, Examples) {
  EXPECT_EQ(*predicted_symmetric_count(Family::Brauer, 4, 2, 0), 6);
  EXPECT_EQ(*predicted_symmetric_count(Family::TemperleyLieb, 4, 0, 0), 2);
  EXPECT_EQ(*predicted_symmetric_count(Family::TemperleyLieb, 4, 2, 2), 3);
  EXPECT_EQ(*predicted_symmetric_count(Family::TemperleyLieb, 4, 2, 0), 0);
  EXPECT_FALSE(predicted_symmetric_count(Family::PlanarPartition, 3, 1, 1).has_value());
  EXPECT_EQ(*predicted_symmetric_count(Family::Partition, 3, 4, 0), 0);
}

// every graded piece, every family with a closed form
TEST(SymmetricCounts, MatchEnumeration) {
  for (auto fam : kAllFamilies) {
    if (fam == Family::PlanarPartition) continue;
    for (int k = 0; k <= 5; ++k) {
      auto bases = symmetric_bases(fam, k);
      for (int r = 0; r <= k; ++r)
        for (int f = 0; f <= r; ++f) {
          auto it = bases.find({r, f});
          long long got = it == bases.end() ? 0 : it->second.size();
          ASSERT_EQ(*predicted_symmetric_count(fam, k, r, f), got)
              << family_name(fam) << " k=" << k << " r=" << r << " f=" << f;
        }
    }
  }
}

TEST(Labels, Examples) {
  auto p2 = labels(Family::Partition, 2);
  EXPECT_EQ(p2.size(), 4u);
  auto tl5 = labels(Family::TemperleyLieb, 5);
  EXPECT_EQ(tl5.integers, (std::vector<int>{5, 3, 1}));
  EXPECT_EQ(labels(Family::Brauer, 4).size(), 8u);
  EXPECT_EQ(labels(Family::SymmetricGroup, 4).size(), 5u);
  EXPECT_EQ(labels(Family::Motzkin, 3).size(), 4u);
  EXPECT_THROW(labels(Family::PlanarPartition, 2), ValidationError);
}

TEST(Labels, OddParts) {
  EXPECT_EQ(partitions_with_odd(3, 3), 1);
  EXPECT_EQ(partitions_with_odd(3, 1), 2);
  EXPECT_EQ(partitions_with_odd(4, 1), 0);
  EXPECT_EQ(partitions_with_odd(0, 0), 1);
  // summing over f recovers p(r)
  for (int r = 0; r <= 9; ++r) {
    int s = 0;
    for (int f = 0; f <= r; ++f) s += partitions_with_odd(r, f);
    EXPECT_EQ(s, int(partitions(r).size()));
  }
}

TEST(TlBijection, Examples) {
  std::set<int> L{3, 4, 8, 9, 11};
  Diagram d = tl_diagram(L, 11);
  EXPECT_EQ(to_text(d), fixtures::kTl11);
  EXPECT_EQ(tl_subset(d), L);
  EXPECT_EQ(tl_diagram({2}, 2), identity(2));
  EXPECT_EQ(tl_diagram({1}, 2), parse_diagram("1 2 | -1 -2"));
  EXPECT_EQ(tl_diagram({}, 1), identity(1));
  EXPECT_THROW(tl_diagram({1, 2}, 2), ValidationError);
}

TEST(TlBijection, RoundTrips) {
  for (int k = 0; k <= 9; ++k) {
    long long n = 0;
    for_each_symmetric(Family::TemperleyLieb, k, [&](const Diagram& d) {
      ++n;
      auto L = tl_subset(d);
      ASSERT_EQ(int(L.size()), k / 2);
      ASSERT_EQ(tl_diagram(L, k), d);
    });
    EXPECT_EQ(BigInt(n), binomial(k, k / 2));
  }
}

TEST(Sequences, TablesAndTransforms) {
  using T = ReferenceTables;
  EXPECT_EQ(binomial_transform(T::s(), 5), 142);
  EXPECT_EQ(T::rb()[4], 76);
  EXPECT_EQ(T::m()[6], 267);
  EXPECT_EQ(T::pr(10), 1024);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(T::p()[k], fixtures::kP[k]);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(T::b()[k], fixtures::kB[k]);
  auto rep = sequence_checks(10);
  EXPECT_TRUE(rep.ok) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_THROW(sequence_checks(11), ValidationError);
}
