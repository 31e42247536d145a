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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gelfand/gelfand.hpp"

using namespace gelfand;

namespace {

Diagram D(const char* s) { return parse_diagram(s); }

}  // namespace

TEST(SymmetricBasis, Examples) {
  EXPECT_EQ(enumerate_symmetric(Family::Partition, 2, 1, 1).size(), 3);
  auto s = enumerate_symmetric(Family::SymmetricGroup, 4, 4, 4);
  ASSERT_EQ(s.size(), 1);
  EXPECT_EQ(s.diagrams[0], identity(4));
  EXPECT_EQ(enumerate_symmetric(Family::TemperleyLieb, 4, 2, 2).size(), 3);
  EXPECT_THROW(enumerate_symmetric(Family::Partition, 2, 3, 0), ValidationError);
}

TEST(SymmetricBasis, GradedPiecesPartitionTheSymmetricDiagrams) {
  for (auto fam : kAllFamilies) {
    auto bases = symmetric_bases(fam, 4);
    std::set<Diagram> seen;
    for (const auto& [key, b] : bases) {
      EXPECT_TRUE(std::is_sorted(b.diagrams.begin(), b.diagrams.end()));
      for (const auto& d : b.diagrams) {
        EXPECT_EQ(rank(d), key.first);
        EXPECT_EQ(num_fixed_blocks(d), key.second);
        EXPECT_TRUE(seen.insert(d).second);
      }
    }
    long long total = 0;
    for_each_symmetric(fam, 4, [&](const Diagram&) { ++total; });
    EXPECT_EQ((long long)seen.size(), total);
  }
}

TEST(Sign, IdentityActsTrivially) {
  for_each_symmetric(Family::Partition, 3, [](const Diagram& t) { EXPECT_EQ(sign_S(identity(3), t), 1); });
}

TEST(Sign, NineStrandConjugation) {
  Diagram w = parse_diagram(fixtures::kS9W, 9), t = parse_diagram(fixtures::kS9T, 9);
  EXPECT_EQ(sign_S(w, t), -1);
  auto r = act(w, t);
  ASSERT_FALSE(r.zero);
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.kappa, 0);
  EXPECT_EQ(to_text(r.image), fixtures::kS9Image);
  EXPECT_EQ(transpose(w), parse_diagram(fixtures::kS9WInverse, 9));
}

TEST(Sign, FourteenColumnSignedConjugation) {
  Diagram d = parse_diagram(fixtures::kP14D, 14), t = parse_diagram(fixtures::kP14T, 14);
  ASSERT_TRUE(is_symmetric(t));
  auto r = act(d, t);
  ASSERT_FALSE(r.zero);
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.kappa, 1);
  EXPECT_EQ(to_text(r.image), fixtures::kP14Image);
  // coefficient -x in the partition algebra
  EXPECT_EQ(weight(Family::Partition, r.kappa) * Poly(r.sign), -Poly::x());
}

TEST(Act, Examples) {
  Diagram s = D("1 -2 | 2 -1"), one = identity(2), e = D("1 -1 | 2 | -2");
  auto a = act(s, one);
  EXPECT_FALSE(a.zero);
  EXPECT_EQ(a.sign, -1);
  EXPECT_EQ(a.kappa, 0);
  EXPECT_EQ(a.image, one);
  EXPECT_TRUE(act(e, one).zero);
  auto b = act(e, e);
  EXPECT_FALSE(b.zero);
  EXPECT_EQ(b.kappa, 1);
  EXPECT_EQ(b.sign, 1);
  EXPECT_EQ(b.image, e);
}

TEST(RepresentationMatrix, Examples) {
  auto s2 = enumerate_symmetric(Family::SymmetricGroup, 2, 2, 2);
  auto m = representation_matrix(s2, D("1 -2 | 2 -1"));
  EXPECT_EQ(m.entries.at(0, 0), Poly(-1));
  auto tl = enumerate_symmetric(Family::TemperleyLieb, 2, 0, 0);
  auto E = D("1 2 | -1 -2");
  EXPECT_EQ(representation_matrix(tl, E).entries.at(0, 0), Poly::x());
  for (const auto& [key, b] : symmetric_bases(Family::Motzkin, 3))
    EXPECT_EQ(representation_matrix(b, identity(3)).entries, SparseMatrix<Poly>::identity(b.size()));
  EXPECT_THROW(representation_matrix(tl, identity(3)), DimensionError);
  EXPECT_THROW(representation_matrix(tl, D("1 -2 | 2 -1")), ValidationError);
}

TEST(RepresentationMatrix, ColumnsAreSignedMonomials) {
  for (const auto& [key, b] : symmetric_bases(Family::Partition, 3))
    for (const auto& d : enumerate(Family::Partition, 3))
      ASSERT_TRUE(action_matrix(b, d).is_column_monomial());
}

TEST(Character, Examples) {
  auto s2 = enumerate_symmetric(Family::SymmetricGroup, 2, 2, 0);
  EXPECT_EQ(model_character(s2, D("1 -2 | 2 -1")), Poly(1));
  auto tl = enumerate_symmetric(Family::TemperleyLieb, 2, 0, 0);
  EXPECT_EQ(model_character(tl, D("1 2 | -1 -2")), Poly::x());
  // top block vanishes below full rank
  for (int f : {0, 2}) {
    auto top = enumerate_symmetric(Family::Partition, 2, 2, f);
    for (const auto& d : enumerate(Family::Partition, 2))
      if (rank(d) < 2) EXPECT_TRUE(model_character(top, d).is_zero());
  }
}

TEST(Specialize, EvaluatesEntries) {
  auto tl = enumerate_symmetric(Family::TemperleyLieb, 2, 0, 0);
  auto m = specialize(representation_matrix(tl, D("1 2 | -1 -2")), Rational(7));
  EXPECT_EQ(m.entries.at(0, 0), Rational(7));
}

TEST(FindConjugator, FixesItself) {
  for_each_symmetric(Family::Brauer, 4, [](const Diagram& t) {
    Diagram d = find_conjugator(Family::Brauer, t, t);
    EXPECT_EQ(compose(compose(d, t).diagram, transpose(d)).diagram, t);
  });
}

TEST(FindConjugator, RookExample) {
  Diagram s = D("1 -1 | 2 | -2"), t = D("1 | 2 -2 | -1");
  Diagram d = find_conjugator(Family::RookMonoid, s, t);
  EXPECT_EQ(d, D("1 | 2 -1 | -2"));
  EXPECT_EQ(compose(compose(d, s).diagram, transpose(d)).diagram, t);
}

TEST(FindConjugator, BrauerContractionsMove) {
  Diagram s = D("1 2 | 3 -3 | 4 -4 | -1 -2"), t = D("1 -1 | 2 -2 | 3 4 | -3 -4");
  Diagram d = find_conjugator(Family::Brauer, s, t);
  auto r = act(d, s);
  ASSERT_FALSE(r.zero);
  EXPECT_EQ(r.image, t);
  EXPECT_TRUE(in_family(d, Family::Brauer));
}

TEST(FindConjugator, DrawnExamples) {
  for (const auto& c : fixtures::kConjugations) {
    Family fam = parse_family(c.family);
    Diagram d = D(c.d), s = D(c.s), dt = D(c.dt), t = D(c.t);
    EXPECT_EQ(transpose(d), dt) << c.family;
    EXPECT_EQ(compose(compose(d, s).diagram, dt).diagram, t) << c.family;
    // the construction lands on the drawn conjugator
    EXPECT_EQ(find_conjugator(fam, s, t), d) << c.family;
  }
}

TEST(FindConjugator, RejectsMismatchedShapes) {
  EXPECT_THROW(find_conjugator(Family::Partition, identity(2), D("1 -1 | 2 | -2")), NoConjugatorError);
  EXPECT_THROW(find_conjugator(Family::Partition, identity(2), D("1 -2 | 2 | -1")), ValidationError);
}

// every block is one orbit: find_conjugator succeeds between any two members
TEST(ModelProperties, OrbitsAreTransitive) {
  for (auto fam : {Family::Partition, Family::RookBrauer, Family::Motzkin, Family::SymmetricGroup}) {
    for (const auto& [key, b] : symmetric_bases(fam, 3))
      for (const auto& s : b.diagrams)
        for (const auto& t : b.diagrams) {
          Diagram d = find_conjugator(fam, s, t);
          ASSERT_EQ(act(d, s).image, t);
        }
  }
}

TEST(ModelProperties, SignIsMultiplicative) {
  std::mt19937_64 rng(20260101);
  auto all = enumerate(Family::Partition, 3);
  std::vector<Diagram> sym;
  for_each_symmetric(Family::Partition, 3, [&](const Diagram& t) { sym.push_back(t); });
  for (int i = 0; i < 3000; ++i) {
    const Diagram& a = all[rng() % all.size()];
    const Diagram& b = all[rng() % all.size()];
    const Diagram& t = sym[rng() % sym.size()];
    auto bt = act(b, t);
    if (bt.zero) continue;
    auto abt = act(a, bt.image);
    auto ab = compose(a, b).diagram;
    auto direct = act(ab, t);
    ASSERT_EQ(abt.zero, direct.zero);
    if (direct.zero) continue;
    ASSERT_EQ(direct.image, abt.image);
    ASSERT_EQ(direct.sign, abt.sign * bt.sign) << to_text(a) << " ; " << to_text(b) << " ; " << to_text(t);
  }
}

// kappa(d, t) equals kappa(t, d^T) by mirror symmetry
TEST(ModelProperties, MirrorKappa) {
  std::vector<Diagram> sym;
  for_each_symmetric(Family::Partition, 3, [&](const Diagram& t) { sym.push_back(t); });
  for (const auto& d : enumerate(Family::Partition, 3))
    for (const auto& t : sym) {
      auto u = compose(d, t);
      auto v = compose(u.diagram, transpose(d));
      ASSERT_EQ(compose(t, transpose(d)).kappa, u.kappa);
      (void)v;
    }
}

// restricting a family's model to a subfamily diagram gives the same matrix
TEST(ModelProperties, RestrictionConsistency) {
  auto p = symmetric_bases(Family::Partition, 3);
  auto b = symmetric_bases(Family::Brauer, 3);
  for (const auto& [key, bb] : b) {
    const auto& pb = p.at(key);
    for (const auto& d : enumerate(Family::Brauer, 3)) {
      auto small = action_matrix(bb, d);
      auto big = action_matrix(pb, d);
      // Brauer basis is closed under Brauer diagrams: entries agree on the sub-basis
      for (int c = 0; c < bb.size(); ++c)
        for (int r = 0; r < bb.size(); ++r)
          ASSERT_EQ(small.at(r, c), big.at(pb.index_of(bb.diagrams[r]), pb.index_of(bb.diagrams[c])));
    }
  }
}
