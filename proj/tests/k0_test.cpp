/*
 * Copyright 2026 The gl2modrep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include <thread>

#include "gl2modrep/brauer.hpp"
#include "gl2modrep/k0.hpp"
#include "gl2modrep/verify.hpp"

namespace gl2modrep {
namespace {

VirtualRep L(const PrimePower& pp, std::int64_t m, std::vector<int> ks, Integer c = 1) {
  return VirtualRep::label(pp, BasisLabel{m, std::move(ks)}, c);
}

Expr sym_expr(std::int64_t k, std::int64_t twist = 0) { return expr_term(1, 0, {{k, twist}}); }

TEST(LabelCodec, RoundTrip) {
  for (auto [p, g] : {std::pair{3, 1}, {3, 2}, {5, 2}, {2, 3}}) {
    const auto pp = PrimePower::make(p, g);
    const LabelCodec codec(pp);
    EXPECT_EQ(codec.size(), static_cast<std::uint32_t>((pp.q - 1) * pp.q));
    for (std::uint32_t c = 0; c < codec.size(); ++c) {
      const BasisLabel l = codec.decode(c);
      EXPECT_EQ(codec.encode(l.m, l.ks), c);
      EXPECT_EQ(codec.m_of(c), l.m);
      for (int i = 0; i < g; ++i) EXPECT_EQ(codec.k_at(c, i), l.ks[i]);
    }
  }
}

TEST(VirtualRep, Arithmetic) {
  const auto pp = PrimePower::make(3, 2);
  const VirtualRep a = L(pp, 0, {1, 0}) + L(pp, 2, {0, 2}, 3);
  const VirtualRep b = L(pp, 2, {0, 2}, -3);
  EXPECT_EQ(a + b, L(pp, 0, {1, 0}));
  EXPECT_EQ(a - a, VirtualRep(pp));
  EXPECT_EQ(-(-a), a);
  EXPECT_EQ(a * 2, a + a);
  EXPECT_EQ(a.coeff(BasisLabel{2, {0, 2}}), 3);
  EXPECT_EQ(a.coeff(BasisLabel{1, {0, 2}}), 0);
  EXPECT_EQ(dim(a), 2 + 3 * 3);
  EXPECT_THROW(L(pp, 0, {3, 0}), ArgumentError);
  EXPECT_EQ(L(pp, 8, {0, 0}), L(pp, 0, {0, 0}));
}

TEST(VirtualRep, FromEntriesMergesAndDropsZeros) {
  const auto pp = PrimePower::make(3, 1);
  const auto v = VirtualRep::from_entries(pp, {{4, 2}, {1, 1}, {4, -2}, {1, 1}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.entries()[0], (VirtualRep::Entry{1, 2}));
}

TEST(VirtualRep, Text) {
  const auto pp = PrimePower::make(3, 2);
  EXPECT_EQ(to_text(VirtualRep(pp)), "0");
  EXPECT_EQ(to_text(L(pp, 0, {0, 0})), "1");
  EXPECT_EQ(to_text(L(pp, 1, {1, 0}) + L(pp, 0, {0, 1})), "M1^[1] + e*M1");
  EXPECT_EQ(to_text(L(pp, 3, {2, 1}, -2)), "-2*e^3*M2*M1^[1]");
}

TEST(VirtualRep, DetShiftAndTwist) {
  const auto pp = PrimePower::make(3, 2);
  const VirtualRep v = L(pp, 1, {2, 1}) + L(pp, 5, {0, 1}, -1);
  EXPECT_EQ(det_shift(v, pp.q - 1), v);
  EXPECT_EQ(det_shift(det_shift(v, 3), -3), v);
  EXPECT_EQ(frobenius_twist(v, 0), v);
  EXPECT_EQ(frobenius_twist(v, pp.g), v);
  // (m; k0, k1) -> (mp mod q-1; k1, k0)
  EXPECT_EQ(frobenius_twist(L(pp, 1, {2, 1}), 1), L(pp, 3, {1, 2}));
}

TEST(Normalizer, SmallSymmetricPowers) {
  const auto pp32 = PrimePower::make(3, 2);
  Normalizer n32(pp32);
  EXPECT_EQ(n32.sym(3), L(pp32, 0, {0, 1}) + L(pp32, 1, {1, 0}));
  EXPECT_EQ(n32.sym(-1), VirtualRep(pp32));
  EXPECT_EQ(n32.sym(-2), L(pp32, pp32.q - 2, {0, 0}, -1));
  EXPECT_EQ(n32.sym(2, 1), L(pp32, 0, {0, 2}));

  const auto pp31 = PrimePower::make(3, 1);
  Normalizer n31(pp31);
  EXPECT_EQ(n31.sym(3), L(pp31, 0, {1}) + L(pp31, 1, {1}));

  const auto pp51 = PrimePower::make(5, 1);
  Normalizer n51(pp51);
  EXPECT_TRUE(char_equal(n51.sym(5), sym_expr(5)));
}

TEST(Normalizer, Products) {
  const auto pp31 = PrimePower::make(3, 1);
  Normalizer n31(pp31);
  const auto m1 = n31.sym(1), m2 = n31.sym(2);
  EXPECT_EQ(n31.mul(m1, m1), L(pp31, 0, {2}) + L(pp31, 1, {0}));
  EXPECT_EQ(n31.mul(m1, m2), n31.sym(3) + L(pp31, 1, {1}));
  EXPECT_EQ(n31.mul(m1, L(pp31, 0, {0})), m1);

  const auto pp32 = PrimePower::make(3, 2);
  Normalizer n32(pp32);
  const Expr x = {RawTerm::from_ks(1, 0, {3, 3})};
  const VirtualRep v = n32.normalize(x);
  EXPECT_EQ(dim(v), 16);
  EXPECT_TRUE(char_equal(v, x));
}

TEST(Normalizer, Properties) {
  for (auto [p, g] : {std::pair{3, 1}, {3, 2}, {5, 1}, {5, 2}, {3, 3}}) {
    const auto pp = PrimePower::make(p, g);
    Normalizer norm(pp);
    for (std::int64_t k = 0; k <= 30; ++k) EXPECT_EQ(dim(norm.sym(k)), k + 1) << "k=" << k;
    EXPECT_EQ(dim(norm.sym(-2)), -1);
    for (std::int64_t k = -6; k <= 3 * p; ++k) {
      const VirtualRep v = norm.sym(k, g - 1);
      // standard forms are fixed points of the rewriter
      Expr again;
      for (const auto& [l, c] : v.terms()) {
        std::vector<std::int64_t> ks(l.ks.begin(), l.ks.end());
        again.push_back(RawTerm::from_ks(c, l.m, ks));
      }
      EXPECT_EQ(norm.normalize(again), v);
      EXPECT_TRUE(char_equal(v, sym_expr(k, g - 1)));
      EXPECT_EQ(norm.sym(k, g - 1), frobenius_twist(norm.sym(k), g - 1));
    }
    for (std::int64_t a = 0; a < 2 * p; a += 2) {
      for (std::int64_t b = 1; b < 2 * p; b += 3) {
        const VirtualRep x = norm.sym(a), y = norm.sym(b, g > 1 ? 1 : 0);
        EXPECT_EQ(norm.mul(x, y), norm.mul(y, x));
        EXPECT_EQ(norm.mul(x, y), norm.normalize(sym_expr(a) * sym_expr(b, g > 1 ? 1 : 0)));
      }
    }
  }
}

TEST(Normalizer, SerreAndFrobeniusRulesAgree) {
  for (std::int64_t p : {3, 5, 7}) {
    const auto pp = PrimePower::make(p, 1);
    Normalizer frob(pp, RuleSet::kFrobenius), serre(pp, RuleSet::kSerre);
    for (std::int64_t k = -3 * p; k <= 6 * p; ++k) EXPECT_EQ(frob.sym(k), serre.sym(k)) << k;
  }
  EXPECT_THROW(Normalizer(PrimePower::make(3, 2), RuleSet::kSerre), ArgumentError);
}

TEST(Normalizer, ConcurrentUseMatchesSequential) {
  const auto pp = PrimePower::make(5, 2);
  Normalizer shared(pp), fresh(pp);
  std::vector<VirtualRep> out(8 * 40);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int k = 0; k < 40; ++k) out[t * 40 + k] = shared.sym(k + t, t % 2);
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) {
    for (int k = 0; k < 40; ++k) EXPECT_EQ(out[t * 40 + k], fresh.sym(k + t, t % 2));
  }
  EXPECT_GT(shared.memo_entries(), 0u);
}

TEST(Identity, Names) {
  for (auto id : {Identity::kDelta, Identity::kSigma, Identity::kPi, Identity::kPhi,
                  Identity::kPhiPrime, Identity::kInttt}) {
    EXPECT_EQ(parse_identity(identity_name(id)), id);
  }
  EXPECT_EQ(parse_identity("phi'"), Identity::kPhiPrime);
  EXPECT_THROW(parse_identity("omega"), ArgumentError);
}

TEST(Identity, Examples) {
  {
    Normalizer norm(PrimePower::make(5, 1));
    EXPECT_TRUE(verify_identity(norm, Identity::kSigma, {7}));
  }
  {
    const auto pp = PrimePower::make(3, 2);
    Normalizer norm(pp);
    const IdentityCheck c = check_identity(norm, Identity::kPhi, {3});
    EXPECT_TRUE(c.holds());
    EXPECT_EQ(c.lhs, L(pp, 0, {0, 1}) + L(pp, 1, {1, 0}));
    for (std::int64_t k = -5; k <= 15; ++k) {
      const auto inst = identity_instance(pp, Identity::kPhi, {k});
      EXPECT_TRUE(char_equal(pp, inst.lhs, inst.rhs));
    }
  }
  {
    Normalizer norm(PrimePower::make(3, 2));
    for (std::int64_t m = 0; m < 6; ++m) EXPECT_TRUE(verify_identity(norm, Identity::kPi, {0, m}));
  }
  Normalizer norm(PrimePower::make(3, 1));
  EXPECT_THROW(verify_identity(norm, Identity::kPi, {1}), ArgumentError);
}

// A deliberately wrong rewrite must be caught by the character route.
TEST(Identity, CharacterRouteDetectsMistakes) {
  const auto pp = PrimePower::make(3, 2);
  const Expr right = sym_expr(3);
  const Expr wrong = expr_term(1, 0, {{1, 1}}) + expr_term(1, 0, {{1, 0}});
  EXPECT_FALSE(char_equal(pp, right, wrong));
}

}  // namespace
}  // namespace gl2modrep
