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

#include "gl2modrep/brauer.hpp"
#include "gl2modrep/k0.hpp"

namespace gl2modrep {
namespace {

BrauerOracle make_oracle(std::int64_t p, std::int64_t g) {
  return BrauerOracle(std::make_shared<const FieldCtx>(p, g));
}

CycloInt z(const BrauerOracle& o, std::int64_t e) { return CycloInt::zeta_pow(o.ring(), e); }

TEST(RegularClasses, Counts) {
  for (auto [p, g, want] : {std::tuple{3, 1, 6}, {5, 1, 20}, {3, 2, 72}, {2, 2, 12}}) {
    const FieldCtx F(p, g);
    const auto cls = regular_classes(F);
    EXPECT_EQ(static_cast<int>(cls.size()), want);
    const std::int64_t q = F.q();
    int central = 0, split = 0, nonsplit = 0;
    for (const auto& c : cls) {
      central += c.kind == ConjClass::Kind::kCentral;
      split += c.kind == ConjClass::Kind::kSplit;
      nonsplit += c.kind == ConjClass::Kind::kNonSplit;
    }
    EXPECT_EQ(central, q - 1);
    EXPECT_EQ(split, (q - 1) * (q - 2) / 2);
    EXPECT_EQ(nonsplit, (q * q - q) / 2);
  }
}

TEST(BrauerOracle, SymmetricPowerValues) {
  const auto o = make_oracle(3, 2);
  const std::int64_t q = 9;
  for (const auto& c : o.classes()) {
    switch (c.kind) {
      case ConjClass::Kind::kCentral:
        if (c.u == 0) {
          for (std::int64_t k = 0; k < 12; ++k) {
            EXPECT_EQ(o.char_sym(k, c), CycloInt::from_int(o.ring(), k + 1));
          }
        }
        break;
      case ConjClass::Kind::kSplit:
        EXPECT_EQ(o.char_sym(1, c), z(o, c.u) + z(o, c.v));
        EXPECT_EQ(o.char_term(RawTerm{1, 1, {}}, c), z(o, c.u + c.v));
        break;
      case ConjClass::Kind::kNonSplit:
        EXPECT_EQ(c.v, c.u * q % o.ctx().M());
        EXPECT_EQ(o.char_sym(1, c), z(o, c.u) + z(o, c.u * q));
        EXPECT_EQ(o.char_sym(1, c, 1), z(o, c.u * 3) + z(o, c.u * 3 * q));
        break;
    }
    EXPECT_EQ(o.char_sym(0, c), CycloInt::from_int(o.ring(), 1));
    EXPECT_TRUE(o.char_sym(-1, c).is_zero());
  }
}

TEST(BrauerOracle, VirtualReps) {
  const auto pp = PrimePower::make(3, 2);
  const auto o = make_oracle(3, 2);
  Normalizer norm(pp);
  EXPECT_TRUE(o.char_vrep(VirtualRep(pp)).is_zero());
  const VirtualRep mp = norm.sym(3);
  EXPECT_EQ(o.char_vrep(mp), o.char_expr(expr_term(1, 0, {{3, 0}})));
  EXPECT_EQ(o.char_vrep(mp).values[0], CycloInt::from_int(o.ring(), 4));
  const Expr m0 = expr_term(1, 0, {}), em0 = expr_term(1, 1, {});
  EXPECT_TRUE(o.char_equal(m0, m0));
  EXPECT_FALSE(o.char_equal(m0, em0));
}

// The group-ring image must agree with the per-class evaluation on whether
// two expressions have equal characters.
TEST(GroupRingImage, AgreesWithClassValues) {
  for (auto [p, g] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    const auto pp = PrimePower::make(p, g);
    const auto o = make_oracle(p, g);
    std::vector<Expr> exprs;
    for (std::int64_t k = -3; k <= 2 * p + 1; ++k) {
      for (std::int64_t m = 0; m < 3; ++m) {
        exprs.push_back(expr_term(1, m, {{k, 0}}));
        if (g > 1) exprs.push_back(expr_term(1, m, {{k % p, 0}, {1, 1}}));
      }
    }
    exprs.push_back(expr_term(1, 0, {{p, 0}}) - expr_term(1, 1, {{p - 2, 0}}));
    exprs.push_back(expr_term(1, 0, {{1, g > 1 ? 1 : 0}}));
    for (std::size_t a = 0; a < exprs.size(); ++a) {
      for (std::size_t b = a; b < exprs.size(); b += 3) {
        const bool by_class = o.char_expr(exprs[a]) == o.char_expr(exprs[b]);
        EXPECT_EQ(char_equal(pp, exprs[a], exprs[b]), by_class) << a << " " << b;
      }
    }
  }
}

TEST(GroupRingImage, Linear) {
  const auto pp = PrimePower::make(3, 2);
  const Expr a = expr_term(2, 1, {{4, 0}, {2, 1}});
  const Expr b = expr_term(-1, 0, {{7, 1}});
  GroupRingImage sum(pp);
  sum.add(a);
  sum.add(b);
  EXPECT_EQ(sum, char_image(pp, a + b));
  EXPECT_TRUE((char_image(pp, a) - char_image(pp, a)).is_zero());
  EXPECT_EQ(char_image(pp, a).hash(), char_image(pp, a).hash());
}

}  // namespace
}  // namespace gl2modrep
