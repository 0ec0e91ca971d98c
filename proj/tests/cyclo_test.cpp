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

#include "gl2modrep/cyclo.hpp"

namespace gl2modrep {
namespace {

IntPoly ints(std::initializer_list<int> xs) { return IntPoly(xs.begin(), xs.end()); }

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic_poly(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_poly(2), ints({1, 1}));
  EXPECT_EQ(cyclotomic_poly(8), ints({1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(12), ints({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(15), ints({1, -1, 0, 1, -1, 1, 0, -1, 1}));
  // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
  const IntPoly phi105 = cyclotomic_poly(105);
  EXPECT_EQ(phi105.size(), 49u);
  EXPECT_EQ(phi105[7], -2);
  EXPECT_EQ(phi105[41], -2);
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (std::int64_t n : {6, 24, 80, 48, 168, 624}) {
    IntPoly prod = {1};
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_poly(d));
    }
    IntPoly expected(n + 1, 0);
    expected[0] = -1;
    expected[n] = 1;
    EXPECT_EQ(prod, expected) << "n=" << n;
  }
}

std::int64_t mobius(std::int64_t n) {
  std::int64_t mu = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  return n > 1 ? -mu : mu;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return b == 0 ? a : gcd(b, a % b); }

TEST(CycloInt, RootsOfUnity) {
  for (std::int64_t M : {8, 24, 80, 120}) {
    const auto ring = CycloRing::get(M);
    EXPECT_EQ(CycloInt::zeta_pow(ring, M), CycloInt::from_int(ring, 1));
    EXPECT_EQ(CycloInt::zeta_pow(ring, -1) * CycloInt::zeta_pow(ring, 1), CycloInt::from_int(ring, 1));
    CycloInt all(ring), primitive(ring);
    for (std::int64_t e = 0; e < M; ++e) {
      all += CycloInt::zeta_pow(ring, e);
      if (gcd(e, M) == 1) primitive += CycloInt::zeta_pow(ring, e);
    }
    EXPECT_TRUE(all.is_zero());
    EXPECT_EQ(primitive, CycloInt::from_int(ring, mobius(M))) << "M=" << M;
  }
}

TEST(CycloInt, RingLaws) {
  const auto ring = CycloRing::get(24);
  const CycloInt a = CycloInt::zeta_pow(ring, 5) + CycloInt::from_int(ring, 3);
  const CycloInt b = CycloInt::zeta_pow(ring, 7) - CycloInt::zeta_pow(ring, 19);
  const CycloInt c = CycloInt::from_exponents(ring, {0, 2, 0, -1});
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a - a, CycloInt(ring));
  EXPECT_EQ(-(-a), a);
  EXPECT_EQ(c, CycloInt::zeta_pow(ring, 1) * CycloInt::from_int(ring, 2) -
                   CycloInt::zeta_pow(ring, 3));
  // zeta^12 = -1 in Z[zeta_24]
  EXPECT_EQ(CycloInt::zeta_pow(ring, 12), CycloInt::from_int(ring, -1));
}

TEST(CycloInt, MixedRingsRejected) {
  const auto a = CycloInt::from_int(CycloRing::get(8), 1);
  const auto b = CycloInt::from_int(CycloRing::get(24), 1);
  EXPECT_THROW((void)(a + b), ArgumentError);
}

TEST(CycloInt, Str) {
  const auto ring = CycloRing::get(8);
  EXPECT_EQ(CycloInt::from_int(ring, 0).str(), "0");
  EXPECT_EQ(CycloInt::from_int(ring, -3).str(), "-3");
}

TEST(CycloRing, ReduceIsCanonical) {
  const auto ring = CycloRing::get(12);
  EXPECT_EQ(ring->degree(), 4u);
  // x^4 = x^2 - 1
  std::vector<std::int64_t> x4 = {0, 0, 0, 0, 1};
  EXPECT_EQ(ring->reduce(x4), (std::vector<Integer>{-1, 0, 1, 0}));
}

}  // namespace
}  // namespace gl2modrep
