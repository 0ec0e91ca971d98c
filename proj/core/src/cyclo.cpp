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

#include "gl2modrep/cyclo.hpp"

#include <map>
#include <mutex>

namespace gl2modrep {

namespace {

// Exact quotient of a by monic b; throws if the division is not exact.
IntPoly exact_div(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw Error("internal: division of lower-degree polynomial");
  IntPoly quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer lead = a[i];
    if (lead == 0) continue;
    quot[i - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw Error("internal: inexact cyclotomic division");
  }
  return quot;
}

}  // namespace

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly cyclotomic_poly(std::int64_t M) {
  if (M < 1) throw ArgumentError("cyclotomic_poly needs M >= 1");
  static std::mutex mu;
  static std::map<std::int64_t, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
  }
  IntPoly num(M + 1, 0);
  num[0] = -1;
  num[M] = 1;
  IntPoly den{1};
  for (std::int64_t d = 1; d < M; ++d) {
    if (M % d == 0) den = poly_mul(den, cyclotomic_poly(d));
  }
  IntPoly phi = exact_div(std::move(num), den);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(M, phi);
  return phi;
}

CycloRing::CycloRing(std::int64_t M) : M_(M), phi_(cyclotomic_poly(M)) {
  degree_ = phi_.size() - 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (phi_[i] != 0) tail_.emplace_back(i, phi_[i]);
  }
}

std::shared_ptr<const CycloRing> CycloRing::get(std::int64_t M) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const CycloRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[M];
  if (!slot) slot = std::make_shared<const CycloRing>(M);
  return slot;
}

std::vector<Integer> CycloRing::reduce(std::vector<Integer> a) const {
  const auto M = static_cast<std::size_t>(M_);
  if (a.size() > M) {
    for (std::size_t i = M; i < a.size(); ++i) a[i % M] += a[i];
    a.resize(M);
  }
  for (std::size_t i = a.size(); i-- > degree_;) {
    if (a[i] == 0) continue;
    const Integer c = a[i];
    a[i] = 0;
    const std::size_t shift = i - degree_;
    for (const auto& [e, coef] : tail_) a[shift + e] -= c * coef;
  }
  a.resize(degree_, 0);
  return a;
}

std::vector<Integer> CycloRing::reduce(const std::vector<std::int64_t>& a) const {
  std::vector<Integer> big(a.begin(), a.end());
  return reduce(std::move(big));
}

CycloInt::CycloInt(std::shared_ptr<const CycloRing> ring)
    : ring_(std::move(ring)), c_(ring_->degree(), 0) {}

CycloInt CycloInt::from_int(std::shared_ptr<const CycloRing> ring, const Integer& n) {
  CycloInt out(std::move(ring));
  if (!out.c_.empty()) {
    out.c_[0] = n;
  }
  return out;
}

CycloInt CycloInt::zeta_pow(std::shared_ptr<const CycloRing> ring, std::int64_t e) {
  const std::int64_t r = mod_floor(e, ring->M());
  std::vector<Integer> a(static_cast<std::size_t>(r) + 1, 0);
  a[r] = 1;
  CycloInt out(ring);
  out.c_ = ring->reduce(std::move(a));
  return out;
}

CycloInt CycloInt::from_exponents(std::shared_ptr<const CycloRing> ring,
                                  const std::vector<std::int64_t>& counts) {
  CycloInt out(ring);
  out.c_ = ring->reduce(counts);
  return out;
}

bool CycloInt::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

void CycloInt::check_same(const CycloInt& o) const {
  if (!ring_ || !o.ring_ || ring_->M() != o.ring_->M()) {
    throw ArgumentError("CycloInt operands live in different rings");
  }
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
  CycloInt out = *this;
  out += o;
  return out;
}

CycloInt CycloInt::operator-(const CycloInt& o) const {
  CycloInt out = *this;
  out -= o;
  return out;
}

CycloInt CycloInt::operator-() const {
  CycloInt out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
  check_same(o);
  CycloInt out(ring_);
  out.c_ = ring_->reduce(poly_mul(c_, o.c_));
  return out;
}

bool CycloInt::operator==(const CycloInt& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string CycloInt::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const bool neg = c_[i] < 0;
    const Integer mag = neg ? Integer(-c_[i]) : c_[i];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gl2modrep
