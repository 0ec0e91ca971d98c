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

#include "gl2modrep/field.hpp"

#include <string>

namespace gl2modrep {

namespace {

constexpr std::int64_t kMaxQ = 1024;

// Polynomials over F_p as coefficient vectors, lowest degree first.
using PolyP = std::vector<int>;

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo monic b.
PolyP poly_rem(PolyP a, const PolyP& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<int>(mod_floor(a[shift + i] - lead * b[i], p));
    }
    trim(a);
  }
  return a;
}

PolyP digits(std::int64_t code, std::int64_t p, std::int64_t n) {
  PolyP out(n);
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = static_cast<int>(code % p);
    code /= p;
  }
  return out;
}

bool irreducible(const PolyP& f, int p) {
  const std::int64_t deg = static_cast<std::int64_t>(f.size()) - 1;
  for (std::int64_t d = 1; 2 * d <= deg; ++d) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      PolyP h = digits(code, p, d);
      h.push_back(1);
      if (poly_rem(f, h, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower PrimePower::make(std::int64_t p, std::int64_t g) {
  if (!is_prime(p)) throw ArgumentError("p = " + std::to_string(p) + " is not prime");
  if (g < 1) throw ArgumentError("g must be positive");
  PrimePower pp;
  pp.p = p;
  pp.g = g;
  pp.q = 1;
  for (std::int64_t i = 0; i < g; ++i) {
    pp.q = checked_mul(pp.q, p);
    if (pp.q > (std::int64_t{1} << 30)) throw ArgumentError("q = p^g is too large");
  }
  pp.M = pp.q * pp.q - 1;
  return pp;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t mod) {
  if (mod == 1) return 0;
  std::int64_t r = 1 % mod;
  std::int64_t b = mod_floor(base, mod);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % mod);
    b = static_cast<std::int64_t>((__int128)b * b % mod);
    e >>= 1;
  }
  return r;
}

FieldCtx::FieldCtx(std::int64_t p, std::int64_t g) : pp_(PrimePower::make(p, g)) {
  if (pp_.q > kMaxQ) {
    throw ArgumentError("q = " + std::to_string(pp_.q) + " exceeds the supported maximum " +
                        std::to_string(kMaxQ));
  }
  q_ = static_cast<int>(pp_.q);
  const int ip = static_cast<int>(p);

  // Smallest monic irreducible of degree g, ordered by sum c_i p^i.
  for (std::int64_t code = 0; code < pp_.q; ++code) {
    PolyP f = digits(code, p, g);
    f.push_back(1);
    if (irreducible(f, ip)) {
      fq_modulus_.assign(f.begin(), f.end() - 1);
      break;
    }
  }
  PolyP modulus = fq_modulus_;
  modulus.push_back(1);

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  std::vector<PolyP> elems(q_);
  for (int x = 0; x < q_; ++x) elems[x] = digits(x, p, g);
  auto encode = [&](const PolyP& f) {
    std::int64_t code = 0;
    for (std::int64_t i = static_cast<std::int64_t>(f.size()) - 1; i >= 0; --i) {
      code = code * p + f[i];
    }
    return static_cast<int>(code);
  };
  for (int x = 0; x < q_; ++x) {
    PolyP n(g);
    for (std::int64_t i = 0; i < g; ++i) n[i] = (ip - elems[x][i]) % ip;
    neg_[x] = encode(n);
    for (int y = 0; y < q_; ++y) {
      PolyP s(g);
      for (std::int64_t i = 0; i < g; ++i) s[i] = (elems[x][i] + elems[y][i]) % ip;
      add_[x * q_ + y] = encode(s);
      PolyP prod(2 * g - 1, 0);
      for (std::int64_t i = 0; i < g; ++i) {
        for (std::int64_t j = 0; j < g; ++j) {
          prod[i + j] = (prod[i + j] + elems[x][i] * elems[y][j]) % ip;
        }
      }
      PolyP r = poly_rem(prod, modulus, ip);
      r.resize(g, 0);
      mul_[x * q_ + y] = encode(r);
    }
  }

  // Smallest theta^2 + b theta + c without roots in F_q, ordered by c + q b.
  bool found = false;
  for (std::int64_t code = 0; code < pp_.q * pp_.q && !found; ++code) {
    const int c = static_cast<int>(code % q_);
    const int b = static_cast<int>(code / q_);
    bool has_root = false;
    for (int t = 0; t < q_ && !has_root; ++t) {
      has_root = add(add(mul(t, t), mul(b, t)), c) == 0;
    }
    if (!has_root) {
      quad_b_ = b;
      quad_c_ = c;
      found = true;
    }
  }

  auto mul_direct = [&](int x, int y) {
    const int x0 = x % q_, x1 = x / q_, y0 = y % q_, y1 = y / q_;
    const int t = mul(x1, y1);
    const int r0 = sub(mul(x0, y0), mul(quad_c_, t));
    const int r1 = sub(add(mul(x0, y1), mul(x1, y0)), mul(quad_b_, t));
    return r0 + q_ * r1;
  };
  auto pow_direct = [&](int x, std::int64_t e) {
    int r = 1, b = x;
    while (e > 0) {
      if (e & 1) r = mul_direct(r, b);
      b = mul_direct(b, b);
      e >>= 1;
    }
    return r;
  };

  const std::int64_t M = pp_.M;
  const auto factors = prime_factors(M);
  int gen = -1;
  for (int x = 1; x < q_ * q_ && gen < 0; ++x) {
    bool primitive = true;
    for (std::int64_t r : factors) {
      if (pow_direct(x, M / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = x;
  }
  pow_.resize(M);
  dlog_.assign(static_cast<std::size_t>(q_) * q_, -1);
  int cur = 1;
  for (std::int64_t e = 0; e < M; ++e) {
    pow_[e] = cur;
    if (dlog_[cur] >= 0) throw Error("internal: generator search failed");
    dlog_[cur] = e;
    cur = mul_direct(cur, gen);
  }
  if (cur != 1) throw Error("internal: generator order mismatch");
}

int FieldCtx::inv(int x) const {
  if (x == 0) throw ArgumentError("inverse of zero");
  return pow_[mod_floor(-dlog_[x], pp_.M)];
}

int FieldCtx::pow(int x, std::int64_t e) const { return pow2(x, e); }

int FieldCtx::add2(int x, int y) const {
  return add(x % q_, y % q_) + q_ * add(x / q_, y / q_);
}

int FieldCtx::neg2(int x) const { return neg(x % q_) + q_ * neg(x / q_); }

int FieldCtx::mul2(int x, int y) const {
  if (x == 0 || y == 0) return 0;
  const std::int64_t e = dlog_[x] + dlog_[y];
  return pow_[e >= pp_.M ? e - pp_.M : e];
}

int FieldCtx::pow2(int x, std::int64_t e) const {
  if (x == 0) {
    if (e == 0) return 1;
    if (e < 0) throw ArgumentError("negative power of zero");
    return 0;
  }
  const auto r = static_cast<std::int64_t>(
      mod_floor(static_cast<std::int64_t>((__int128)dlog_[x] * mod_floor(e, pp_.M) % pp_.M),
                pp_.M));
  return pow_[r];
}

std::int64_t FieldCtx::dlog(int x) const {
  if (x <= 0 || x >= q_ * q_) throw ArgumentError("dlog of zero or out-of-range element");
  return dlog_[x];
}

int FieldCtx::frobenius(int x, std::int64_t n) const {
  if (x == 0) return 0;
  const std::int64_t r = mod_floor(n, 2 * pp_.g);
  return pow_[static_cast<std::int64_t>((__int128)dlog_[x] * pow_mod(pp_.p, r, pp_.M) %
                                        pp_.M)];
}

Mat2 FieldCtx::embed_iota(int c) const {
  if (c == 0) throw ArgumentError("embed_iota of zero");
  const int x = c % q_, y = c / q_;
  return {x, neg(mul(y, quad_c_)), y, sub(x, mul(y, quad_b_))};
}

Mat2 FieldCtx::mat_mul(const Mat2& x, const Mat2& y) const {
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
          add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

Mat2 FieldCtx::mat_inv(const Mat2& x) const {
  const int di = inv(det(x));
  return {mul(x.d, di), neg(mul(x.b, di)), neg(mul(x.c, di)), mul(x.a, di)};
}

Mat2 FieldCtx::mat_frobenius(const Mat2& x, std::int64_t n) const {
  return {frobenius(x.a, n), frobenius(x.b, n), frobenius(x.c, n), frobenius(x.d, n)};
}

std::string FieldCtx::element_str(int x) const {
  if (x < q_) return std::to_string(x);
  return std::to_string(x % q_) + "+" + std::to_string(x / q_) + "*t";
}

}  // namespace gl2modrep
