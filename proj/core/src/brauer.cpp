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

#include "gl2modrep/brauer.hpp"

#include <limits>

namespace gl2modrep {

namespace {

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("coefficient does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return mod_floor(static_cast<std::int64_t>((__int128)a * b % m), m);
}

}  // namespace

std::string kind_name(ConjClass::Kind k) {
  switch (k) {
    case ConjClass::Kind::kCentral: return "central";
    case ConjClass::Kind::kSplit: return "split";
    case ConjClass::Kind::kNonSplit: return "nonsplit";
  }
  return "?";
}

std::string ConjClass::describe() const {
  return kind_name(kind) + "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<ConjClass> regular_classes(const FieldCtx& ctx) {
  const std::int64_t q = ctx.q(), M = ctx.M();
  std::vector<ConjClass> out;
  out.reserve(static_cast<std::size_t>(q * q - 1));
  for (std::int64_t x = 0; x < q - 1; ++x) {
    out.push_back({ConjClass::Kind::kCentral, (q + 1) * x, (q + 1) * x});
  }
  for (std::int64_t x = 0; x < q - 1; ++x) {
    for (std::int64_t y = x + 1; y < q - 1; ++y) {
      out.push_back({ConjClass::Kind::kSplit, (q + 1) * x, (q + 1) * y});
    }
  }
  for (std::int64_t d = 0; d < M; ++d) {
    if (d % (q + 1) == 0) continue;
    const std::int64_t dq = d * q % M;
    if (dq < d) continue;
    out.push_back({ConjClass::Kind::kNonSplit, d, dq});
  }
  return out;
}

Mat2 class_representative(const FieldCtx& ctx, const ConjClass& cls) {
  switch (cls.kind) {
    case ConjClass::Kind::kCentral: {
      const int a = ctx.gen_pow(cls.u);
      return {a, 0, 0, a};
    }
    case ConjClass::Kind::kSplit:
      return {ctx.gen_pow(cls.u), 0, 0, ctx.gen_pow(cls.v)};
    case ConjClass::Kind::kNonSplit:
      return ctx.embed_iota(ctx.gen_pow(cls.u));
  }
  return ctx.identity();
}

bool CharVector::is_zero() const {
  for (const auto& v : values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

CharVector CharVector::operator-(const CharVector& o) const {
  if (values.size() != o.values.size()) throw ArgumentError("CharVector size mismatch");
  CharVector out;
  out.values.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.values.push_back(values[i] - o.values[i]);
  return out;
}

// ---------------------------------------------------------------------------

BrauerOracle::BrauerOracle(std::shared_ptr<const FieldCtx> ctx)
    : ctx_(std::move(ctx)), ring_(CycloRing::get(ctx_->M())), classes_(regular_classes(*ctx_)) {}

void BrauerOracle::accumulate(const RawTerm& t, const ConjClass& cls,
                              std::vector<std::int64_t>& counts) const {
  const std::int64_t M = ctx_->M();
  const std::int64_t p = ctx_->p();
  const std::int64_t g = ctx_->pp().g;
  // Running list of (exponent, multiplicity); starts with chi(det)^m.
  std::vector<std::pair<std::int64_t, std::int64_t>> cur{
      {mulmod(mod_floor(t.m, M), cls.u + cls.v, M), to_int64(t.coeff)}};
  for (const auto& f : t.factors) {
    if (f.k == -1) return;
    const std::int64_t s = pow_mod(p, mod_floor(f.twist, g), M);
    const std::int64_t a = mulmod(cls.u, s, M), b = mulmod(cls.v, s, M);
    std::vector<std::pair<std::int64_t, std::int64_t>> vals;
    if (f.k >= 0) {
      // (a^{k+1} - b^{k+1}) / (a - b) as a geometric sum.
      for (std::int64_t j = 0; j <= f.k; ++j) {
        vals.emplace_back(mod_floor(mulmod(a, f.k - j, M) + mulmod(b, j, M), M), 1);
      }
    } else {
      // Same quotient for k <= -2, expanded as a Laurent sum.
      const std::int64_t n = -f.k - 1;
      for (std::int64_t j = 0; j < n; ++j) {
        vals.emplace_back(mod_floor(mulmod(a, j - n, M) + mulmod(b, -1 - j, M), M), -1);
      }
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> next;
    next.reserve(cur.size() * vals.size());
    for (const auto& [e1, c1] : cur) {
      for (const auto& [e2, c2] : vals) {
        const std::int64_t e = e1 + e2;
        next.emplace_back(e >= M ? e - M : e, checked_mul(c1, c2));
      }
    }
    cur = std::move(next);
  }
  for (const auto& [e, c] : cur) counts[e] = checked_add(counts[e], c);
}

CycloInt BrauerOracle::char_sym(std::int64_t k, const ConjClass& cls, std::int64_t twist) const {
  RawTerm t;
  t.factors.push_back({k, twist});
  return char_term(t, cls);
}

CycloInt BrauerOracle::char_term(const RawTerm& t, const ConjClass& cls) const {
  std::vector<std::int64_t> counts(ctx_->M(), 0);
  accumulate(t, cls, counts);
  return CycloInt::from_exponents(ring_, counts);
}

CycloInt BrauerOracle::char_expr(const Expr& e, const ConjClass& cls) const {
  std::vector<std::int64_t> counts(ctx_->M(), 0);
  for (const auto& t : e) accumulate(t, cls, counts);
  return CycloInt::from_exponents(ring_, counts);
}

CharVector BrauerOracle::char_expr(const Expr& e) const {
  CharVector out;
  out.values.reserve(classes_.size());
  for (const auto& cls : classes_) out.values.push_back(char_expr(e, cls));
  return out;
}

CharVector BrauerOracle::char_vrep(const VirtualRep& v) const {
  if (v.pp() != ctx_->pp()) throw ArgumentError("VirtualRep context mismatch");
  Expr e;
  for (const auto& [l, c] : v.terms()) {
    std::vector<std::int64_t> ks(l.ks.begin(), l.ks.end());
    e.push_back(RawTerm::from_ks(c, l.m, ks));
  }
  return char_expr(e);
}

bool BrauerOracle::char_equal(const Expr& a, const Expr& b) const {
  return char_expr(a - b).is_zero();
}

bool BrauerOracle::char_equal(const VirtualRep& a, const VirtualRep& b) const {
  return char_vrep(a - b).is_zero();
}

// ---------------------------------------------------------------------------

GroupRingImage::GroupRingImage(const PrimePower& pp)
    : pp_(pp),
      split_(static_cast<std::size_t>((pp.q - 1) * (pp.q - 1)), 0),
      nonsplit_(static_cast<std::size_t>(pp.M), 0) {}

void GroupRingImage::add_monos(const std::vector<Mono>& monos) {
  const std::int64_t n = pp_.q - 1, M = pp_.M, q = pp_.q;
  for (const auto& mono : monos) {
    const std::size_t si = static_cast<std::size_t>((mono.i % n) * n + mono.j % n);
    split_[si] = checked_add(split_[si], mono.c);
    const std::size_t ni = static_cast<std::size_t>((mono.i + mulmod(q, mono.j, M)) % M);
    nonsplit_[ni] = checked_add(nonsplit_[ni], mono.c);
  }
}

void GroupRingImage::add(const RawTerm& t) {
  const std::int64_t M = pp_.M;
  const std::int64_t det = mod_floor(t.m, M);
  std::vector<Mono> cur{{det, det, to_int64(t.coeff)}};
  for (const auto& f : t.factors) {
    if (f.k == -1) return;
    const std::int64_t s = pow_mod(pp_.p, mod_floor(f.twist, pp_.g), M);
    std::vector<Mono> vals;
    if (f.k >= 0) {
      for (std::int64_t j = 0; j <= f.k; ++j) {
        vals.push_back({mulmod(s, f.k - j, M), mulmod(s, j, M), 1});
      }
    } else {
      const std::int64_t n = -f.k - 1;
      for (std::int64_t j = 0; j < n; ++j) {
        vals.push_back({mulmod(s, j - n, M), mulmod(s, -1 - j, M), -1});
      }
    }
    std::vector<Mono> next;
    next.reserve(cur.size() * vals.size());
    for (const auto& x : cur) {
      for (const auto& y : vals) {
        std::int64_t i = x.i + y.i, j = x.j + y.j;
        if (i >= M) i -= M;
        if (j >= M) j -= M;
        next.push_back({i, j, checked_mul(x.c, y.c)});
      }
    }
    cur = std::move(next);
  }
  add_monos(cur);
}

void GroupRingImage::add(const Expr& e) {
  for (const auto& t : e) add(t);
}

void GroupRingImage::add(const VirtualRep& v, const Integer& scale) {
  if (v.pp() != pp_) throw ArgumentError("VirtualRep context mismatch");
  LabelCodec codec(pp_);
  RawTerm t;
  for (const auto& [code, c] : v.entries()) {
    const BasisLabel l = codec.decode(code);
    t.coeff = c * scale;
    t.m = l.m;
    t.factors.clear();
    for (std::int64_t i = 0; i < pp_.g; ++i) {
      if (l.ks[i] > 0) t.factors.push_back({l.ks[i], i});
    }
    add(t);
  }
}

bool GroupRingImage::is_zero() const {
  for (auto x : split_) {
    if (x != 0) return false;
  }
  for (auto x : nonsplit_) {
    if (x != 0) return false;
  }
  return true;
}

bool GroupRingImage::operator==(const GroupRingImage& o) const {
  return pp_ == o.pp_ && split_ == o.split_ && nonsplit_ == o.nonsplit_;
}

GroupRingImage GroupRingImage::operator-(const GroupRingImage& o) const {
  if (pp_ != o.pp_) throw ArgumentError("GroupRingImage context mismatch");
  GroupRingImage out = *this;
  for (std::size_t i = 0; i < split_.size(); ++i) out.split_[i] -= o.split_[i];
  for (std::size_t i = 0; i < nonsplit_.size(); ++i) out.nonsplit_[i] -= o.nonsplit_[i];
  return out;
}

std::size_t GroupRingImage::hash() const {
  std::size_t h = 14695981039346656037ULL;
  auto mix = [&h](std::int64_t x) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ULL;
  };
  for (auto x : split_) mix(x);
  for (auto x : nonsplit_) mix(x);
  return h;
}

GroupRingImage char_image(const PrimePower& pp, const Expr& e) {
  GroupRingImage img(pp);
  img.add(e);
  return img;
}

GroupRingImage char_image(const VirtualRep& v) {
  GroupRingImage img(v.pp());
  img.add(v);
  return img;
}

bool char_equal(const PrimePower& pp, const Expr& a, const Expr& b) {
  return char_image(pp, a - b).is_zero();
}

bool char_equal(const VirtualRep& a, const VirtualRep& b) {
  if (a.pp() != b.pp()) throw ArgumentError("VirtualRep context mismatch");
  GroupRingImage img(a.pp());
  img.add(a);
  img.add(b, -1);
  return img.is_zero();
}

bool char_equal(const VirtualRep& a, const Expr& b) {
  GroupRingImage img(a.pp());
  img.add(a);
  img.add(Expr{} - b);
  return img.is_zero();
}

}  // namespace gl2modrep
