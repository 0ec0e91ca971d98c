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

#include "gl2modrep/k0.hpp"

#include <algorithm>
#include <mutex>

namespace gl2modrep {

RawTerm RawTerm::from_ks(Integer coeff, std::int64_t m, const std::vector<std::int64_t>& ks) {
  RawTerm t;
  t.coeff = std::move(coeff);
  t.m = m;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    t.factors.push_back({ks[i], static_cast<std::int64_t>(i)});
  }
  return t;
}

Expr operator+(Expr a, const Expr& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Expr operator-(Expr a, const Expr& b) {
  for (RawTerm t : b) {
    t.coeff = -t.coeff;
    a.push_back(std::move(t));
  }
  return a;
}

Expr operator*(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      RawTerm t;
      t.coeff = x.coeff * y.coeff;
      t.m = x.m + y.m;
      t.factors = x.factors;
      t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
      out.push_back(std::move(t));
    }
  }
  return out;
}

Expr expr_term(Integer coeff, std::int64_t m, std::vector<Factor> factors) {
  RawTerm t;
  t.coeff = std::move(coeff);
  t.m = m;
  t.factors = std::move(factors);
  return {t};
}

// ---------------------------------------------------------------------------

LabelCodec::LabelCodec(const PrimePower& pp) : p_(pp.p), g_(pp.g), q_(pp.q) {
  pow_p_.resize(g_);
  std::int64_t x = 1;
  for (std::int64_t i = 0; i < g_; ++i) {
    pow_p_[i] = x;
    x *= p_;
  }
}

std::uint32_t LabelCodec::encode(std::int64_t m, const std::vector<int>& ks) const {
  std::int64_t code = 0;
  for (std::int64_t i = 0; i < g_; ++i) code += ks[i] * pow_p_[i];
  return static_cast<std::uint32_t>(mod_floor(m, q_ - 1) * q_ + code);
}

BasisLabel LabelCodec::decode(std::uint32_t code) const {
  BasisLabel l;
  l.m = code / q_;
  l.ks.resize(g_);
  std::int64_t r = code % q_;
  for (std::int64_t i = 0; i < g_; ++i) {
    l.ks[i] = static_cast<int>(r % p_);
    r /= p_;
  }
  return l;
}

// ---------------------------------------------------------------------------

VirtualRep VirtualRep::label(const PrimePower& pp, const BasisLabel& l, const Integer& coeff) {
  if (static_cast<std::int64_t>(l.ks.size()) != pp.g) {
    throw ArgumentError("label has " + std::to_string(l.ks.size()) + " degrees, expected " +
                        std::to_string(pp.g));
  }
  for (int k : l.ks) {
    if (k < 0 || k >= pp.p) throw ArgumentError("label degree out of range [0, p-1]");
  }
  VirtualRep v(pp);
  if (coeff != 0) v.entries_.emplace_back(LabelCodec(pp).encode(l.m, l.ks), coeff);
  return v;
}

VirtualRep VirtualRep::from_entries(const PrimePower& pp, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  VirtualRep v(pp);
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
    } else {
      if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
  return v;
}

std::vector<std::pair<BasisLabel, Integer>> VirtualRep::terms() const {
  LabelCodec codec(pp_);
  std::vector<std::pair<BasisLabel, Integer>> out;
  out.reserve(entries_.size());
  for (const auto& [code, c] : entries_) out.emplace_back(codec.decode(code), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Integer VirtualRep::coeff(const BasisLabel& l) const {
  const std::uint32_t code = LabelCodec(pp_).encode(l.m, l.ks);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), code,
                             [](const Entry& e, std::uint32_t c) { return e.first < c; });
  if (it != entries_.end() && it->first == code) return it->second;
  return 0;
}

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
  if (pp_ != o.pp_) throw ArgumentError("VirtualRep context mismatch");
  std::vector<Entry> all = entries_;
  all.insert(all.end(), o.entries_.begin(), o.entries_.end());
  return from_entries(pp_, std::move(all));
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const { return *this + (-o); }

VirtualRep VirtualRep::operator-() const {
  VirtualRep v = *this;
  for (auto& e : v.entries_) e.second = -e.second;
  return v;
}

VirtualRep VirtualRep::operator*(const Integer& c) const {
  if (c == 0) return VirtualRep(pp_);
  VirtualRep v = *this;
  for (auto& e : v.entries_) e.second *= c;
  return v;
}

Integer dim(const VirtualRep& v) {
  LabelCodec codec(v.pp());
  Integer total = 0;
  for (const auto& [code, c] : v.entries()) {
    std::int64_t d = 1;
    for (std::int64_t i = 0; i < v.pp().g; ++i) d *= codec.k_at(code, static_cast<int>(i)) + 1;
    total += c * d;
  }
  return total;
}

VirtualRep det_shift(const VirtualRep& v, std::int64_t m) {
  LabelCodec codec(v.pp());
  std::vector<VirtualRep::Entry> out;
  out.reserve(v.size());
  for (const auto& [code, c] : v.entries()) {
    out.emplace_back(codec.with_m(code, codec.m_of(code) + mod_floor(m, v.pp().q - 1)), c);
  }
  return VirtualRep::from_entries(v.pp(), std::move(out));
}

VirtualRep frobenius_twist(const VirtualRep& v, std::int64_t n) {
  const auto& pp = v.pp();
  const std::int64_t s = mod_floor(n, pp.g);
  if (s == 0) return v;
  LabelCodec codec(pp);
  const std::int64_t mult = pow_mod(pp.p, s, pp.q - 1);
  std::vector<VirtualRep::Entry> out;
  out.reserve(v.size());
  for (const auto& [code, c] : v.entries()) {
    BasisLabel l = codec.decode(code);
    std::vector<int> ks(pp.g);
    for (std::int64_t i = 0; i < pp.g; ++i) ks[(i + s) % pp.g] = l.ks[i];
    out.emplace_back(codec.encode(static_cast<std::int64_t>((__int128)l.m * mult % (pp.q - 1)), ks),
                     c);
  }
  return VirtualRep::from_entries(pp, std::move(out));
}

std::string to_text(const BasisLabel& l) {
  std::string out;
  if (l.m != 0) out = l.m == 1 ? "e" : "e^" + std::to_string(l.m);
  for (std::size_t i = 0; i < l.ks.size(); ++i) {
    if (l.ks[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "M" + std::to_string(l.ks[i]);
    if (i > 0) out += "^[" + std::to_string(i) + "]";
  }
  return out.empty() ? "1" : out;
}

std::string to_text(const VirtualRep& v) {
  std::string out;
  for (const auto& [l, c] : v.terms()) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += to_text(l);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

std::size_t Normalizer::VecHash::operator()(const std::vector<std::int64_t>& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Normalizer::Normalizer(const PrimePower& pp, RuleSet rules)
    : pp_(pp), rules_(rules), codec_(pp) {
  if (rules_ == RuleSet::kSerre && pp_.g != 1) {
    throw ArgumentError("the Serre rule set only reduces degrees when g = 1");
  }
}

std::size_t Normalizer::memo_entries() const {
  std::shared_lock lock(mu_);
  return sym0_memo_.size() + nf_memo_.size() + pair_memo_.size();
}

std::int64_t Normalizer::twist_det(std::int64_t e, std::int64_t twist) const {
  const std::int64_t mod = pp_.q - 1;
  if (mod == 1) return 0;
  return static_cast<std::int64_t>(
      (__int128)mod_floor(e, mod) * pow_mod(pp_.p, mod_floor(twist, pp_.g), mod) % mod);
}

void Normalizer::add_shifted(Acc& acc, const VirtualRep& v, const Integer& coeff,
                             std::int64_t det) const {
  const std::int64_t mod = pp_.q - 1;
  const std::int64_t shift = mod_floor(det, mod);
  for (const auto& [code, c] : v.entries()) {
    std::int64_t m = codec_.m_of(code) + shift;
    if (m >= mod) m -= mod;
    acc.emplace_back(codec_.with_m(code, m), c * coeff);
  }
}

VirtualRep Normalizer::sym(std::int64_t k, std::int64_t twist) {
  const std::int64_t t = mod_floor(twist, pp_.g);
  VirtualRep base = sym0(k);
  return t == 0 ? base : frobenius_twist(base, t);
}

VirtualRep Normalizer::sym0(std::int64_t k) {
  {
    std::shared_lock lock(mu_);
    auto it = sym0_memo_.find(k);
    if (it != sym0_memo_.end()) return it->second;
  }
  VirtualRep result(pp_);
  if (k == -1) {
    // M_{-1} = 0
  } else if (k <= -2) {
    result = -det_shift(sym0(-k - 2), 1 + k);
  } else if (k < pp_.p) {
    std::vector<int> ks(pp_.g, 0);
    ks[0] = static_cast<int>(k);
    result = VirtualRep::label(pp_, {0, ks});
  } else if (rules_ == RuleSet::kFrobenius) {
    Acc acc;
    add_factors(acc, 1, 0, {{k - pp_.p, 0}, {1, 1 % pp_.g}});
    const std::int64_t e_p = twist_det(pp_.p, 0);
    add_shifted(acc, sym0(k - 2 * pp_.p), -1, e_p);
    result = VirtualRep::from_entries(pp_, std::move(acc));
  } else {
    const std::int64_t q = pp_.q;
    Acc acc;
    add_shifted(acc, sym0(k - q + 1), 1, 0);
    add_shifted(acc, sym0(k - q - 1), 1, 1);
    add_shifted(acc, sym0(k - 2 * q), -1, 1);
    result = VirtualRep::from_entries(pp_, std::move(acc));
  }
  std::unique_lock lock(mu_);
  sym0_memo_.emplace(k, result);
  return result;
}

VirtualRep Normalizer::normal_form(const std::vector<std::int64_t>& ks) {
  if (static_cast<std::int64_t>(ks.size()) != pp_.g) {
    throw ArgumentError("normal_form expects " + std::to_string(pp_.g) + " degrees");
  }
  {
    std::shared_lock lock(mu_);
    auto it = nf_memo_.find(ks);
    if (it != nf_memo_.end()) return it->second;
  }
  std::size_t lead = ks.size();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 0) throw ArgumentError("normal_form expects non-negative degrees");
    if (ks[i] >= pp_.p && lead == ks.size()) lead = i;
  }
  VirtualRep result(pp_);
  if (lead == ks.size()) {
    std::vector<int> small(ks.begin(), ks.end());
    result = VirtualRep::label(pp_, {0, small});
  } else {
    const VirtualRep head = sym(ks[lead], static_cast<std::int64_t>(lead));
    std::vector<std::int64_t> rest = ks;
    rest[lead] = 0;
    Acc acc;
    for (const auto& [code, c] : head.entries()) {
      std::vector<Factor> factors;
      for (std::int64_t i = 0; i < pp_.g; ++i) {
        const int a = codec_.k_at(code, static_cast<int>(i));
        if (a > 0) factors.push_back({a, i});
        if (rest[i] > 0) factors.push_back({rest[i], i});
      }
      add_factors(acc, c, codec_.m_of(code), factors);
    }
    result = VirtualRep::from_entries(pp_, std::move(acc));
  }
  std::unique_lock lock(mu_);
  nf_memo_.emplace(ks, result);
  return result;
}

void Normalizer::add_product(Acc& acc, const Integer& coeff, std::int64_t det,
                             const std::vector<std::int64_t>& ks) {
  add_shifted(acc, normal_form(ks), coeff, det);
}

void Normalizer::add_factors(Acc& acc, const Integer& coeff, std::int64_t det,
                             const std::vector<Factor>& factors) {
  // Product identity: M_a M_b = sum_{j=0}^{min(a,b)} e^j M_{a+b-2j}, per twist.
  struct State {
    std::int64_t det;
    std::vector<std::int64_t> ks;
  };
  std::vector<State> states{{det, std::vector<std::int64_t>(pp_.g, 0)}};
  for (const auto& f : factors) {
    if (f.k < 0) throw ArgumentError("internal: negative factor reached the product expansion");
    const std::int64_t t = mod_floor(f.twist, pp_.g);
    const std::int64_t step = twist_det(1, t);
    std::vector<State> next;
    next.reserve(states.size());
    for (auto& s : states) {
      const std::int64_t a = s.ks[t];
      const std::int64_t lo = std::min(a, f.k);
      for (std::int64_t j = 0; j <= lo; ++j) {
        State n = s;
        n.ks[t] = a + f.k - 2 * j;
        n.det = s.det + j * step;
        next.push_back(std::move(n));
      }
    }
    states = std::move(next);
  }
  for (const auto& s : states) add_product(acc, coeff, s.det, s.ks);
}

VirtualRep Normalizer::normalize(const RawTerm& t) {
  if (t.coeff == 0) return VirtualRep(pp_);
  Integer coeff = t.coeff;
  std::int64_t det = twist_det(t.m, 0);
  std::vector<Factor> factors;
  for (const auto& f : t.factors) {
    if (f.k == -1) return VirtualRep(pp_);
    if (f.k <= -2) {
      coeff = -coeff;
      det += twist_det(1 + f.k, f.twist);
      factors.push_back({-f.k - 2, f.twist});
    } else {
      factors.push_back(f);
    }
  }
  Acc acc;
  add_factors(acc, coeff, det, factors);
  return VirtualRep::from_entries(pp_, std::move(acc));
}

VirtualRep Normalizer::normalize(const Expr& e) {
  Acc acc;
  for (const auto& t : e) {
    const VirtualRep v = normalize(t);
    acc.insert(acc.end(), v.entries().begin(), v.entries().end());
  }
  return VirtualRep::from_entries(pp_, std::move(acc));
}

VirtualRep Normalizer::pair_product(std::uint32_t ks_a, std::uint32_t ks_b) {
  if (ks_a > ks_b) std::swap(ks_a, ks_b);
  const std::uint64_t key = (static_cast<std::uint64_t>(ks_a) << 32) | ks_b;
  {
    std::shared_lock lock(mu_);
    auto it = pair_memo_.find(key);
    if (it != pair_memo_.end()) return it->second;
  }
  std::vector<Factor> factors;
  for (std::int64_t i = 0; i < pp_.g; ++i) {
    const int a = codec_.k_at(ks_a, static_cast<int>(i));
    const int b = codec_.k_at(ks_b, static_cast<int>(i));
    if (a > 0) factors.push_back({a, i});
    if (b > 0) factors.push_back({b, i});
  }
  Acc acc;
  add_factors(acc, 1, 0, factors);
  VirtualRep result = VirtualRep::from_entries(pp_, std::move(acc));
  std::unique_lock lock(mu_);
  pair_memo_.emplace(key, result);
  return result;
}

VirtualRep Normalizer::mul(const VirtualRep& a, const VirtualRep& b) {
  if (a.pp() != pp_ || b.pp() != pp_) throw ArgumentError("VirtualRep context mismatch");
  Acc acc;
  for (const auto& [ca, xa] : a.entries()) {
    for (const auto& [cb, xb] : b.entries()) {
      const VirtualRep prod = pair_product(codec_.ks_code(ca), codec_.ks_code(cb));
      add_shifted(acc, prod, xa * xb, codec_.m_of(ca) + codec_.m_of(cb));
    }
  }
  return VirtualRep::from_entries(pp_, std::move(acc));
}

// ---------------------------------------------------------------------------

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::kDelta: return "delta";
    case Identity::kSigma: return "sigma";
    case Identity::kPi: return "pi";
    case Identity::kPhi: return "phi";
    case Identity::kPhiPrime: return "phiprime";
    case Identity::kInttt: return "inttt";
  }
  return "?";
}

Identity parse_identity(const std::string& s) {
  if (s == "delta") return Identity::kDelta;
  if (s == "sigma") return Identity::kSigma;
  if (s == "pi") return Identity::kPi;
  if (s == "phi") return Identity::kPhi;
  if (s == "phiprime" || s == "phi'") return Identity::kPhiPrime;
  if (s == "inttt") return Identity::kInttt;
  throw ArgumentError("unknown identity '" + s +
                      "' (expected delta, sigma, pi, phi, phiprime, inttt)");
}

IdentityInstance identity_instance(const PrimePower& pp, Identity id,
                                   const std::vector<std::int64_t>& params) {
  const std::size_t want = id == Identity::kInttt                                 ? 3
                           : (id == Identity::kPi || id == Identity::kPhiPrime) ? 2
                                                                                : 1;
  if (params.size() != want) {
    throw ArgumentError("identity " + identity_name(id) + " takes " + std::to_string(want) +
                        " parameter(s)");
  }
  const std::int64_t p = pp.p, q = pp.q;
  auto M = [](std::int64_t k, std::int64_t t = 0) { return Factor{k, t}; };
  IdentityInstance inst;
  switch (id) {
    case Identity::kDelta: {
      const std::int64_t k = params[0];
      inst.lhs = expr_term(1, 0, {M(k)});
      inst.rhs = expr_term(-1, 1 + k, {M(-k - 2)});
      break;
    }
    case Identity::kSigma: {
      const std::int64_t k = params[0];
      inst.lhs = expr_term(1, 0, {M(k)}) - expr_term(1, 1, {M(k - (q + 1))});
      inst.rhs = expr_term(1, 0, {M(k - (q - 1))}) - expr_term(1, 1, {M(k - 2 * q)});
      break;
    }
    case Identity::kPi: {
      const std::int64_t n = params[0], m = params[1];
      inst.lhs = expr_term(1, 0, {M(n), M(m)});
      inst.rhs = expr_term(1, 0, {M(n + m)}) + expr_term(1, 1, {M(n - 1), M(m - 1)});
      break;
    }
    case Identity::kPhi: {
      const std::int64_t k = params[0];
      inst.lhs = expr_term(1, 0, {M(k)});
      inst.rhs = expr_term(1, 0, {M(k - p), M(1, 1)}) - expr_term(1, p, {M(k - 2 * p)});
      break;
    }
    case Identity::kPhiPrime:
    case Identity::kInttt: {
      const std::int64_t k = params[0], h = params[1];
      const std::int64_t i = id == Identity::kInttt ? params[2] : 0;
      if (i < 0) throw ArgumentError("twist index must be non-negative");
      const std::int64_t e = q > 2 ? pow_mod(p, i + 1, q - 1) : 0;
      inst.lhs = expr_term(1, 0, {M(k, i), M(h, i + 1)}) -
                 expr_term(1, e, {M(k - p, i), M(h - 1, i + 1)});
      inst.rhs = expr_term(1, 0, {M(k - p, i), M(h + 1, i + 1)}) -
                 expr_term(1, e, {M(k - 2 * p, i), M(h, i + 1)});
      break;
    }
  }
  return inst;
}

}  // namespace gl2modrep
