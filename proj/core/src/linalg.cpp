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

#include "gl2modrep/linalg.hpp"

#include <algorithm>

namespace gl2modrep {

SparseVec canonicalize(const FieldCtx& F, SparseVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second = F.add(out.back().second, c);
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.emplace_back(i, c);
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

SparseVec axpy(const FieldCtx& F, const SparseVec& a, int c, const SparseVec& b) {
  if (c == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, F.mul(c, b[j].second));
      ++j;
    } else {
      const int s = F.add(a[i].second, F.mul(c, b[j].second));
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const FieldCtx& F, const SparseVec& v, int c) {
  if (c == 0) return {};
  SparseVec out = v;
  for (auto& e : out) e.second = F.mul(e.second, c);
  return out;
}

int FqMatrix::at(std::uint32_t r, std::uint32_t c) const {
  const auto& col = data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::uint32_t x) { return e.first < x; });
  return (it != col.end() && it->first == r) ? it->second : 0;
}

std::size_t FqMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

std::vector<std::vector<int>> FqMatrix::dense() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
  for (std::uint32_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : data_[c]) out[r][c] = v;
  }
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(cols_, rows_);
  for (std::uint32_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : data_[c]) t.data_[r].emplace_back(c, v);
  }
  return t;
}

FqMatrix multiply(const FieldCtx& F, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw ArgumentError("matrix shape mismatch in product");
  FqMatrix out(a.rows(), b.cols());
  for (std::uint32_t c = 0; c < b.cols(); ++c) {
    SparseVec acc;
    for (const auto& [k, v] : b.col(c)) {
      for (const auto& [r, w] : a.col(k)) acc.emplace_back(r, F.mul(v, w));
    }
    out.col(c) = canonicalize(F, std::move(acc));
  }
  return out;
}

Echelon::Echelon(const FieldCtx& F, std::uint32_t n) : F_(F), pivot_of_(n, -1) {}

bool Echelon::add(SparseVec v) {
  while (!v.empty()) {
    const auto [r, c] = v.front();
    const std::int32_t b = pivot_of_[r];
    if (b < 0) {
      v = scale(F_, v, F_.inv(c));
      pivot_of_[r] = static_cast<std::int32_t>(basis_.size());
      basis_.push_back(std::move(v));
      return true;
    }
    v = axpy(F_, v, F_.neg(c), basis_[b]);
  }
  return false;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const auto [i, c] = v[pos];
    const std::int32_t b = pivot_of_[i];
    if (b < 0) {
      ++pos;
      continue;
    }
    v = axpy(F_, v, F_.neg(c), basis_[b]);
  }
  return v;
}

std::uint32_t rank(const FieldCtx& F, const FqMatrix& m) {
  Echelon e(F, m.rows());
  for (std::uint32_t c = 0; c < m.cols(); ++c) e.add(m.col(c));
  return e.rank();
}

std::vector<int> charpoly(const FieldCtx& F, std::vector<std::vector<int>> a) {
  const std::size_t n = a.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i) {
      if (a[i][m - 1] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][m]);
    }
    const int inv = F.inv(a[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      const int u = F.mul(a[i][m - 1], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) a[i][c] = F.sub(a[i][c], F.mul(u, a[m][c]));
      for (std::size_t r = 0; r < n; ++r) a[r][m] = F.add(a[r][m], F.mul(u, a[r][i]));
    }
  }
  std::vector<std::vector<int>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<int> next(k + 2, 0);
    for (std::size_t i = 0; i <= k; ++i) {
      next[i + 1] = F.add(next[i + 1], p[k][i]);
      next[i] = F.sub(next[i], F.mul(a[k][k], p[k][i]));
    }
    int t = 1;
    for (std::size_t ii = k; ii-- > 0;) {
      t = F.mul(t, a[ii + 1][ii]);
      const int f = F.mul(a[ii][k], t);
      if (f == 0) continue;
      for (std::size_t i = 0; i < p[ii].size(); ++i) {
        next[i] = F.sub(next[i], F.mul(f, p[ii][i]));
      }
    }
    p[k + 1] = std::move(next);
  }
  return p[n];
}

std::vector<std::pair<int, int>> roots_in_fq2(const FieldCtx& F, const std::vector<int>& poly) {
  std::vector<std::pair<int, int>> out;
  const int size2 = F.q() * F.q();
  std::size_t found = 0;
  const std::size_t degree = poly.size() - 1;
  for (int lambda = 0; lambda < size2 && found < degree; ++lambda) {
    std::vector<int> cur = poly;
    int mult = 0;
    while (cur.size() > 1) {
      // Synthetic division by (x - lambda).
      std::vector<int> quot(cur.size() - 1);
      int acc = 0;
      for (std::size_t i = cur.size(); i-- > 0;) {
        acc = F.add2(F.mul2(acc, lambda), cur[i]);
        if (i > 0) quot[i - 1] = acc;
      }
      if (acc != 0) break;
      cur = std::move(quot);
      ++mult;
    }
    if (mult > 0) {
      out.emplace_back(lambda, mult);
      found += mult;
    }
  }
  if (found != degree) throw Error("characteristic polynomial does not split over F_{q^2}");
  return out;
}

}  // namespace gl2modrep
