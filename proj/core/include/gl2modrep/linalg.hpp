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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gl2modrep/field.hpp"

namespace gl2modrep {

/// Sparse vector over F_q: (index, nonzero value) sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, int>>;

/// Sorts, merges duplicates and drops zeros.
SparseVec canonicalize(const FieldCtx& F, SparseVec v);
/// a + c*b.
SparseVec axpy(const FieldCtx& F, const SparseVec& a, int c, const SparseVec& b);
SparseVec scale(const FieldCtx& F, const SparseVec& v, int c);

/// Column-major sparse matrix over F_q.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  const SparseVec& col(std::uint32_t c) const { return data_[c]; }
  SparseVec& col(std::uint32_t c) { return data_[c]; }
  int at(std::uint32_t r, std::uint32_t c) const;
  std::size_t nnz() const;
  /// Row-major dense copy.
  std::vector<std::vector<int>> dense() const;
  FqMatrix transpose() const;

  bool operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }

 private:
  std::uint32_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

FqMatrix multiply(const FieldCtx& F, const FqMatrix& a, const FqMatrix& b);

/// Incremental row-echelon basis of a subspace of F_q^n. Each stored vector
/// has a distinct leading (smallest) index.
class Echelon {
 public:
  Echelon(const FieldCtx& F, std::uint32_t n);

  /// Adds v to the span; returns true if it was independent.
  bool add(SparseVec v);
  /// Residual of v after eliminating every pivot coordinate.
  SparseVec reduce(SparseVec v) const;
  std::uint32_t rank() const { return static_cast<std::uint32_t>(basis_.size()); }
  bool is_pivot(std::uint32_t i) const { return pivot_of_[i] >= 0; }

 private:
  const FieldCtx& F_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<SparseVec> basis_;
};

std::uint32_t rank(const FieldCtx& F, const FqMatrix& m);

/// Characteristic polynomial det(xI - A) over F_q, lowest degree first.
std::vector<int> charpoly(const FieldCtx& F, std::vector<std::vector<int>> a);

/// Roots in F_{q^2}^x of a polynomial with F_q coefficients, as
/// (root, multiplicity) pairs. Throws if the roots in F_{q^2} do not
/// account for the full degree.
std::vector<std::pair<int, int>> roots_in_fq2(const FieldCtx& F, const std::vector<int>& poly);

}  // namespace gl2modrep
