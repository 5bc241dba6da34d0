// Copyright 2026 The sigma3 Authors
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

#ifndef SIGMA3_F3_LINEAR_HPP
#define SIGMA3_F3_LINEAR_HPP

// Linear algebra over the field with three elements.

#include <cstdint>
#include <optional>
#include <vector>

namespace sigma3 {

using F3Vector = std::vector<std::uint8_t>;
using F3Matrix = std::vector<F3Vector>;

inline std::uint8_t f3_add(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a + b) % 3); }
inline std::uint8_t f3_mul(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a * b) % 3); }
inline std::uint8_t f3_neg(std::uint8_t a) { return static_cast<std::uint8_t>((3 - a) % 3); }
/// 1 -> 1, 2 -> 2; 0 has no inverse.
inline std::uint8_t f3_inv(std::uint8_t a) { return a; }

bool is_zero(const F3Vector& v);

/// Incrementally built reduced row echelon basis. Pivot columns are chosen
/// following `column_order` (earlier entries are pivoted first).
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim);
  EchelonBasis(int dim, std::vector<int> column_order);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const F3Matrix& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduces v against the basis.
  F3Vector reduce(F3Vector v) const;
  bool contains(const F3Vector& v) const { return is_zero(reduce(v)); }
  /// Adds v; returns false when v was already in the span.
  bool add(const F3Vector& v);

  /// Fully reduced rows sorted by pivot in natural column order; a canonical
  /// key for the spanned subspace when the natural column order was used.
  F3Matrix canonical_rows() const;

 private:
  int dim_;
  std::vector<int> order_;
  std::vector<int> rank_of_col_;
  F3Matrix rows_;
  std::vector<int> pivots_;
};

/// Canonical RREF of the row space.
F3Matrix canonical_subspace(const F3Matrix& rows, int dim);

/// v * A for a row vector v and a dim x cols matrix A.
F3Vector mul_vec_mat(const F3Vector& v, const F3Matrix& a, int cols);
F3Matrix mul_mat(const F3Matrix& a, const F3Matrix& b, int cols);
std::optional<F3Matrix> invert(const F3Matrix& a);

/// All subspaces of F_3^dim of the given dimension, as canonical RREF bases.
std::vector<F3Matrix> enumerate_subspaces(int dim, int sub_dim);

}  // namespace sigma3

#endif  // SIGMA3_F3_LINEAR_HPP
