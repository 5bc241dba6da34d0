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

#include "sigma3/f3_linear.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sigma3 {

bool is_zero(const F3Vector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

EchelonBasis::EchelonBasis(int dim) : EchelonBasis(dim, {}) {}

EchelonBasis::EchelonBasis(int dim, std::vector<int> column_order)
    : dim_(dim), order_(std::move(column_order)), rank_of_col_(static_cast<std::size_t>(dim)) {
  if (order_.empty()) {
    order_.resize(static_cast<std::size_t>(dim));
    std::iota(order_.begin(), order_.end(), 0);
  }
  if (static_cast<int>(order_.size()) != dim) throw std::invalid_argument("column order has wrong length");
  for (int k = 0; k < dim; ++k) rank_of_col_[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])] = k;
}

F3Vector EchelonBasis::reduce(F3Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint8_t c = v[static_cast<std::size_t>(pivots_[r])];
    if (c == 0) continue;
    std::uint8_t m = f3_neg(c);
    const F3Vector& row = rows_[r];
    for (int j = 0; j < dim_; ++j) v[static_cast<std::size_t>(j)] = f3_add(v[static_cast<std::size_t>(j)], f3_mul(m, row[static_cast<std::size_t>(j)]));
  }
  return v;
}

bool EchelonBasis::add(const F3Vector& v) {
  F3Vector r = reduce(v);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (r[static_cast<std::size_t>(j)] != 0 &&
        (pivot < 0 || rank_of_col_[static_cast<std::size_t>(j)] < rank_of_col_[static_cast<std::size_t>(pivot)]))
      pivot = j;
  if (pivot < 0) return false;
  std::uint8_t s = f3_inv(r[static_cast<std::size_t>(pivot)]);
  for (auto& x : r) x = f3_mul(x, s);
  for (F3Vector& row : rows_) {
    std::uint8_t c = row[static_cast<std::size_t>(pivot)];
    if (c == 0) continue;
    std::uint8_t m = f3_neg(c);
    for (int j = 0; j < dim_; ++j) row[static_cast<std::size_t>(j)] = f3_add(row[static_cast<std::size_t>(j)], f3_mul(m, r[static_cast<std::size_t>(j)]));
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

F3Matrix EchelonBasis::canonical_rows() const { return canonical_subspace(rows_, dim_); }

F3Matrix canonical_subspace(const F3Matrix& rows, int dim) {
  EchelonBasis b(dim);
  for (const F3Vector& r : rows) b.add(r);
  std::vector<std::size_t> idx(static_cast<std::size_t>(b.rank()));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) { return b.pivots()[a] < b.pivots()[c]; });
  F3Matrix out;
  for (std::size_t i : idx) out.push_back(b.rows()[i]);
  return out;
}

F3Vector mul_vec_mat(const F3Vector& v, const F3Matrix& a, int cols) {
  F3Vector out(static_cast<std::size_t>(cols), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols; ++j) out[static_cast<std::size_t>(j)] = f3_add(out[static_cast<std::size_t>(j)], f3_mul(v[i], a[i][static_cast<std::size_t>(j)]));
  }
  return out;
}

F3Matrix mul_mat(const F3Matrix& a, const F3Matrix& b, int cols) {
  F3Matrix out;
  out.reserve(a.size());
  for (const F3Vector& row : a) out.push_back(mul_vec_mat(row, b, cols));
  return out;
}

std::optional<F3Matrix> invert(const F3Matrix& a) {
  const std::size_t n = a.size();
  F3Matrix m(n, F3Vector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("invert: matrix is not square");
    std::copy(a[i].begin(), a[i].end(), m[i].begin());
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::uint8_t s = f3_inv(m[c][c]);
    for (auto& x : m[c]) x = f3_mul(x, s);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      std::uint8_t f = f3_neg(m[r][c]);
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] = f3_add(m[r][j], f3_mul(f, m[c][j]));
    }
  }
  F3Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(m[i].begin() + static_cast<std::ptrdiff_t>(n), m[i].end());
  return inv;
}

namespace {

void choose_pivots(int dim, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < dim; ++c) {
    cur.push_back(c);
    choose_pivots(dim, k, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<F3Matrix> enumerate_subspaces(int dim, int sub_dim) {
  std::vector<F3Matrix> result;
  if (sub_dim < 0 || sub_dim > dim) return result;
  std::vector<std::vector<int>> pivot_sets;
  std::vector<int> cur;
  choose_pivots(dim, sub_dim, 0, cur, pivot_sets);
  for (const auto& piv : pivot_sets) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < sub_dim; ++r)
      for (int c = piv[static_cast<std::size_t>(r)] + 1; c < dim; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_slots.emplace_back(r, c);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < free_slots.size(); ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      F3Matrix m(static_cast<std::size_t>(sub_dim), F3Vector(static_cast<std::size_t>(dim), 0));
      for (int r = 0; r < sub_dim; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = 1;
      std::size_t c = code;
      for (const auto& [r, col] : free_slots) {
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = static_cast<std::uint8_t>(c % 3);
        c /= 3;
      }
      result.push_back(std::move(m));
    }
  }
  return result;
}

}  // namespace sigma3
