// Copyright 2026 The radiolabel Authors
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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "radiolabel/graph.hpp"
#include "radiolabel/labeling.hpp"

// Consecutive ordering of the vertices of K_n^t, 3 <= n, 1 <= t <= n.
//
// Vertices of K_n are 0..n-1 (v_1..v_n). The ordering is emitted n vertices
// at a time as the rows of matrices A^1..A^{n^{t-1}}: A^1 has row i equal to
// (i, i, ..., i), and A^k is A^{k-1} with the cyclic shift applied to one
// column, namely column t - p where n^p is the largest power dividing k - 1.

namespace radiolabel::knt {

/// The n-cycle v -> v + 1 (mod n) on 0..n-1.
class CyclicShift {
 public:
  explicit CyclicShift(std::size_t n);

  std::size_t modulus() const noexcept { return n_; }
  VertexId operator()(VertexId v) const noexcept {
    return static_cast<VertexId>((v + 1) % n_);
  }
  VertexId power(VertexId v, std::size_t times) const noexcept {
    return static_cast<VertexId>((v + times) % n_);
  }

 private:
  std::size_t n_;
};

/// Throws ParameterOutOfRange unless 3 <= n and 1 <= t <= n, and
/// SizeLimitExceeded when n^t exceeds the cap. Returns n^t.
std::size_t validate_parameters(std::size_t n, std::size_t t, std::size_t size_cap = kDefaultSizeCap);

/// Largest e <= t - 1 with n^e dividing k - 1 (t - 1 when k = 1).
std::size_t shift_exponent(std::size_t k, std::size_t n, std::size_t t);

/// One n x t matrix A^k; row r names vertex x_{(k-1)n + r + 1}.
class LabelMatrix {
 public:
  LabelMatrix(std::size_t n, std::size_t t);  // A^1

  std::size_t index() const noexcept { return k_; }
  std::size_t rows() const noexcept { return n_; }
  std::size_t columns() const noexcept { return t_; }
  VertexId at(std::size_t row, std::size_t column) const noexcept {
    return entries_[row * t_ + column];
  }
  ProductVertex row(std::size_t r) const;

  /// Column (0-based) that the step to A^{k+1} will shift.
  std::size_t next_shifted_column() const noexcept;
  /// Replaces A^k by A^{k+1}.
  void advance();

 private:
  std::size_t n_;
  std::size_t t_;
  std::size_t k_ = 1;
  std::vector<VertexId> entries_;
};

/// The n^{t-1} x t matrix of first rows. Built from its own recurrence
/// (row i shifts column t - q, n^q the largest power dividing i - 1) rather
/// than from the A^k.
class FirstRowMatrix {
 public:
  FirstRowMatrix(std::size_t n, std::size_t t);

  std::size_t n() const noexcept { return n_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t columns() const noexcept { return t_; }
  /// 0-based row and column.
  VertexId at(std::size_t row, std::size_t column) const noexcept {
    return entries_[row * t_ + column];
  }

 private:
  std::size_t n_;
  std::size_t t_;
  std::size_t rows_;
  std::vector<VertexId> entries_;
};

/// x_1..x_{n^t} from the matrix sequence.
std::vector<ProductVertex> ordering_by_matrices(std::size_t n, std::size_t t,
                                                std::size_t size_cap = kDefaultSizeCap);

/// x_1..x_{n^t} from the coordinate-append recursion
///   x^1_i = v_i,  x^t_{mn+k} = (x^{t-1}_{floor(m/n)n+k}, v_{k+m-floor(m/n) mod n}),
/// k = 1..n, with residues taken in 1..n.
std::vector<ProductVertex> ordering_by_recursion(std::size_t n, std::size_t t,
                                                 std::size_t size_cap = kDefaultSizeCap);

/// Flat-index ordering of K_n^t (last coordinate fastest).
Ordering flatten(std::size_t n, std::span<const ProductVertex> tuples);

/// Number of coordinates where a and b agree. In K_n^t, d(a, b) = t - agreement.
std::size_t agreement_count(const ProductVertex& a, const ProductVertex& b);

/// Entries of the c-th block (0-based) of column j (1-based): rows
/// c n^{t-j} .. (c+1) n^{t-j} - 1.
std::vector<VertexId> block_entries(const FirstRowMatrix& a, std::size_t column, std::size_t block);

struct BlockClaimReport {
  std::size_t n = 0;
  std::size_t t = 0;
  /// Every block is constant.
  bool blocks_constant = true;
  /// Adjacent blocks c, c+1 of a column are identical iff n divides c + 1.
  bool repetition_rule = true;
  /// The n blocks of column j inside one block of column j - 1 are distinct.
  bool sibling_blocks_distinct = true;
  /// Every first block is all v_1.
  bool first_blocks_v1 = true;
  /// No two rows of the first-row matrix coincide.
  bool rows_distinct = true;
  /// First rows of the streamed A^k match the independently built matrix.
  bool matches_matrix_sequence = true;
  std::size_t adjacent_pairs_checked = 0;
  /// Adjacent pairs where "c + 1 divides n" predicts differently from what
  /// the matrix shows.
  std::size_t alternate_reading_mismatches = 0;
  std::vector<std::string> counterexamples;

  bool all_hold() const noexcept {
    return blocks_constant && repetition_rule && sibling_blocks_distinct && first_blocks_v1 &&
           rows_distinct && matches_matrix_sequence;
  }
};

BlockClaimReport verify_block_claims(std::size_t n, std::size_t t);

}  // namespace radiolabel::knt
