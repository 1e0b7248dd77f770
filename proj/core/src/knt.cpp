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

#include "radiolabel/knt.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "radiolabel/errors.hpp"

namespace radiolabel::knt {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

CyclicShift::CyclicShift(std::size_t n) : n_(n) {
  if (n == 0) throw Error(Errc::invalid_parameter, "cyclic shift needs n >= 1");
}

std::size_t validate_parameters(std::size_t n, std::size_t t, std::size_t size_cap) {
  if (n < 3) {
    throw Error(Errc::parameter_out_of_range, "construction needs n >= 3, got " + std::to_string(n));
  }
  if (t < 1 || t > n) {
    throw Error(Errc::parameter_out_of_range,
                "construction needs 1 <= t <= n, got t = " + std::to_string(t));
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < t; ++i) {
    if (total > size_cap / n) {
      throw Error(Errc::size_limit_exceeded, std::to_string(n) + "^" + std::to_string(t) +
                                                 " exceeds the cap of " + std::to_string(size_cap));
    }
    total *= n;
  }
  return total;
}

std::size_t shift_exponent(std::size_t k, std::size_t n, std::size_t t) {
  std::size_t rest = k - 1;
  if (rest == 0) return t - 1;
  std::size_t e = 0;
  while (e + 1 < t && rest % n == 0) {
    rest /= n;
    ++e;
  }
  return e;
}

LabelMatrix::LabelMatrix(std::size_t n, std::size_t t) : n_(n), t_(t), entries_(n * t) {
  for (std::size_t r = 0; r < n; ++r) {
    std::fill_n(entries_.begin() + static_cast<std::ptrdiff_t>(r * t), t, static_cast<VertexId>(r));
  }
}

ProductVertex LabelMatrix::row(std::size_t r) const {
  const auto begin = entries_.begin() + static_cast<std::ptrdiff_t>(r * t_);
  return ProductVertex{{begin, begin + static_cast<std::ptrdiff_t>(t_)}};
}

std::size_t LabelMatrix::next_shifted_column() const noexcept {
  return t_ - 1 - shift_exponent(k_ + 1, n_, t_);
}

void LabelMatrix::advance() {
  const std::size_t column = next_shifted_column();
  const CyclicShift sigma(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    auto& entry = entries_[r * t_ + column];
    entry = sigma(entry);
  }
  ++k_;
}

FirstRowMatrix::FirstRowMatrix(std::size_t n, std::size_t t)
    : n_(n), t_(t), rows_(ipow(n, t - 1)), entries_(rows_ * t, 0) {
  const CyclicShift sigma(n);
  for (std::size_t i = 1; i < rows_; ++i) {
    // Row i here is row i + 1 in 1-based numbering.
    const std::size_t shifted = t - 1 - shift_exponent(i + 1, n, t);
    for (std::size_t j = 0; j < t; ++j) {
      const VertexId above = entries_[(i - 1) * t + j];
      entries_[i * t + j] = j == shifted ? sigma(above) : above;
    }
  }
}

std::vector<ProductVertex> ordering_by_matrices(std::size_t n, std::size_t t, std::size_t size_cap) {
  const std::size_t total = validate_parameters(n, t, size_cap);
  std::vector<ProductVertex> out;
  out.reserve(total);
  LabelMatrix a(n, t);
  const std::size_t matrices = total / n;
  for (std::size_t k = 1; k <= matrices; ++k) {
    if (k > 1) a.advance();
    for (std::size_t r = 0; r < n; ++r) out.push_back(a.row(r));
  }
  return out;
}

std::vector<ProductVertex> ordering_by_recursion(std::size_t n, std::size_t t,
                                                 std::size_t size_cap) {
  validate_parameters(n, t, size_cap);
  std::vector<ProductVertex> level;
  level.reserve(n);
  for (VertexId i = 0; i < n; ++i) level.push_back(ProductVertex{{i}});
  for (std::size_t depth = 2; depth <= t; ++depth) {
    const std::size_t groups = level.size();  // n^{depth-1}
    std::vector<ProductVertex> next;
    next.reserve(groups * n);
    for (std::size_t m = 0; m < groups; ++m) {
      const std::size_t carry = m / n;
      for (std::size_t k = 1; k <= n; ++k) {
        ProductVertex x = level[carry * n + k - 1];
        std::size_t residue = (k + m - carry) % n;
        if (residue == 0) residue = n;
        x.coordinates.push_back(static_cast<VertexId>(residue - 1));
        next.push_back(std::move(x));
      }
    }
    level = std::move(next);
  }
  return level;
}

Ordering flatten(std::size_t n, std::span<const ProductVertex> tuples) {
  if (tuples.empty()) return Ordering({});
  const ProductShape shape = ProductShape::power(n, tuples.front().arity());
  std::vector<VertexId> flat;
  flat.reserve(tuples.size());
  for (const auto& x : tuples) flat.push_back(shape.encode(x));
  return Ordering(std::move(flat));
}

std::size_t agreement_count(const ProductVertex& a, const ProductVertex& b) {
  if (a.arity() != b.arity()) throw Error(Errc::arity_mismatch, "tuples differ in arity");
  std::size_t same = 0;
  for (std::size_t k = 0; k < a.arity(); ++k) same += a.coordinates[k] == b.coordinates[k] ? 1 : 0;
  return same;
}

std::vector<VertexId> block_entries(const FirstRowMatrix& a, std::size_t column, std::size_t block) {
  const std::size_t t = a.columns();
  if (column < 1 || column > t) {
    throw Error(Errc::index_out_of_range, "column " + std::to_string(column) + " outside 1.." +
                                              std::to_string(t));
  }
  const std::size_t size = ipow(a.n(), t - column);
  const std::size_t count = ipow(a.n(), column - 1);
  if (block >= count) {
    throw Error(Errc::index_out_of_range, "column " + std::to_string(column) + " has " +
                                              std::to_string(count) + " blocks");
  }
  std::vector<VertexId> out;
  out.reserve(size);
  for (std::size_t r = block * size; r < (block + 1) * size; ++r) out.push_back(a.at(r, column - 1));
  return out;
}

BlockClaimReport verify_block_claims(std::size_t n, std::size_t t) {
  validate_parameters(n, t);
  BlockClaimReport report;
  report.n = n;
  report.t = t;
  const FirstRowMatrix a(n, t);

  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (report.counterexamples.size() < 32) report.counterexamples.push_back(what);
  };

  for (std::size_t j = 1; j <= t; ++j) {
    const std::size_t count = ipow(n, j - 1);
    std::vector<VertexId> value(count);
    for (std::size_t c = 0; c < count; ++c) {
      const auto entries = block_entries(a, j, c);
      if (std::adjacent_find(entries.begin(), entries.end(), std::not_equal_to<>()) !=
          entries.end()) {
        std::ostringstream what;
        what << "column " << j << " block " << c << " is not constant";
        fail(report.blocks_constant, what.str());
      }
      value[c] = entries.front();
    }
    if (value.front() != 0) {
      fail(report.first_blocks_v1, "first block of column " + std::to_string(j) + " is not v1");
    }
    for (std::size_t c = 0; c + 1 < count; ++c) {
      const bool identical = value[c] == value[c + 1];
      ++report.adjacent_pairs_checked;
      if (identical != ((c + 1) % n == 0)) {
        std::ostringstream what;
        what << "column " << j << " blocks " << c << "," << c + 1
             << (identical ? " repeat" : " differ") << " but n " << ((c + 1) % n == 0 ? "divides" : "does not divide")
             << " c+1";
        fail(report.repetition_rule, what.str());
      }
      if (identical != (n % (c + 1) == 0)) ++report.alternate_reading_mismatches;
    }
    if (j >= 2) {
      for (std::size_t b = 0; b * n < count; ++b) {
        std::set<VertexId> distinct(value.begin() + static_cast<std::ptrdiff_t>(b * n),
                                    value.begin() + static_cast<std::ptrdiff_t>((b + 1) * n));
        if (distinct.size() != n) {
          std::ostringstream what;
          what << "column " << j << " blocks " << b * n << ".." << (b + 1) * n - 1
               << " are not pairwise distinct";
          fail(report.sibling_blocks_distinct, what.str());
        }
      }
    }
  }

  std::set<std::vector<VertexId>> seen;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<VertexId> row(t);
    for (std::size_t j = 0; j < t; ++j) row[j] = a.at(r, j);
    if (!seen.insert(row).second) fail(report.rows_distinct, "row " + std::to_string(r) + " repeats");
  }

  LabelMatrix stream(n, t);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r > 0) stream.advance();
    for (std::size_t j = 0; j < t; ++j) {
      if (stream.at(0, j) != a.at(r, j)) {
        fail(report.matches_matrix_sequence,
             "first row of A^" + std::to_string(r + 1) + " differs from the first-row matrix");
        break;
      }
    }
  }
  return report;
}

}  // namespace radiolabel::knt
