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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "radiolabel/errors.hpp"
#include "radiolabel/knt.hpp"

namespace radiolabel::knt {
namespace {

std::vector<std::vector<VertexId>> coords(const std::vector<ProductVertex>& xs) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& x : xs) out.push_back(x.coordinates);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parameter_grid() {
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t t = 1; t <= n; ++t) grid.emplace_back(n, t);
  grid.emplace_back(6, 4);
  grid.emplace_back(6, 6);
  return grid;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::invalid_parameter;
}

TEST(CyclicShift, OrderIsN) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const CyclicShift sigma(n);
    for (VertexId v = 0; v < n; ++v) {
      EXPECT_EQ(sigma.power(v, n), v);
      VertexId w = v;
      for (std::size_t j = 1; j < n; ++j) {
        w = sigma(w);
        EXPECT_NE(w, v);
        EXPECT_EQ(w, sigma.power(v, j));
      }
      EXPECT_EQ(sigma(w), v);
    }
  }
}

TEST(ShiftExponent, LargestPowerDividingPredecessor) {
  EXPECT_EQ(shift_exponent(2, 3, 3), 0u);
  EXPECT_EQ(shift_exponent(3, 3, 3), 0u);
  EXPECT_EQ(shift_exponent(4, 3, 3), 1u);
  EXPECT_EQ(shift_exponent(7, 3, 3), 1u);
  EXPECT_EQ(shift_exponent(10, 3, 3), 2u);
  EXPECT_EQ(shift_exponent(28, 3, 3), 2u);  // capped at t - 1
  EXPECT_EQ(shift_exponent(1, 3, 3), 2u);   // k = 1 only hits the cap
}

TEST(Ordering, BaseCase) {
  EXPECT_EQ(coords(ordering_by_matrices(3, 1)), (std::vector<std::vector<VertexId>>{{0}, {1}, {2}}));
  EXPECT_EQ(coords(ordering_by_recursion(4, 1)),
            (std::vector<std::vector<VertexId>>{{0}, {1}, {2}, {3}}));
}

TEST(Ordering, K3SquaredByHand) {
  const std::vector<std::vector<VertexId>> expected{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2},
                                                    {2, 0}, {0, 2}, {1, 0}, {2, 1}};
  EXPECT_EQ(coords(ordering_by_matrices(3, 2)), expected);
  EXPECT_EQ(coords(ordering_by_recursion(3, 2)), expected);
}

TEST(Ordering, RecursionSpotValues) {
  const auto xs = ordering_by_recursion(3, 2);
  EXPECT_EQ(xs[3].coordinates, (std::vector<VertexId>{0, 1}));  // x_4, m = 1, k = 1
  EXPECT_EQ(xs[8].coordinates, (std::vector<VertexId>{2, 1}));  // x_9, m = 2, k = 3
}

TEST(Ordering, FirstBlockIsDiagonal) {
  for (const auto& [n, t] : parameter_grid()) {
    const auto xs = ordering_by_matrices(n, t);
    for (VertexId i = 0; i < n; ++i) {
      EXPECT_EQ(xs[i].coordinates, std::vector<VertexId>(t, i));
    }
  }
}

TEST(Ordering, MatrixAndRecursionAgree) {
  for (const auto& [n, t] : parameter_grid()) {
    EXPECT_EQ(ordering_by_matrices(n, t), ordering_by_recursion(n, t)) << n << "," << t;
  }
}

TEST(Ordering, IsPermutation) {
  for (const auto& [n, t] : parameter_grid()) {
    const auto xs = ordering_by_matrices(n, t);
    const Ordering flat = flatten(n, xs);
    std::vector<VertexId> sorted(flat.sequence().begin(), flat.sequence().end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) ASSERT_EQ(sorted[i], i);
  }
}

TEST(Ordering, AgreementWindow) {
  for (const auto& [n, t] : parameter_grid()) {
    const auto xs = ordering_by_matrices(n, t);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t s = 1; s <= t && i + s < xs.size(); ++s) {
        ASSERT_LE(agreement_count(xs[i], xs[i + s]), s - 1) << n << "," << t << " i=" << i << " s=" << s;
      }
    }
  }
}

TEST(Ordering, InducesConsecutiveLabelingOnSmallPowers) {
  for (const auto& [n, t] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
    const Graph g = cartesian_power(complete_graph(n), t);
    const Labeling f = induced_labeling(g, flatten(n, ordering_by_matrices(n, t)));
    EXPECT_EQ(f.span(), static_cast<Label>(g.vertex_count()));
    const auto oracle = testing::floyd_warshall(g);
    EXPECT_TRUE(testing::naive_is_k_radio(oracle, {f.labels().begin(), f.labels().end()},
                                          static_cast<int>(t)));
  }
}

TEST(Ordering, ParameterErrors) {
  EXPECT_EQ(code_of([] { ordering_by_matrices(2, 1); }), Errc::parameter_out_of_range);
  EXPECT_EQ(code_of([] { ordering_by_matrices(3, 4); }), Errc::parameter_out_of_range);
  EXPECT_EQ(code_of([] { ordering_by_recursion(3, 0); }), Errc::parameter_out_of_range);
  EXPECT_EQ(code_of([] { ordering_by_matrices(20, 6); }), Errc::size_limit_exceeded);
  EXPECT_EQ(code_of([] { ordering_by_matrices(4, 4, 255); }), Errc::size_limit_exceeded);
}

TEST(LabelMatrix, RowShiftAndSingleColumnSteps) {
  for (const auto& [n, t] : parameter_grid()) {
    const CyclicShift sigma(n);
    LabelMatrix a(n, t);
    const std::size_t count = validate_parameters(n, t) / n;
    for (std::size_t k = 1; k <= count; ++k) {
      if (k > 1) {
        const LabelMatrix before = a;
        const std::size_t expected_column = t - 1 - shift_exponent(k, n, t);
        ASSERT_EQ(a.next_shifted_column(), expected_column);
        a.advance();
        ASSERT_EQ(a.index(), k);
        for (std::size_t j = 0; j < t; ++j) {
          for (std::size_t r = 0; r < n; ++r) {
            const VertexId want = j == expected_column ? sigma(before.at(r, j)) : before.at(r, j);
            ASSERT_EQ(a.at(r, j), want);
          }
        }
      }
      for (std::size_t r = 1; r < n; ++r)
        for (std::size_t j = 0; j < t; ++j) ASSERT_EQ(a.at(r, j), sigma(a.at(r - 1, j)));
    }
  }
}

TEST(AgreementCount, Examples) {
  EXPECT_EQ(agreement_count({{0, 1, 2}}, {{0, 1, 2}}), 3u);
  EXPECT_EQ(agreement_count({{0, 1}}, {{0, 2}}), 1u);
  EXPECT_EQ(code_of([] { agreement_count({{0}}, {{0, 1}}); }), Errc::arity_mismatch);
  for (const auto& [n, t] : parameter_grid()) {
    const auto xs = ordering_by_matrices(n, t);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) ASSERT_EQ(agreement_count(xs[i], xs[i + 1]), 0u);
  }
}

TEST(BlockEntries, Shapes) {
  const FirstRowMatrix a(3, 3);
  EXPECT_EQ(a.rows(), 9u);
  const auto column1 = block_entries(a, 1, 0);
  EXPECT_EQ(column1, std::vector<VertexId>(9, 0));
  for (std::size_t c = 0; c < 9; ++c) EXPECT_EQ(block_entries(a, 3, c).size(), 1u);
  for (std::size_t j = 1; j <= 3; ++j) {
    const auto first = block_entries(a, j, 0);
    EXPECT_TRUE(std::all_of(first.begin(), first.end(), [](VertexId v) { return v == 0; }));
  }
  const FirstRowMatrix b(3, 2);
  EXPECT_EQ(block_entries(b, 2, 0).size(), 1u);
  EXPECT_EQ(code_of([&] { block_entries(b, 0, 0); }), Errc::index_out_of_range);
  EXPECT_EQ(code_of([&] { block_entries(b, 3, 0); }), Errc::index_out_of_range);
  EXPECT_EQ(code_of([&] { block_entries(b, 2, 3); }), Errc::index_out_of_range);
}

TEST(BlockClaims, HoldOnExamples) {
  for (const auto& [n, t] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {3, 3}, {4, 3}}) {
    const auto report = verify_block_claims(n, t);
    EXPECT_TRUE(report.all_hold()) << n << "," << t
                                   << (report.counterexamples.empty() ? "" : report.counterexamples.front());
  }
}

TEST(BlockClaims, AlternateReadingIsObservablyWrong) {
  // "c + 1 divides n" predicts a repeat for c = 0, yet blocks 0 and 1 of the
  // last column always differ.
  const auto report = verify_block_claims(3, 2);
  EXPECT_GT(report.adjacent_pairs_checked, 0u);
  EXPECT_GT(report.alternate_reading_mismatches, 0u);
  const FirstRowMatrix a(3, 2);
  EXPECT_NE(block_entries(a, 2, 0), block_entries(a, 2, 1));
}

TEST(FirstRowMatrix, RowsAreDistinct) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const FirstRowMatrix a(n, n);
    std::set<std::vector<VertexId>> rows;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::vector<VertexId> row;
      for (std::size_t j = 0; j < a.columns(); ++j) row.push_back(a.at(r, j));
      rows.insert(row);
    }
    EXPECT_EQ(rows.size(), a.rows());
  }
}

}  // namespace
}  // namespace radiolabel::knt
