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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "radiolabel/graph.hpp"
#include "radiolabel/labeling.hpp"

namespace radiolabel {

enum class SearchStatus { exact, witness_found, exhausted_no_witness, timeout };

constexpr std::string_view to_string(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::witness_found: return "witness-found";
    case SearchStatus::exhausted_no_witness: return "exhausted-no-witness";
    case SearchStatus::timeout: return "timeout";
  }
  return "unknown";
}

struct SearchResult {
  SearchStatus status = SearchStatus::exact;
  /// Present whenever a witness is.
  std::optional<Label> span;
  std::optional<Ordering> witness;
  std::optional<Labeling> labeling;
  /// Complete orderings evaluated (exact search) or search nodes expanded
  /// (consecutive search).
  std::uint64_t orderings_examined = 0;
};

struct ExactSearchOptions {
  std::size_t limit = 9;
  bool prune = true;
  /// Only start orderings at the smallest vertex of each automorphism orbit.
  bool symmetry_reduction = false;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Minimum span over the induced labelings of all orderings. Ties go to the
/// lexicographically smallest ordering. Independent of thread count.
SearchResult exact_radio_number(const Graph& graph, const ExactSearchOptions& options = {});

struct ConsecutiveSearchOptions {
  std::chrono::milliseconds budget{30'000};
  /// Up to this many vertices candidates are tried in index order, which
  /// yields the lexicographically smallest witness. Larger graphs try the
  /// most constrained candidate first.
  std::size_t complete_bound = 12;
};

/// Backtracking over orderings that keep d(x_i, x_{i+c}) >= diam - c + 1.
SearchResult find_consecutive_ordering(const Graph& graph,
                                       const ConsecutiveSearchOptions& options = {});

/// True iff the ordering induces a consecutive radio labeling. Uses only
/// the labeling routines.
bool verify_witness(const Graph& graph, const Ordering& ordering);

/// orbit[v] = smallest vertex w such that some automorphism maps w to v.
std::vector<VertexId> automorphism_orbits(const Graph& graph);

}  // namespace radiolabel
