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

#include "radiolabel/labeling.hpp"

namespace radiolabel {

Ordering::Ordering(std::vector<VertexId> sequence) : sequence_(std::move(sequence)) {
  std::vector<bool> seen(sequence_.size(), false);
  for (VertexId v : sequence_) {
    if (v >= sequence_.size()) {
      throw Error(Errc::invalid_parameter, "ordering entry " + std::to_string(v) +
                                               " out of range for " +
                                               std::to_string(sequence_.size()) + " vertices");
    }
    if (seen[v]) {
      throw Error(Errc::invalid_parameter, "vertex " + std::to_string(v) + " repeated in ordering");
    }
    seen[v] = true;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  return Ordering(std::move(seq));
}

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (Label f : labels_) {
    if (f < 1) throw Error(Errc::invalid_parameter, "labels must be positive integers");
    span_ = std::max(span_, f);
  }
}

std::vector<Violation> check_k_radio(const Graph& graph, const Labeling& labeling, Distance k,
                                     ViolationReport report) {
  return check_k_radio(graph.distances(), labeling, k, report);
}

std::vector<Violation> check_radio(const Graph& graph, const Labeling& labeling,
                                   ViolationReport report) {
  return check_radio(graph.distances(), labeling, report);
}

Labeling induced_labeling(const Graph& graph, const Ordering& ordering) {
  return induced_labeling(graph.distances(), ordering);
}

bool is_consecutive(const Graph& graph, const Labeling& labeling) {
  return is_consecutive(graph.distances(), labeling);
}

bool check_consecutive_ordering(const Graph& graph, const Ordering& ordering) {
  return check_consecutive_ordering(graph.distances(), ordering);
}

}  // namespace radiolabel
