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

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "radiolabel/errors.hpp"
#include "radiolabel/graph.hpp"

namespace radiolabel {

using Label = std::int64_t;

/// Anything that answers vertex_count(), diameter() and distance(u, v):
/// DistanceMatrix for materialized graphs, ProductMetric for large powers.
template <class M>
concept Metric = requires(const M& m, VertexId u, VertexId v) {
  { m.vertex_count() } -> std::convertible_to<std::size_t>;
  { m.diameter() } -> std::convertible_to<Distance>;
  { m.distance(u, v) } -> std::convertible_to<Distance>;
};

/// A permutation x_1..x_N of the vertex set 0..N-1.
class Ordering {
 public:
  explicit Ordering(std::vector<VertexId> sequence);
  static Ordering identity(std::size_t n);

  std::size_t size() const noexcept { return sequence_.size(); }
  std::span<const VertexId> sequence() const noexcept { return sequence_; }
  VertexId operator[](std::size_t i) const noexcept { return sequence_[i]; }

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<VertexId> sequence_;
};

/// Positive integer labels, one per vertex.
class Labeling {
 public:
  explicit Labeling(std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const Label> labels() const noexcept { return labels_; }
  Label operator[](VertexId v) const noexcept { return labels_[v]; }
  Label span() const noexcept { return span_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
  Label span_ = 0;
};

/// A pair whose label gap falls short of k + 1 - d(u, v). Always u < v.
struct Violation {
  VertexId u = 0;
  VertexId v = 0;
  Label required_gap = 0;
  Label actual_gap = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class ViolationReport { exhaustive, first };

/// Every pair violating |f(u) - f(v)| >= k + 1 - d(u, v), sorted by (u, v).
/// Only pairs whose labels differ by less than k can violate, so the scan
/// walks vertices in label order and stops each window at gap k.
template <Metric M>
std::vector<Violation> check_k_radio(const M& metric, const Labeling& labeling, Distance k,
                                     ViolationReport report = ViolationReport::exhaustive) {
  const std::size_t n = metric.vertex_count();
  if (labeling.size() != n) {
    throw Error(Errc::incomplete_labeling, "labeling covers " + std::to_string(labeling.size()) +
                                               " of " + std::to_string(n) + " vertices");
  }
  if (k < 1 || k > metric.diameter()) {
    throw Error(Errc::k_out_of_range, "k = " + std::to_string(k) + " outside [1, " +
                                          std::to_string(metric.diameter()) + "]");
  }
  std::vector<VertexId> by_label(n);
  std::iota(by_label.begin(), by_label.end(), VertexId{0});
  std::stable_sort(by_label.begin(), by_label.end(),
                   [&](VertexId a, VertexId b) { return labeling[a] < labeling[b]; });

  std::vector<Violation> out;
  for (std::size_t a = 0; a < n; ++a) {
    const VertexId x = by_label[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      const VertexId y = by_label[b];
      const Label gap = labeling[y] - labeling[x];
      if (gap >= k) break;
      const Label required = Label{k} + 1 - metric.distance(x, y);
      if (gap < required) {
        out.push_back({std::min(x, y), std::max(x, y), required, gap});
        if (report == ViolationReport::first) return out;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Violation& l, const Violation& r) {
    return l.u != r.u ? l.u < r.u : l.v < r.v;
  });
  return out;
}

/// check_k_radio with k = diam. A single vertex is trivially valid.
template <Metric M>
std::vector<Violation> check_radio(const M& metric, const Labeling& labeling,
                                   ViolationReport report = ViolationReport::exhaustive) {
  if (metric.vertex_count() == 1 && labeling.size() == 1) return {};
  return check_k_radio(metric, labeling, metric.diameter(), report);
}

/// Smallest strictly increasing radio labeling along the ordering:
///   f(x_1) = 1,
///   f(x_i) = max(f(x_{i-1}) + 1, max_{j<i} f(x_j) + diam + 1 - d(x_j, x_i)).
/// Labels increase by at least one per step, so predecessors more than
/// diam - 1 places back can never bind and are skipped.
template <Metric M>
Labeling induced_labeling(const M& metric, const Ordering& ordering) {
  const std::size_t n = metric.vertex_count();
  if (ordering.size() != n) {
    throw Error(Errc::invalid_parameter, "ordering has " + std::to_string(ordering.size()) +
                                             " entries for " + std::to_string(n) + " vertices");
  }
  const Label diam = metric.diameter();
  std::vector<Label> along(n);
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    Label f = i == 0 ? 1 : along[i - 1] + 1;
    const std::size_t first = i > static_cast<std::size_t>(diam) ? i - diam : 0;
    for (std::size_t j = first; j < i; ++j) {
      f = std::max(f, along[j] + diam + 1 - metric.distance(ordering[j], ordering[i]));
    }
    along[i] = f;
    labels[ordering[i]] = f;
  }
  return Labeling(std::move(labels));
}

/// True iff the labels are exactly 1..N and form a radio labeling.
template <Metric M>
bool is_consecutive(const M& metric, const Labeling& labeling) {
  const std::size_t n = metric.vertex_count();
  if (labeling.size() != n || labeling.span() != static_cast<Label>(n)) return false;
  std::vector<bool> seen(n + 1, false);
  for (Label f : labeling.labels()) {
    if (f < 1 || f > static_cast<Label>(n) || seen[f]) return false;
    seen[f] = true;
  }
  return check_radio(metric, labeling, ViolationReport::first).empty();
}

/// d(x_i, x_{i+c}) >= diam - c + 1 for every i and 1 <= c <= diam.
template <Metric M>
bool check_consecutive_ordering(const M& metric, const Ordering& ordering) {
  const std::size_t n = metric.vertex_count();
  if (ordering.size() != n) return false;
  const Distance diam = metric.diameter();
  for (std::size_t i = 0; i < n; ++i) {
    for (Distance c = 1; c <= diam && i + c < n; ++c) {
      if (metric.distance(ordering[i], ordering[i + c]) < diam - c + 1) return false;
    }
  }
  return true;
}

std::vector<Violation> check_k_radio(const Graph& graph, const Labeling& labeling, Distance k,
                                     ViolationReport report = ViolationReport::exhaustive);
std::vector<Violation> check_radio(const Graph& graph, const Labeling& labeling,
                                   ViolationReport report = ViolationReport::exhaustive);
Labeling induced_labeling(const Graph& graph, const Ordering& ordering);
bool is_consecutive(const Graph& graph, const Labeling& labeling);
bool check_consecutive_ordering(const Graph& graph, const Ordering& ordering);

}  // namespace radiolabel
