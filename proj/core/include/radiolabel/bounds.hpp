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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "radiolabel/graph.hpp"

namespace radiolabel {

/// Largest base vertex count accepted by the threshold arithmetic.
inline constexpr std::uint64_t kMaxThresholdVertices = 1'000'000;

/// s = 1 + sum_{i=diam}^{n-1} (n - i) floor(i / diam). G^t has no
/// consecutive radio labeling for t >= s. Needs n >= 2, 1 <= diam <= n - 1.
std::uint64_t threshold_s(std::uint64_t n, std::uint64_t diam);

/// 1 + n(n^2 - 1)/6, the diam = 1 case.
std::uint64_t threshold_s_complete(std::uint64_t n);

/// min{t, floor((|i - j| - 1) / diam)}: the most coordinates x_i and x_j can
/// share in a consecutive labeling of G^t. i != j.
std::uint64_t agreement_cap(std::uint64_t t, std::uint64_t diam, std::uint64_t i, std::uint64_t j);

/// sum_{i=2}^{n+1} sum_{j=1}^{i-1} agreement_cap(t, diam, i, j), evaluated
/// term by term.
std::uint64_t agreement_budget(std::uint64_t n, std::uint64_t diam, std::uint64_t t);

enum class Verdict { has_consecutive, no_consecutive, unknown };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::has_consecutive: return "has-consecutive";
    case Verdict::no_consecutive: return "no-consecutive";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

struct VerdictEntry {
  std::uint64_t t = 0;
  Verdict verdict = Verdict::unknown;
};

struct ThresholdReport {
  std::uint64_t n = 0;
  std::uint64_t diam = 0;
  std::uint64_t s = 0;
  /// Present for complete bases (diam = 1).
  std::optional<std::uint64_t> closed_form_s;
  std::vector<VerdictEntry> entries;

  bool complete_base() const noexcept { return diam == 1; }
};

/// A connected graph of diameter 1 is complete, so the (n, diam) form knows
/// whether the construction applies.
ThresholdReport threshold_report(std::uint64_t n, std::uint64_t diam,
                                 std::span<const std::uint64_t> powers);

/// Same, with n and the diameter taken from the graph itself.
ThresholdReport threshold_report(const Graph& base, std::span<const std::uint64_t> powers);

VerdictEntry verdict(const Graph& base, std::uint64_t t);

}  // namespace radiolabel
