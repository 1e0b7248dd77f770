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

#include "radiolabel/bounds.hpp"

#include <algorithm>

#include "radiolabel/errors.hpp"

namespace radiolabel {

namespace {

void check_base(std::uint64_t n, std::uint64_t diam) {
  if (n < 2 || n > kMaxThresholdVertices) {
    throw Error(Errc::invalid_parameter,
                "base vertex count must be in [2, " + std::to_string(kMaxThresholdVertices) +
                    "], got " + std::to_string(n));
  }
  if (diam < 1 || diam > n - 1) {
    throw Error(Errc::invalid_parameter, "diameter must be in [1, n-1], got " + std::to_string(diam));
  }
}

Verdict classify(const ThresholdReport& report, std::uint64_t t) {
  if (t >= report.s) return Verdict::no_consecutive;
  // K_n itself always works; the matrix construction covers 3 <= n, t <= n.
  if (report.complete_base() && (t == 1 || (report.n >= 3 && t <= report.n))) {
    return Verdict::has_consecutive;
  }
  return Verdict::unknown;
}

}  // namespace

std::uint64_t threshold_s(std::uint64_t n, std::uint64_t diam) {
  check_base(n, diam);
  std::uint64_t sum = 0;
  for (std::uint64_t i = diam; i <= n - 1; ++i) sum += (n - i) * (i / diam);
  return 1 + sum;
}

std::uint64_t threshold_s_complete(std::uint64_t n) {
  check_base(n, 1);
  return 1 + n * (n * n - 1) / 6;
}

std::uint64_t agreement_cap(std::uint64_t t, std::uint64_t diam, std::uint64_t i, std::uint64_t j) {
  if (i == j) throw Error(Errc::invalid_parameter, "agreement cap needs i != j");
  if (diam == 0) throw Error(Errc::invalid_parameter, "diameter must be positive");
  const std::uint64_t gap = i > j ? i - j : j - i;
  return std::min(t, (gap - 1) / diam);
}

std::uint64_t agreement_budget(std::uint64_t n, std::uint64_t diam, std::uint64_t t) {
  check_base(n, diam);
  std::uint64_t total = 0;
  for (std::uint64_t i = 2; i <= n + 1; ++i) {
    for (std::uint64_t j = 1; j < i; ++j) total += agreement_cap(t, diam, i, j);
  }
  return total;
}

ThresholdReport threshold_report(std::uint64_t n, std::uint64_t diam,
                                 std::span<const std::uint64_t> powers) {
  ThresholdReport report;
  report.n = n;
  report.diam = diam;
  report.s = threshold_s(n, diam);
  if (diam == 1) report.closed_form_s = threshold_s_complete(n);
  for (std::uint64_t t : powers) {
    if (t == 0) throw Error(Errc::invalid_parameter, "powers start at t = 1");
    report.entries.push_back({t, classify(report, t)});
  }
  return report;
}

ThresholdReport threshold_report(const Graph& base, std::span<const std::uint64_t> powers) {
  return threshold_report(base.vertex_count(), static_cast<std::uint64_t>(base.diameter()), powers);
}

VerdictEntry verdict(const Graph& base, std::uint64_t t) {
  const std::uint64_t powers[] = {t};
  return threshold_report(base, powers).entries.front();
}

}  // namespace radiolabel
