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

#include "radiolabel/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "radiolabel/errors.hpp"

namespace radiolabel {

namespace {

constexpr Label kUnbounded = std::numeric_limits<Label>::max();

// Depth-first enumeration of orderings starting at one fixed vertex. The
// label of the vertex placed at depth i only depends on the last diam
// placements, so it is computed incrementally.
class ExactSubtree {
 public:
  ExactSubtree(const DistanceMatrix& distances, bool prune)
      : d_(distances),
        n_(distances.vertex_count()),
        diam_(distances.diameter()),
        prune_(prune),
        sequence_(n_),
        along_(n_),
        used_(n_, false) {}

  void run(VertexId first) {
    sequence_[0] = first;
    along_[0] = 1;
    used_[first] = true;
    descend(1);
  }

  Label best() const noexcept { return best_; }
  const std::vector<VertexId>& best_sequence() const noexcept { return best_sequence_; }
  std::uint64_t examined() const noexcept { return examined_; }

 private:
  bool done() const noexcept { return prune_ && best_ == static_cast<Label>(n_); }

  void descend(std::size_t depth) {
    if (depth == n_) {
      ++examined_;
      if (along_[n_ - 1] < best_) {
        best_ = along_[n_ - 1];
        best_sequence_ = sequence_;
      }
      return;
    }
    const std::size_t first = depth > static_cast<std::size_t>(diam_) ? depth - diam_ : 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      Label f = along_[depth - 1] + 1;
      for (std::size_t j = first; j < depth; ++j) {
        f = std::max(f, along_[j] + diam_ + 1 - d_.distance(sequence_[j], v));
      }
      if (prune_ && f + static_cast<Label>(n_ - 1 - depth) >= best_) continue;
      sequence_[depth] = v;
      along_[depth] = f;
      used_[v] = true;
      descend(depth + 1);
      used_[v] = false;
      if (done()) return;
    }
  }

  const DistanceMatrix& d_;
  std::size_t n_;
  Label diam_;
  bool prune_;
  std::vector<VertexId> sequence_;
  std::vector<Label> along_;
  std::vector<bool> used_;
  Label best_ = kUnbounded;
  std::vector<VertexId> best_sequence_;
  std::uint64_t examined_ = 0;
};

struct SubtreeOutcome {
  Label best = kUnbounded;
  std::vector<VertexId> sequence;
  std::uint64_t examined = 0;
};

class AutomorphismFinder {
 public:
  explicit AutomorphismFinder(const Graph& graph)
      : graph_(graph), d_(graph.distances()), n_(graph.vertex_count()) {}

  bool exists(VertexId from, VertexId to) {
    if (graph_.degree(from) != graph_.degree(to)) return false;
    if (!same_profile(from, to)) return false;
    // Place vertices by distance from the root so every new vertex is
    // adjacent to an already placed one.
    const auto row = d_.row(from);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), VertexId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return row[a] < row[b]; });
    image_.assign(n_, kNone);
    taken_.assign(n_, false);
    image_[from] = to;
    taken_[to] = true;
    return extend(1);
  }

 private:
  static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  bool same_profile(VertexId a, VertexId b) const {
    std::vector<Distance> ra(d_.row(a).begin(), d_.row(a).end());
    std::vector<Distance> rb(d_.row(b).begin(), d_.row(b).end());
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
  }

  bool extend(std::size_t position) {
    if (position == n_) return true;
    const VertexId v = order_[position];
    for (VertexId w = 0; w < n_; ++w) {
      if (taken_[w] || graph_.degree(v) != graph_.degree(w)) continue;
      bool consistent = true;
      for (std::size_t p = 0; p < position && consistent; ++p) {
        const VertexId u = order_[p];
        consistent = d_.distance(u, v) == d_.distance(image_[u], w);
      }
      if (!consistent) continue;
      image_[v] = w;
      taken_[w] = true;
      if (extend(position + 1)) return true;
      taken_[w] = false;
      image_[v] = kNone;
    }
    return false;
  }

  const Graph& graph_;
  const DistanceMatrix& d_;
  std::size_t n_;
  std::vector<VertexId> order_;
  std::vector<VertexId> image_;
  std::vector<bool> taken_;
};

}  // namespace

std::vector<VertexId> automorphism_orbits(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<VertexId> orbit(n);
  AutomorphismFinder finder(graph);
  for (VertexId v = 0; v < n; ++v) {
    orbit[v] = v;
    for (VertexId r = 0; r < v; ++r) {
      if (orbit[r] == r && finder.exists(r, v)) {
        orbit[v] = r;
        break;
      }
    }
  }
  return orbit;
}

SearchResult exact_radio_number(const Graph& graph, const ExactSearchOptions& options) {
  const std::size_t n = graph.vertex_count();
  if (n > options.limit) {
    throw Error(Errc::too_large, std::to_string(n) + " vertices exceeds the exhaustive limit of " +
                                     std::to_string(options.limit));
  }
  const DistanceMatrix& distances = graph.distances();

  std::vector<VertexId> starts;
  if (options.symmetry_reduction) {
    const auto orbit = automorphism_orbits(graph);
    for (VertexId v = 0; v < n; ++v) {
      if (orbit[v] == v) starts.push_back(v);
    }
  } else {
    for (VertexId v = 0; v < n; ++v) starts.push_back(v);
  }

  std::vector<SubtreeOutcome> outcomes(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < starts.size(); i = next++) {
      ExactSubtree subtree(distances, options.prune);
      subtree.run(starts[i]);
      outcomes[i] = {subtree.best(), subtree.best_sequence(), subtree.examined()};
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(starts.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  const SubtreeOutcome* winner = nullptr;
  SearchResult result;
  for (const auto& outcome : outcomes) {
    result.orderings_examined += outcome.examined;
    if (winner == nullptr || outcome.best < winner->best) winner = &outcome;
  }
  Ordering witness(winner->sequence);
  result.status = SearchStatus::exact;
  result.labeling = induced_labeling(distances, witness);
  result.span = result.labeling->span();
  result.witness = std::move(witness);
  return result;
}

namespace {

class ConsecutiveSearch {
 public:
  ConsecutiveSearch(const DistanceMatrix& distances, const ConsecutiveSearchOptions& options)
      : d_(distances),
        n_(distances.vertex_count()),
        diam_(distances.diameter()),
        most_constrained_(n_ > options.complete_bound),
        deadline_(std::chrono::steady_clock::now() + options.budget),
        sequence_(n_),
        used_(n_, false) {}

  SearchStatus run() {
    if (descend(0)) return SearchStatus::witness_found;
    return timed_out_ ? SearchStatus::timeout : SearchStatus::exhausted_no_witness;
  }

  const std::vector<VertexId>& sequence() const noexcept { return sequence_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool fits(std::size_t depth, VertexId v) const {
    for (Distance c = 1; c <= diam_ && static_cast<std::size_t>(c) <= depth; ++c) {
      if (d_.distance(sequence_[depth - c], v) < diam_ - c + 1) return false;
    }
    return true;
  }

  std::size_t open_successors(VertexId v) const {
    std::size_t count = 0;
    for (VertexId w = 0; w < n_; ++w) {
      if (!used_[w] && w != v && d_.distance(v, w) >= diam_) ++count;
    }
    return count;
  }

  bool descend(std::size_t depth) {
    if (depth == n_) return true;
    if ((++nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
    }
    if (timed_out_) return false;

    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < n_; ++v) {
      if (!used_[v] && fits(depth, v)) candidates.push_back(v);
    }
    if (most_constrained_) {
      std::vector<std::pair<std::size_t, VertexId>> keyed;
      keyed.reserve(candidates.size());
      for (VertexId v : candidates) keyed.emplace_back(open_successors(v), v);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) candidates[i] = keyed[i].second;
    }
    for (VertexId v : candidates) {
      sequence_[depth] = v;
      used_[v] = true;
      if (descend(depth + 1)) return true;
      used_[v] = false;
      if (timed_out_) return false;
    }
    return false;
  }

  const DistanceMatrix& d_;
  std::size_t n_;
  Distance diam_;
  bool most_constrained_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<VertexId> sequence_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

SearchResult find_consecutive_ordering(const Graph& graph, const ConsecutiveSearchOptions& options) {
  const DistanceMatrix& distances = graph.distances();
  ConsecutiveSearch search(distances, options);
  SearchResult result;
  result.status = search.run();
  result.orderings_examined = search.nodes();
  if (result.status == SearchStatus::witness_found) {
    Ordering witness(search.sequence());
    result.labeling = induced_labeling(distances, witness);
    result.span = result.labeling->span();
    result.witness = std::move(witness);
  }
  return result;
}

bool verify_witness(const Graph& graph, const Ordering& ordering) {
  if (ordering.size() != graph.vertex_count()) return false;
  return is_consecutive(graph, induced_labeling(graph, ordering));
}

}  // namespace radiolabel
