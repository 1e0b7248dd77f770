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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radiolabel {

using VertexId = std::uint32_t;
using Distance = std::int32_t;

/// Vertex cap for materialized products and orderings. RADIOLABEL_SIZE_CAP
/// overrides it in the CLI.
inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// Dense all-pairs matrices beyond this many vertices are refused.
inline constexpr std::size_t kDenseDistanceCap = 8192;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Hop-count distances between every pair of vertices of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t vertex_count, std::vector<Distance> entries);

  std::size_t vertex_count() const noexcept { return n_; }
  Distance distance(VertexId u, VertexId v) const noexcept {
    return entries_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Distance> row(VertexId u) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  Distance diameter() const noexcept { return diameter_; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> entries_;
  Distance diameter_ = 0;
};

/// A vertex of a Cartesian product, one factor-vertex index per coordinate.
struct ProductVertex {
  std::vector<VertexId> coordinates;

  std::size_t arity() const noexcept { return coordinates.size(); }
  friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// Mixed-radix encoding of product vertices. The last coordinate is the
/// fastest-varying digit.
class ProductShape {
 public:
  ProductShape() = default;
  explicit ProductShape(std::vector<std::size_t> radices);
  static ProductShape power(std::size_t base, std::size_t arity);

  std::size_t arity() const noexcept { return radices_.size(); }
  std::size_t size() const noexcept { return size_; }
  std::span<const std::size_t> radices() const noexcept { return radices_; }

  VertexId encode(const ProductVertex& vertex) const;
  ProductVertex decode(VertexId flat) const;

 private:
  std::vector<std::size_t> radices_;
  std::size_t size_ = 1;
};

/// A (base graph, arity) run in the factor list of a product.
struct FactorRun {
  std::string base;
  std::size_t arity = 0;
};

/// Simple connected undirected graph in compressed adjacency form.
/// Immutable once built; copies share the lazily computed distance matrix.
class Graph {
 public:
  /// Normalizes edge orientation and drops duplicates. Throws on
  /// out-of-range endpoints, self-loops and disconnected input.
  Graph(std::size_t vertex_count, std::span<const Edge> edges, std::string name = {});

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const noexcept;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  const std::string& name() const noexcept { return name_; }

  /// Factor graphs in coordinate order when this graph was built as a
  /// product or power; empty otherwise.
  std::span<const std::shared_ptr<const Graph>> factors() const noexcept { return factors_; }
  std::vector<FactorRun> factor_metadata() const;

  /// All-pairs distances, computed on first use. Safe to call concurrently.
  const DistanceMatrix& distances() const;
  Distance diameter() const { return distances().diameter(); }

 private:
  friend Graph cartesian_product(const Graph&, const Graph&, std::size_t);
  friend Graph cartesian_power(const Graph&, std::size_t, std::size_t);

  struct DistanceCache {
    std::once_flag once;
    std::optional<DistanceMatrix> matrix;
  };

  Graph() = default;
  void finish(std::vector<std::vector<VertexId>> adjacency);

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::string name_;
  std::vector<std::shared_ptr<const Graph>> factors_;
  std::shared_ptr<DistanceCache> cache_ = std::make_shared<DistanceCache>();
};

/// Repeated BFS. Throws SizeLimitExceeded above kDenseDistanceCap vertices.
DistanceMatrix all_pairs_distances(const Graph& graph);

/// Distances on a Cartesian product computed from the factor matrices by
/// coordinate-wise addition, without materializing the product.
class ProductMetric {
 public:
  explicit ProductMetric(std::vector<std::shared_ptr<const DistanceMatrix>> factors);
  static ProductMetric power(std::shared_ptr<const DistanceMatrix> base, std::size_t arity);

  std::size_t vertex_count() const noexcept { return shape_.size(); }
  Distance diameter() const noexcept { return diameter_; }
  Distance distance(VertexId u, VertexId v) const noexcept;
  const ProductShape& shape() const noexcept { return shape_; }

 private:
  std::vector<std::shared_ptr<const DistanceMatrix>> factors_;
  ProductShape shape_;
  Distance diameter_ = 0;
};

Graph cartesian_product(const Graph& g, const Graph& h, std::size_t size_cap = kDefaultSizeCap);
Graph cartesian_power(const Graph& g, std::size_t t, std::size_t size_cap = kDefaultSizeCap);

/// Sum of factor distances over coordinates.
Distance product_distance(const ProductVertex& a, const ProductVertex& b,
                          std::span<const DistanceMatrix* const> factor_distances);
Distance product_distance(const ProductVertex& a, const ProductVertex& b,
                          const DistanceMatrix& factor_distances);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
/// Outer cycle 0..4, inner pentagram 5..9 (i ~ i+2 mod 5), spokes i ~ i+5.
Graph petersen_graph();

/// "n m" header, then m lines "u v"; '#' starts a comment.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& graph);

}  // namespace radiolabel
