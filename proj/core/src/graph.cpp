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

#include "radiolabel/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

#include "radiolabel/errors.hpp"

namespace radiolabel {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a != 0 && b > cap / a) {
    throw Error(Errc::size_limit_exceeded,
                "product has more than " + std::to_string(cap) + " vertices");
  }
  return a * b;
}

std::size_t vertex_limit(std::size_t cap) {
  return std::min<std::size_t>(cap, std::numeric_limits<VertexId>::max());
}

std::vector<Distance> bfs(const Graph& graph, VertexId source) {
  std::vector<Distance> dist(graph.vertex_count(), -1);
  std::queue<VertexId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (VertexId w : graph.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::string product_name(const Graph& g, const Graph& h) {
  if (g.name().empty() || h.name().empty()) return {};
  return g.name() + "*" + h.name();
}

std::vector<std::shared_ptr<const Graph>> factor_list(const Graph& g) {
  if (!g.factors().empty()) return {g.factors().begin(), g.factors().end()};
  return {std::make_shared<const Graph>(g)};
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t vertex_count, std::vector<Distance> entries)
    : n_(vertex_count), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw Error(Errc::invalid_parameter, "distance matrix size does not match vertex count");
  }
  if (!entries_.empty()) diameter_ = *std::max_element(entries_.begin(), entries_.end());
}

ProductShape::ProductShape(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
  for (std::size_t r : radices_) {
    if (r == 0) throw Error(Errc::invalid_parameter, "product factor with no vertices");
    size_ = checked_mul(size_, r, std::numeric_limits<VertexId>::max());
  }
}

ProductShape ProductShape::power(std::size_t base, std::size_t arity) {
  return ProductShape(std::vector<std::size_t>(arity, base));
}

VertexId ProductShape::encode(const ProductVertex& vertex) const {
  if (vertex.arity() != arity()) {
    throw Error(Errc::arity_mismatch, "vertex has " + std::to_string(vertex.arity()) +
                                          " coordinates, shape has " + std::to_string(arity()));
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < radices_.size(); ++k) {
    if (vertex.coordinates[k] >= radices_[k]) {
      throw Error(Errc::index_out_of_range, "coordinate " + std::to_string(k) + " out of range");
    }
    flat = flat * radices_[k] + vertex.coordinates[k];
  }
  return static_cast<VertexId>(flat);
}

ProductVertex ProductShape::decode(VertexId flat) const {
  if (flat >= size_) throw Error(Errc::index_out_of_range, "flat index out of range");
  ProductVertex vertex{std::vector<VertexId>(radices_.size())};
  std::size_t rest = flat;
  for (std::size_t k = radices_.size(); k-- > 0;) {
    vertex.coordinates[k] = static_cast<VertexId>(rest % radices_[k]);
    rest /= radices_[k];
  }
  return vertex;
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, std::string name)
    : name_(std::move(name)) {
  if (vertex_count == 0) throw Error(Errc::invalid_parameter, "graph needs at least one vertex");
  if (vertex_count > std::numeric_limits<VertexId>::max()) {
    throw Error(Errc::size_limit_exceeded, "too many vertices");
  }
  std::vector<std::vector<VertexId>> adjacency(vertex_count);
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(Errc::index_out_of_range, "edge (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ") has an endpoint >= " +
                                                std::to_string(vertex_count));
    }
    if (e.u == e.v) throw Error(Errc::self_loop, "loop at vertex " + std::to_string(e.u));
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  finish(std::move(adjacency));
  const auto reach = bfs(*this, 0);
  if (std::any_of(reach.begin(), reach.end(), [](Distance d) { return d < 0; })) {
    throw Error(Errc::disconnected, "vertex 0 does not reach every vertex");
  }
}

void Graph::finish(std::vector<std::vector<VertexId>> adjacency) {
  offsets_.assign(1, 0);
  offsets_.reserve(adjacency.size() + 1);
  targets_.clear();
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    targets_.insert(targets_.end(), list.begin(), list.end());
    offsets_.push_back(targets_.size());
  }
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<FactorRun> Graph::factor_metadata() const {
  std::vector<FactorRun> runs;
  const Graph* previous = nullptr;
  for (const auto& factor : factors_) {
    if (previous != nullptr && (factor.get() == previous ||
                                (!factor->name().empty() && factor->name() == previous->name()))) {
      ++runs.back().arity;
    } else {
      runs.push_back({factor->name(), 1});
    }
    previous = factor.get();
  }
  return runs;
}

const DistanceMatrix& Graph::distances() const {
  std::call_once(cache_->once, [this] { cache_->matrix = all_pairs_distances(*this); });
  return *cache_->matrix;
}

DistanceMatrix all_pairs_distances(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n > kDenseDistanceCap) {
    throw Error(Errc::size_limit_exceeded,
                "dense distance matrix refused for " + std::to_string(n) + " vertices");
  }
  std::vector<Distance> entries;
  entries.reserve(n * n);
  for (VertexId s = 0; s < n; ++s) {
    const auto row = bfs(graph, s);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

ProductMetric::ProductMetric(std::vector<std::shared_ptr<const DistanceMatrix>> factors)
    : factors_(std::move(factors)) {
  std::vector<std::size_t> radices;
  radices.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (!f) throw Error(Errc::invalid_parameter, "null factor metric");
    radices.push_back(f->vertex_count());
    diameter_ += f->diameter();
  }
  shape_ = ProductShape(std::move(radices));
}

ProductMetric ProductMetric::power(std::shared_ptr<const DistanceMatrix> base, std::size_t arity) {
  if (arity == 0) throw Error(Errc::invalid_parameter, "power needs t >= 1");
  return ProductMetric(std::vector<std::shared_ptr<const DistanceMatrix>>(arity, std::move(base)));
}

Distance ProductMetric::distance(VertexId u, VertexId v) const noexcept {
  Distance total = 0;
  std::size_t a = u;
  std::size_t b = v;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const std::size_t r = factors_[k]->vertex_count();
    total += factors_[k]->distance(static_cast<VertexId>(a % r), static_cast<VertexId>(b % r));
    a /= r;
    b /= r;
  }
  return total;
}

Graph cartesian_product(const Graph& g, const Graph& h, std::size_t size_cap) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  const std::size_t n = checked_mul(ng, nh, vertex_limit(size_cap));
  std::vector<std::vector<VertexId>> adjacency(n);
  for (VertexId a = 0; a < ng; ++a) {
    for (VertexId b = 0; b < nh; ++b) {
      auto& list = adjacency[static_cast<std::size_t>(a) * nh + b];
      list.reserve(g.degree(a) + h.degree(b));
      for (VertexId a2 : g.neighbors(a)) list.push_back(static_cast<VertexId>(a2 * nh + b));
      for (VertexId b2 : h.neighbors(b)) list.push_back(static_cast<VertexId>(a * nh + b2));
    }
  }
  Graph out;
  out.finish(std::move(adjacency));
  out.name_ = product_name(g, h);
  out.factors_ = factor_list(g);
  const auto tail = factor_list(h);
  out.factors_.insert(out.factors_.end(), tail.begin(), tail.end());
  return out;
}

Graph cartesian_power(const Graph& g, std::size_t t, std::size_t size_cap) {
  if (t == 0) throw Error(Errc::invalid_parameter, "power needs t >= 1");
  const std::size_t base = g.vertex_count();
  std::size_t n = 1;
  for (std::size_t k = 0; k < t; ++k) n = checked_mul(n, base, vertex_limit(size_cap));
  const ProductShape shape = ProductShape::power(base, t);

  std::vector<std::vector<VertexId>> adjacency(n);
  std::vector<std::size_t> place(t, 1);
  for (std::size_t k = t - 1; k-- > 0;) place[k] = place[k + 1] * base;
  for (VertexId flat = 0; flat < n; ++flat) {
    const ProductVertex x = shape.decode(flat);
    auto& list = adjacency[flat];
    for (std::size_t k = 0; k < t; ++k) {
      const std::size_t without = flat - x.coordinates[k] * place[k];
      for (VertexId w : g.neighbors(x.coordinates[k])) {
        list.push_back(static_cast<VertexId>(without + w * place[k]));
      }
    }
  }
  Graph out;
  out.finish(std::move(adjacency));
  if (!g.name().empty()) out.name_ = t == 1 ? g.name() : g.name() + "^" + std::to_string(t);
  const auto base_factors = factor_list(g);
  for (std::size_t k = 0; k < t; ++k) {
    out.factors_.insert(out.factors_.end(), base_factors.begin(), base_factors.end());
  }
  return out;
}

Distance product_distance(const ProductVertex& a, const ProductVertex& b,
                          std::span<const DistanceMatrix* const> factor_distances) {
  if (a.arity() != b.arity() || a.arity() != factor_distances.size()) {
    throw Error(Errc::arity_mismatch, "product vertices and factor list differ in arity");
  }
  Distance total = 0;
  for (std::size_t k = 0; k < a.arity(); ++k) {
    const DistanceMatrix& d = *factor_distances[k];
    if (a.coordinates[k] >= d.vertex_count() || b.coordinates[k] >= d.vertex_count()) {
      throw Error(Errc::index_out_of_range, "coordinate " + std::to_string(k) + " out of range");
    }
    total += d.distance(a.coordinates[k], b.coordinates[k]);
  }
  return total;
}

Distance product_distance(const ProductVertex& a, const ProductVertex& b,
                          const DistanceMatrix& factor_distances) {
  if (a.arity() != b.arity()) {
    throw Error(Errc::arity_mismatch, "product vertices differ in arity");
  }
  const std::vector<const DistanceMatrix*> factors(a.arity(), &factor_distances);
  return product_distance(a, b, factors);
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_parameter, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges, "complete:" + std::to_string(n));
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_parameter, "path needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, edges, "path:" + std::to_string(n));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_parameter, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) edges.push_back({u, static_cast<VertexId>((u + 1) % n)});
  return Graph(n, edges, "cycle:" + std::to_string(n));
}

Graph star_graph(std::size_t leaves) {
  if (leaves == 0) throw Error(Errc::invalid_parameter, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges, "star:" + std::to_string(leaves));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
    edges.push_back({i, i + 5});
  }
  return Graph(10, edges, "petersen");
}

Graph read_edge_list(std::istream& in) {
  std::vector<long long> numbers;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 0) {
        throw Error(Errc::parse_error,
                    "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                        token + "'");
      }
      numbers.push_back(value);
    }
  }
  if (numbers.size() < 2) throw Error(Errc::parse_error, "missing 'n m' header");
  const auto n = static_cast<std::size_t>(numbers[0]);
  const auto m = static_cast<std::size_t>(numbers[1]);
  if (numbers.size() != 2 + 2 * m) {
    throw Error(Errc::parse_error, "header announces " + std::to_string(m) + " edges, found " +
                                       std::to_string((numbers.size() - 2) / 2) +
                                       ((numbers.size() % 2) != 0 ? " and a dangling index" : ""));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto u = numbers[2 + 2 * k];
    const auto v = numbers[3 + 2 * k];
    if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(Errc::index_out_of_range, "edge " + std::to_string(k) + " has an endpoint >= " +
                                                std::to_string(n));
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  const auto edges = graph.edges();
  out << graph.vertex_count() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

}  // namespace radiolabel
