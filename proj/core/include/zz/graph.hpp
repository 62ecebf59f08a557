#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zz/vertex_id.hpp"

namespace zz {

/// Undirected edge given by vertex indices, always stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  static Edge normalized(std::size_t a, std::size_t b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  auto operator<=>(const Edge&) const = default;
};

/// Element of D(G): the vertex `vertex` together with its incident edge
/// {vertex, other}.
struct Dart {
  std::size_t vertex = 0;
  std::size_t other = 0;

  Edge edge() const { return Edge::normalized(vertex, other); }
  auto operator<=>(const Dart&) const = default;
};

/// Finite simple undirected graph. Immutable; copies share storage.
///
/// Vertices are kept in canonical VertexId order, so a vertex index is its
/// rank in that order and every iteration below is canonical. Adjacency is
/// compressed-row: the neighbours of u occupy positions
/// [dart_begin(u), dart_end(u)) in ascending order, and that position is the
/// dart id of (u, {u, v}).
class Graph {
 public:
  Graph();

  /// `edges` refer to positions in `vertices`, which may be in any order.
  /// Throws GraphError on duplicate ids, loops, multi-edges or bad indices.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  static Graph from_ids(std::vector<VertexId> vertices,
                        const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t vertex_count() const { return data_->ids.size(); }
  std::size_t edge_count() const { return data_->edges.size(); }
  std::size_t dart_count() const { return data_->targets.size(); }
  bool empty() const { return vertex_count() == 0; }

  std::span<const VertexId> vertices() const { return data_->ids; }
  const VertexId& id(std::size_t v) const { return data_->ids[v]; }
  std::optional<std::size_t> find(const VertexId& id) const;
  /// Throws GraphError when `id` is not a vertex.
  std::size_t index_of(const VertexId& id) const;

  std::span<const Edge> edges() const { return data_->edges; }
  std::span<const std::size_t> neighbors(std::size_t v) const {
    return {data_->targets.data() + data_->offsets[v],
            data_->targets.data() + data_->offsets[v + 1]};
  }
  std::size_t degree(std::size_t v) const {
    return data_->offsets[v + 1] - data_->offsets[v];
  }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;

  std::size_t dart_begin(std::size_t v) const { return data_->offsets[v]; }
  std::size_t dart_end(std::size_t v) const { return data_->offsets[v + 1]; }
  Dart dart(std::size_t d) const {
    return {data_->sources[d], data_->targets[d]};
  }
  std::optional<std::size_t> dart_index(std::size_t vertex,
                                        std::size_t other) const;
  std::size_t dart_edge(std::size_t d) const { return data_->dart_edges[d]; }

  /// Structural equality (same ids, same edges).
  bool operator==(const Graph& other) const;

 private:
  struct Data {
    std::vector<VertexId> ids;
    std::vector<Edge> edges;
    std::vector<std::size_t> offsets{0};
    std::vector<std::size_t> targets;
    std::vector<std::size_t> sources;
    std::vector<std::size_t> dart_edges;
  };
  std::shared_ptr<const Data> data_;
};

/// All darts in canonical (vertex, edge) order; exactly two per edge.
std::vector<Dart> darts(const Graph& g);

/// The common degree when g is regular and nonempty.
std::optional<std::size_t> regular_degree(const Graph& g);
std::size_t max_degree(const Graph& g);
bool has_isolated_vertices(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace zz
