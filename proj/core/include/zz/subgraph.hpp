#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "zz/graph.hpp"
#include "zz/vertex_map.hpp"

namespace zz {

using Rational = boost::rational<std::int64_t>;

/// Sorted, duplicate-free vertex indices of one graph.
class VertexSubset {
 public:
  VertexSubset() = default;
  /// Throws PreconditionError when an index is not a vertex of g.
  VertexSubset(const Graph& g, std::vector<std::size_t> members);
  /// Throws PreconditionError when an id is not a vertex of g.
  static VertexSubset from_ids(const Graph& g, std::span<const VertexId> ids);
  static VertexSubset all(const Graph& g);

  std::span<const std::size_t> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t v) const;
  bool is_subset_of(const VertexSubset& other) const;
  std::vector<char> mask(std::size_t vertex_count) const;

 private:
  std::vector<std::size_t> members_;
};

/// Induced subgraph on `f`, keeping the original vertex ids, together with
/// the inclusion map into g.
struct InducedSubgraph {
  Graph graph;
  VertexMap inclusion;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& f);

/// Edges of g with exactly one endpoint in f.
std::vector<Edge> boundary(const Graph& g, const VertexSubset& f);

/// |∂f| / |f|. Throws PreconditionError for empty f.
Rational isoperimetric_ratio(const Graph& g, const VertexSubset& f);

}  // namespace zz
