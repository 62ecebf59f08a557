#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zz/graph.hpp"

namespace zz {

/// Total function V(domain) -> V(codomain), stored by vertex index.
class VertexMap {
 public:
  /// Throws MapError if `image` is not one valid codomain index per domain
  /// vertex.
  VertexMap(Graph domain, Graph codomain, std::vector<std::size_t> image);

  /// Throws MapError unless the pairs define a total function on the domain.
  static VertexMap from_pairs(
      Graph domain, Graph codomain,
      const std::vector<std::pair<VertexId, VertexId>>& pairs);
  static VertexMap from_function(
      Graph domain, Graph codomain,
      const std::function<VertexId(const VertexId&)>& f);
  static VertexMap identity(const Graph& g);

  const Graph& domain() const { return domain_; }
  const Graph& codomain() const { return codomain_; }
  std::size_t operator()(std::size_t v) const { return image_[v]; }
  const VertexId& image_id(std::size_t v) const {
    return codomain_.id(image_[v]);
  }
  std::span<const std::size_t> image() const { return image_; }

  bool operator==(const VertexMap& other) const = default;

 private:
  Graph domain_;
  Graph codomain_;
  std::vector<std::size_t> image_;
};

/// outer ∘ inner. Throws MapError when inner's codomain is not outer's domain.
VertexMap compose(const VertexMap& outer, const VertexMap& inner);

/// u ∼ v implies m(u) ∼ m(v). Since the codomain has no loops this also
/// rejects maps identifying two adjacent vertices.
bool is_graph_morphism(const VertexMap& m);

bool is_bijective(const VertexMap& m);

/// Bijective morphism whose inverse is a morphism as well.
bool is_graph_isomorphism(const VertexMap& m);

/// Inverse of a bijective map; std::nullopt otherwise.
std::optional<VertexMap> inverse(const VertexMap& m);

/// D(φ): dart id of the domain -> dart id of the codomain.
class DartMap {
 public:
  /// Throws PreconditionError when m is not a graph morphism.
  explicit DartMap(const VertexMap& m);

  std::size_t operator()(std::size_t dart) const { return image_[dart]; }
  Dart operator()(const Dart& d) const;
  std::span<const std::size_t> image() const { return image_; }
  const VertexMap& vertex_map() const { return map_; }

 private:
  VertexMap map_;
  std::vector<std::size_t> image_;
};

DartMap induced_dart_map(const VertexMap& m);

/// Morphism whose restriction to every neighbourhood N(x) is a bijection
/// onto N(m(x)).
bool is_covering_map(const VertexMap& m);

/// Outcome of the combinatorial-cover test. On success `index` holds the
/// common number of domain edges over each codomain edge.
struct CombinatorialCoverCheck {
  enum class Violation {
    none,
    not_morphism,
    no_base_edges,
    edge_fiber_count,
    neighbor_fiber_count,
  };

  std::optional<std::size_t> index;
  Violation violation = Violation::none;
  /// Witness ids: the codomain edge (u, v) for edge_fiber_count, the domain
  /// edge for not_morphism, and (x, y, v) for neighbor_fiber_count.
  std::vector<VertexId> witness;
  std::string message;

  explicit operator bool() const { return index.has_value(); }
};

CombinatorialCoverCheck is_combinatorial_cover(const VertexMap& m);

}  // namespace zz
