#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zz/graph.hpp"
#include "zz/subgraph.hpp"
#include "zz/vertex_map.hpp"

namespace zz {

/// H-labeling α: D(G) -> V(H), stored as one label index per dart id of G.
class HLabeling {
 public:
  /// Throws LabelingError unless there is one valid H index per dart of G.
  HLabeling(Graph base, Graph labels, std::vector<std::size_t> dart_labels);

  static HLabeling constant(Graph base, Graph labels, const VertexId& label);
  /// f(vertex, other) gives the label id of the dart (vertex, {vertex, other}).
  static HLabeling from_function(
      Graph base, Graph labels,
      const std::function<VertexId(const VertexId&, const VertexId&)>& f);
  /// Same, by vertex and label indices.
  static HLabeling from_indices(
      Graph base, Graph labels,
      const std::function<std::size_t(const Dart&)>& f);

  const Graph& base() const { return base_; }
  const Graph& labels() const { return labels_; }
  std::size_t operator()(std::size_t dart) const { return dart_labels_[dart]; }
  /// Throws LabelingError when d is not a dart of the base.
  std::size_t operator()(const Dart& d) const;
  const VertexId& label_id(std::size_t dart) const {
    return labels_.id(dart_labels_[dart]);
  }
  std::span<const std::size_t> table() const { return dart_labels_; }

  bool operator==(const HLabeling& other) const = default;

 private:
  Graph base_;
  Graph labels_;
  std::vector<std::size_t> dart_labels_;
};

/// All darts at each vertex carry the same label.
bool is_locally_constant(const HLabeling& a);

/// Common H-valency of the labels in Im(α).
struct ImageValency {
  std::optional<std::size_t> valency;
  /// Distinct valencies found, ascending, when there is no positive common one.
  std::vector<std::size_t> found;
  std::string message;

  explicit operator bool() const { return valency.has_value(); }
};

/// Fails when the image mixes valencies or consists of isolated H vertices.
/// Throws PreconditionError when the base has no darts.
ImageValency image_valency(const HLabeling& a);

/// β(x, {x,y}) = α(m(x), {m(x), m(y)}). Throws PreconditionError when m is
/// not a morphism and LabelingError when m's codomain is not α's base.
HLabeling pullback_labeling(const HLabeling& a, const VertexMap& m);

/// ψ∘α. Throws PreconditionError when ψ is not a morphism and LabelingError
/// when ψ's domain is not α's label graph.
HLabeling pushforward_labeling(const HLabeling& a, const VertexMap& psi);

/// α restricted to the darts of the induced subgraph on f.
HLabeling restrict_labeling(const HLabeling& a, const VertexSubset& f);

/// Vertex map between the bases of two H-labeled graphs sharing H.
class LabeledMorphism {
 public:
  /// Throws LabelingError on mismatched graphs or label graphs, and
  /// PreconditionError when the map is not a graph morphism.
  LabeledMorphism(VertexMap map, HLabeling source, HLabeling target);

  const VertexMap& map() const { return map_; }
  const HLabeling& source() const { return source_; }
  const HLabeling& target() const { return target_; }

 private:
  VertexMap map_;
  HLabeling source_;
  HLabeling target_;
};

/// α₂ ∘ D(φ) = α₁.
bool is_strict_morphism(const LabeledMorphism& lm);

/// N_H(α₁(d)) ⊆ N_H(α₂(D(φ)(d))) for every dart d.
bool is_weak_morphism(const LabeledMorphism& lm);

/// N_H(α₁(d)) = N_H(α₂(D(φ)(d))) for every dart d.
bool is_weak_morphism_bidirectional(const LabeledMorphism& lm);

/// ψ is onto on vertices and h ∼ h' exactly when ψ(h) ∼ ψ(h').
bool satisfies_neighbor_reflecting(const VertexMap& psi);

}  // namespace zz
