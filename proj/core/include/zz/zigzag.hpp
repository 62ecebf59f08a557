#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zz/graph.hpp"
#include "zz/labeling.hpp"
#include "zz/vertex_map.hpp"

namespace zz {

/// Tag (e, ε₁, ε₂) of a product edge {(u,i),(v,j)}: the base edge e = {u,v}
/// and the label-graph edges ε₁ = {i, α(u,e)}, ε₂ = {j, α(v,e)}. (u,i) is
/// the endpoint with the smaller product index.
struct EdgeTag {
  std::size_t base_edge = 0;
  Edge first;
  Edge second;

  auto operator<=>(const EdgeTag&) const = default;
};

/// G ⊠_α H. Vertex (u,i) exists iff i is an H-neighbour of some label at u;
/// {(u,i),(v,j)} is an edge iff e = {u,v} ∈ E(G), i ∼ α(u,e), j ∼ α(v,e).
/// Product vertex ids are VertexId::pair(u, i).
class ZigZagGraph {
 public:
  explicit ZigZagGraph(HLabeling labeling);

  const Graph& product() const { return product_; }
  const HLabeling& labeling() const { return labeling_; }
  const Graph& base() const { return labeling_.base(); }
  const Graph& labels() const { return labeling_.labels(); }

  /// First coordinate of product vertex p, as a base index.
  std::size_t base_vertex(std::size_t p) const { return base_of_[p]; }
  /// Second coordinate of product vertex p, as a label-graph index.
  std::size_t label_vertex(std::size_t p) const { return label_of_[p]; }
  /// Product vertices over base vertex u, ascending.
  std::span<const std::size_t> fiber(std::size_t u) const {
    return {fiber_members_.data() + fiber_offsets_[u],
            fiber_members_.data() + fiber_offsets_[u + 1]};
  }
  std::optional<std::size_t> find(std::size_t u, std::size_t i) const;

  /// Indexed like product().edges().
  std::span<const EdgeTag> edge_tags() const { return tags_; }

 private:
  HLabeling labeling_;
  Graph product_;
  std::vector<std::size_t> base_of_;
  std::vector<std::size_t> label_of_;
  std::vector<std::size_t> fiber_offsets_;
  std::vector<std::size_t> fiber_members_;
  std::vector<EdgeTag> tags_;
};

/// Throws LabelingError when `a` is not a labeling of g by h, and
/// PreconditionError when h has no vertices.
ZigZagGraph zigzag_product(const Graph& g, const Graph& h, const HLabeling& a);
ZigZagGraph zigzag_product(const HLabeling& a);

/// val(u,i) = Σ over v ∼ u with α(u,{v,u}) ∼ i of val(α(v,{v,u})), for
/// every product vertex.
bool product_valency_check(const ZigZagGraph& z);

/// |E| = Σ over base edges {u,v} of val(α(u,e))·val(α(v,e)).
bool product_edge_count_check(const ZigZagGraph& z);

/// The formula side of product_edge_count_check.
std::size_t predicted_edge_count(const HLabeling& a);

/// One section: a choice of one product vertex over each base vertex.
struct Section {
  std::vector<std::size_t> choice;  // product index, per base vertex
  Graph subgraph;                   // induced on the chosen vertices
  /// First coordinate restricted to the section is an isomorphism onto G.
  bool isomorphic = false;
};

/// Enumerates all k^|V(G)| sections in mixed-radix order (last base vertex
/// varies fastest).
class SectionEnumerator {
 public:
  /// Throws PreconditionError unless the labeling is locally constant with a
  /// common image valency k and the base is connected without isolated
  /// vertices.
  explicit SectionEnumerator(const ZigZagGraph& z);

  std::optional<Section> next();
  std::size_t valency() const { return k_; }
  /// k^|V(G)|, saturating at SIZE_MAX.
  std::size_t total() const { return total_; }

 private:
  const ZigZagGraph* z_;
  std::size_t k_ = 0;
  std::size_t total_ = 0;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

SectionEnumerator section_subgraphs(const ZigZagGraph& z);

/// π: (u,i) ↦ u, into the full base graph. The image is the set of base
/// vertices that lift, which is all non-isolated base vertices unless some
/// label has an empty H-neighbourhood.
VertexMap projection(const ZigZagGraph& z);

/// How a pair (φ, ψ) is admitted as a morphism of labeled products.
enum class Admission {
  rejected,
  strict,  // φ: (G₁, ψ∘α₁) -> (G₂, α₂) strictly commutes
  weak,    // φ weak for (G₁, ψ∘α₁) -> (G₂, α₂) and ψ neighbour-reflecting
};

Admission product_admission(const VertexMap& phi, const VertexMap& psi,
                            const ZigZagGraph& z1, const ZigZagGraph& z2);

/// F(u,h) = (φ(u), ψ(h)) with the image of every product edge tag.
struct InducedProductMap {
  VertexMap map;
  Admission route = Admission::rejected;
  /// Image tags (e', ε₁', ε₂') indexed like z1.product().edges(), oriented
  /// to z2's edge order. With a strict admission they equal z2's tags.
  std::vector<EdgeTag> edge_images;
};

/// Throws PreconditionError when (φ, ψ) is rejected, and std::logic_error if
/// F leaves V(z2) or is not a morphism despite admission.
InducedProductMap induced_product_map(const VertexMap& phi,
                                      const VertexMap& psi,
                                      const ZigZagGraph& z1,
                                      const ZigZagGraph& z2);

/// For graph isomorphisms φ, ψ: admitted by the strict route, or by the
/// bidirectional condition N(ψ(α₁(d))) = N(α₂(D(φ)(d))); then F and
/// (φ⁻¹, ψ⁻¹) are checked to be mutually inverse morphisms. Throws
/// PreconditionError when φ or ψ is not an isomorphism.
bool is_product_isomorphism(const VertexMap& phi, const VertexMap& psi,
                            const ZigZagGraph& z1, const ZigZagGraph& z2);

/// w ↦ (f(w), g(w)) for a morphism f: Z -> G and g: V(Z) -> V(H) given as
/// label indices per Z vertex. Requires g(w) ∼ α(D(f)(w,e)) for every dart;
/// throws PreconditionError naming the first failing dart otherwise.
VertexMap lift_pair(const VertexMap& f, std::span<const std::size_t> g,
                    const ZigZagGraph& z);

/// Lift of a cover p: G̃ -> G through the product.
struct CoverLift {
  HLabeling beta;            // α pulled back along p
  ZigZagGraph lifted;        // G̃ ⊠_β H
  VertexMap phat;            // (x,i) ↦ (p(x), i)
  bool verified = false;     // covering map / combinatorial cover of index m
  std::optional<std::size_t> index;  // combinatorial lifts only
};

/// Throws PreconditionError when p is not a covering map over z's base.
CoverLift lift_covering(const VertexMap& p, const ZigZagGraph& z);

/// Throws PreconditionError when p is not a combinatorial cover over z's
/// base. `verified` holds when p̂ is a combinatorial cover with p's index.
CoverLift lift_combinatorial_cover(const VertexMap& p, const ZigZagGraph& z);

/// π as a combinatorial cover.
struct PiCoverCheck {
  std::size_t valency = 0;        // n
  std::size_t expected_index = 0; // n²
  CombinatorialCoverCheck check;

  bool ok() const { return check.index == expected_index; }
};

/// Throws PreconditionError unless α is locally constant with a common
/// image valency.
PiCoverCheck pi_combinatorial_cover_check(const ZigZagGraph& z);

}  // namespace zz
