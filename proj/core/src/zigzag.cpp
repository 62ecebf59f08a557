#include "zz/zigzag.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "zz/error.hpp"

namespace zz {

ZigZagGraph::ZigZagGraph(HLabeling labeling) : labeling_(std::move(labeling)) {
  const auto& g = labeling_.base();
  const auto& h = labeling_.labels();
  if (h.empty())
    throw PreconditionError("zig-zag product needs a label graph with vertices");

  std::vector<VertexId> ids;
  std::vector<char> present(h.vertex_count(), 0);
  fiber_offsets_.assign(g.vertex_count() + 1, 0);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    std::fill(present.begin(), present.end(), 0);
    for (auto d = g.dart_begin(u); d < g.dart_end(u); ++d)
      for (auto i : h.neighbors(labeling_(d))) present[i] = 1;
    for (std::size_t i = 0; i < h.vertex_count(); ++i) {
      if (!present[i]) continue;
      fiber_members_.push_back(ids.size());
      ids.push_back(VertexId::pair(g.id(u), h.id(i)));
      base_of_.push_back(u);
      label_of_.push_back(i);
    }
    fiber_offsets_[u + 1] = ids.size();
  }

  std::vector<std::pair<Edge, EdgeTag>> tagged;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    const auto at_u = labeling_(*g.dart_index(e.u, e.v));
    const auto at_v = labeling_(*g.dart_index(e.v, e.u));
    for (auto i : h.neighbors(at_u)) {
      const auto p = *find(e.u, i);
      for (auto j : h.neighbors(at_v)) {
        const auto q = *find(e.v, j);
        tagged.push_back({Edge{p, q},
                          EdgeTag{k, Edge::normalized(i, at_u),
                                  Edge::normalized(j, at_v)}});
      }
    }
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<Edge> edges;
  edges.reserve(tagged.size());
  tags_.reserve(tagged.size());
  for (auto& [edge, tag] : tagged) {
    edges.push_back(edge);
    tags_.push_back(tag);
  }
  product_ = Graph(std::move(ids), std::move(edges));
}

std::optional<std::size_t> ZigZagGraph::find(std::size_t u,
                                             std::size_t i) const {
  if (u + 1 >= fiber_offsets_.size()) return std::nullopt;
  auto f = fiber(u);
  auto it = std::lower_bound(f.begin(), f.end(), i, [&](std::size_t p, std::size_t x) {
    return label_of_[p] < x;
  });
  if (it == f.end() || label_of_[*it] != i) return std::nullopt;
  return *it;
}

ZigZagGraph zigzag_product(const Graph& g, const Graph& h, const HLabeling& a) {
  if (!(a.base() == g))
    throw LabelingError("labeling is not defined on the given base graph");
  if (!(a.labels() == h))
    throw LabelingError("labeling does not take values in the given H");
  return ZigZagGraph(a);
}

ZigZagGraph zigzag_product(const HLabeling& a) { return ZigZagGraph(a); }

bool product_valency_check(const ZigZagGraph& z) {
  const auto& g = z.base();
  const auto& h = z.labels();
  const auto& a = z.labeling();
  for (std::size_t p = 0; p < z.product().vertex_count(); ++p) {
    const auto u = z.base_vertex(p);
    const auto i = z.label_vertex(p);
    std::size_t expected = 0;
    for (auto d = g.dart_begin(u); d < g.dart_end(u); ++d) {
      if (!h.adjacent(a(d), i)) continue;
      const auto v = g.dart(d).other;
      expected += h.degree(a(*g.dart_index(v, u)));
    }
    if (z.product().degree(p) != expected) return false;
  }
  return true;
}

std::size_t predicted_edge_count(const HLabeling& a) {
  const auto& g = a.base();
  const auto& h = a.labels();
  std::size_t total = 0;
  for (const auto& e : g.edges())
    total += h.degree(a(*g.dart_index(e.u, e.v))) *
             h.degree(a(*g.dart_index(e.v, e.u)));
  return total;
}

bool product_edge_count_check(const ZigZagGraph& z) {
  return z.product().edge_count() == predicted_edge_count(z.labeling());
}

SectionEnumerator::SectionEnumerator(const ZigZagGraph& z) : z_(&z) {
  const auto& g = z.base();
  if (g.empty() || has_isolated_vertices(g) || !is_connected(g))
    throw PreconditionError(
        "sections need a connected base graph without isolated vertices");
  if (!is_locally_constant(z.labeling()))
    throw PreconditionError("sections need a locally constant labeling");
  auto val = image_valency(z.labeling());
  if (!val) throw PreconditionError("sections need " + val.message);
  k_ = *val.valency;
  total_ = 1;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (total_ > std::numeric_limits<std::size_t>::max() / k_) {
      total_ = std::numeric_limits<std::size_t>::max();
      break;
    }
    total_ *= k_;
  }
  digits_.assign(g.vertex_count(), 0);
}

std::optional<Section> SectionEnumerator::next() {
  if (done_) return std::nullopt;
  const auto& g = z_->base();
  Section s;
  s.choice.resize(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    s.choice[u] = z_->fiber(u)[digits_[u]];

  auto sub = induced_subgraph(z_->product(), VertexSubset(z_->product(), s.choice));
  std::vector<std::size_t> first(sub.graph.vertex_count());
  for (std::size_t k = 0; k < first.size(); ++k)
    first[k] = z_->base_vertex(sub.inclusion(k));
  s.isomorphic = is_graph_isomorphism(VertexMap(sub.graph, g, std::move(first)));
  s.subgraph = std::move(sub.graph);

  std::size_t pos = digits_.size();
  while (pos > 0) {
    --pos;
    if (++digits_[pos] < z_->fiber(pos).size()) break;
    digits_[pos] = 0;
    if (pos == 0) done_ = true;
  }
  if (digits_.empty()) done_ = true;
  return s;
}

SectionEnumerator section_subgraphs(const ZigZagGraph& z) {
  return SectionEnumerator(z);
}

VertexMap projection(const ZigZagGraph& z) {
  std::vector<std::size_t> image(z.product().vertex_count());
  for (std::size_t p = 0; p < image.size(); ++p) image[p] = z.base_vertex(p);
  return VertexMap(z.product(), z.base(), std::move(image));
}

namespace {

void require_pair_shape(const VertexMap& phi, const VertexMap& psi,
                        const ZigZagGraph& z1, const ZigZagGraph& z2) {
  if (!(phi.domain() == z1.base()) || !(phi.codomain() == z2.base()))
    throw MapError("φ must map the base of the first product to the second");
  if (!(psi.domain() == z1.labels()) || !(psi.codomain() == z2.labels()))
    throw MapError("ψ must map the label graph of the first product to the second");
}

// F(u,h) = (φ(u), ψ(h)); std::nullopt at the first vertex leaving V(z2),
// whose index is stored in `missing`.
std::optional<std::vector<std::size_t>> product_images(
    const VertexMap& phi, const VertexMap& psi, const ZigZagGraph& z1,
    const ZigZagGraph& z2, std::size_t* missing) {
  std::vector<std::size_t> image(z1.product().vertex_count());
  for (std::size_t p = 0; p < image.size(); ++p) {
    auto q = z2.find(phi(z1.base_vertex(p)), psi(z1.label_vertex(p)));
    if (!q) {
      if (missing) *missing = p;
      return std::nullopt;
    }
    image[p] = *q;
  }
  return image;
}

}  // namespace

Admission product_admission(const VertexMap& phi, const VertexMap& psi,
                            const ZigZagGraph& z1, const ZigZagGraph& z2) {
  require_pair_shape(phi, psi, z1, z2);
  if (!is_graph_morphism(phi) || !is_graph_morphism(psi))
    return Admission::rejected;
  LabeledMorphism lm(phi, pushforward_labeling(z1.labeling(), psi),
                     z2.labeling());
  if (is_strict_morphism(lm)) return Admission::strict;
  if (satisfies_neighbor_reflecting(psi) && is_weak_morphism(lm))
    return Admission::weak;
  return Admission::rejected;
}

InducedProductMap induced_product_map(const VertexMap& phi,
                                      const VertexMap& psi,
                                      const ZigZagGraph& z1,
                                      const ZigZagGraph& z2) {
  const auto route = product_admission(phi, psi, z1, z2);
  if (route == Admission::rejected)
    throw PreconditionError(
        "(φ, ψ) is neither a strict morphism nor a weak morphism with ψ "
        "neighbour-reflecting");
  std::size_t missing = 0;
  auto image = product_images(phi, psi, z1, z2, &missing);
  if (!image)
    throw std::logic_error("F sends " + z1.product().id(missing).to_string() +
                           " outside the target product");
  VertexMap f(z1.product(), z2.product(), std::move(*image));
  if (!is_graph_morphism(f))
    throw std::logic_error("F is not a graph morphism");

  const auto& a1 = z1.labeling();
  const auto& g1 = z1.base();
  std::vector<EdgeTag> tags;
  tags.reserve(z1.product().edge_count());
  for (std::size_t k = 0; k < z1.product().edge_count(); ++k) {
    auto e = z1.product().edges()[k];
    std::size_t u = z1.base_vertex(e.u), v = z1.base_vertex(e.v);
    std::size_t i = z1.label_vertex(e.u), j = z1.label_vertex(e.v);
    Edge first = Edge::normalized(psi(a1(*g1.dart_index(u, v))), psi(i));
    Edge second = Edge::normalized(psi(a1(*g1.dart_index(v, u))), psi(j));
    if (f(e.u) > f(e.v)) std::swap(first, second);
    tags.push_back({*z2.base().edge_index(phi(u), phi(v)), first, second});
  }
  return {std::move(f), route, std::move(tags)};
}

bool is_product_isomorphism(const VertexMap& phi, const VertexMap& psi,
                            const ZigZagGraph& z1, const ZigZagGraph& z2) {
  require_pair_shape(phi, psi, z1, z2);
  if (!is_graph_isomorphism(phi) || !is_graph_isomorphism(psi))
    throw PreconditionError("product isomorphism needs isomorphisms φ and ψ");

  LabeledMorphism lm(phi, pushforward_labeling(z1.labeling(), psi),
                     z2.labeling());
  if (!is_strict_morphism(lm) && !is_weak_morphism_bidirectional(lm))
    return false;

  auto forward = product_images(phi, psi, z1, z2, nullptr);
  if (!forward) return false;
  auto phi_inv = *inverse(phi);
  auto psi_inv = *inverse(psi);
  auto backward = product_images(phi_inv, psi_inv, z2, z1, nullptr);
  if (!backward) return false;

  VertexMap f(z1.product(), z2.product(), std::move(*forward));
  VertexMap g(z2.product(), z1.product(), std::move(*backward));
  if (!is_graph_morphism(f) || !is_graph_morphism(g)) return false;
  return compose(g, f) == VertexMap::identity(z1.product()) &&
         compose(f, g) == VertexMap::identity(z2.product());
}

VertexMap lift_pair(const VertexMap& f, std::span<const std::size_t> g,
                    const ZigZagGraph& z) {
  if (!(f.codomain() == z.base()))
    throw MapError("f must land in the base of the product");
  if (!is_graph_morphism(f))
    throw PreconditionError("f is not a graph morphism");
  const auto& src = f.domain();
  const auto& h = z.labels();
  if (g.size() != src.vertex_count())
    throw PreconditionError("g must assign one label vertex per vertex of Z");
  for (auto x : g)
    if (x >= h.vertex_count())
      throw PreconditionError("g assigns a vertex outside H");

  DartMap df(f);
  for (std::size_t d = 0; d < src.dart_count(); ++d) {
    auto dart = src.dart(d);
    if (!h.adjacent(g[dart.vertex], z.labeling()(df(d))))
      throw PreconditionError(
          "g is not adjacent to α∘D(f) at dart (" +
          src.id(dart.vertex).to_string() + ",{" +
          src.id(dart.vertex).to_string() + "," +
          src.id(dart.other).to_string() + "})");
  }
  std::vector<std::size_t> image(src.vertex_count());
  for (std::size_t w = 0; w < image.size(); ++w) {
    auto p = z.find(f(w), g[w]);
    if (!p)
      throw PreconditionError("(f, g) sends " + src.id(w).to_string() +
                              " to a pair that is not a product vertex");
    image[w] = *p;
  }
  VertexMap out(src, z.product(), std::move(image));
  if (!is_graph_morphism(out))
    throw std::logic_error("(f, g) is not a graph morphism");
  return out;
}

namespace {

CoverLift lift_along(const VertexMap& p, const ZigZagGraph& z) {
  auto beta = pullback_labeling(z.labeling(), p);
  ZigZagGraph lifted(beta);
  std::vector<std::size_t> image(lifted.product().vertex_count());
  for (std::size_t q = 0; q < image.size(); ++q) {
    auto target = z.find(p(lifted.base_vertex(q)), lifted.label_vertex(q));
    if (!target)
      throw std::logic_error("lifted vertex " +
                             lifted.product().id(q).to_string() +
                             " has no image in the base product");
    image[q] = *target;
  }
  VertexMap phat(lifted.product(), z.product(), std::move(image));
  return {std::move(beta), std::move(lifted), std::move(phat), false,
          std::nullopt};
}

}  // namespace

CoverLift lift_covering(const VertexMap& p, const ZigZagGraph& z) {
  if (!(p.codomain() == z.base()))
    throw MapError("covering map must land in the base of the product");
  if (!is_covering_map(p)) throw PreconditionError("p is not a covering map");
  auto out = lift_along(p, z);
  out.verified = is_covering_map(out.phat);
  return out;
}

CoverLift lift_combinatorial_cover(const VertexMap& p, const ZigZagGraph& z) {
  if (!(p.codomain() == z.base()))
    throw MapError("combinatorial cover must land in the base of the product");
  auto base_check = is_combinatorial_cover(p);
  if (!base_check)
    throw PreconditionError("p is not a combinatorial cover: " +
                            base_check.message);
  auto out = lift_along(p, z);
  auto lifted_check = is_combinatorial_cover(out.phat);
  out.index = lifted_check.index;
  out.verified = lifted_check.index == base_check.index;
  return out;
}

PiCoverCheck pi_combinatorial_cover_check(const ZigZagGraph& z) {
  if (!is_locally_constant(z.labeling()))
    throw PreconditionError("π cover check needs a locally constant labeling");
  auto val = image_valency(z.labeling());
  if (!val) throw PreconditionError("π cover check needs " + val.message);
  PiCoverCheck out;
  out.valency = *val.valency;
  out.expected_index = out.valency * out.valency;
  out.check = is_combinatorial_cover(projection(z));
  return out;
}

}  // namespace zz
