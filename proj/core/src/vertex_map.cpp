#include "zz/vertex_map.hpp"

#include <algorithm>

#include "zz/error.hpp"

namespace zz {

VertexMap::VertexMap(Graph domain, Graph codomain,
                     std::vector<std::size_t> image)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      image_(std::move(image)) {
  if (image_.size() != domain_.vertex_count())
    throw MapError("vertex map is not total: " + std::to_string(image_.size()) +
                   " images for " + std::to_string(domain_.vertex_count()) +
                   " vertices");
  for (auto w : image_)
    if (w >= codomain_.vertex_count())
      throw MapError("vertex map image outside the codomain");
}

VertexMap VertexMap::from_pairs(
    Graph domain, Graph codomain,
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(domain.vertex_count(), unset);
  for (const auto& [from, to] : pairs) {
    auto src = domain.find(from);
    if (!src)
      throw MapError("map source " + from.to_string() +
                     " is not a vertex of the domain");
    auto dst = codomain.find(to);
    if (!dst)
      throw MapError("map target " + to.to_string() +
                     " is not a vertex of the codomain");
    if (image[*src] != unset && image[*src] != *dst)
      throw MapError("vertex " + from.to_string() + " mapped twice");
    image[*src] = *dst;
  }
  for (std::size_t v = 0; v < image.size(); ++v)
    if (image[v] == unset)
      throw MapError("vertex map is not total: no image for " +
                     domain.id(v).to_string());
  return VertexMap(std::move(domain), std::move(codomain), std::move(image));
}

VertexMap VertexMap::from_function(
    Graph domain, Graph codomain,
    const std::function<VertexId(const VertexId&)>& f) {
  std::vector<std::size_t> image;
  image.reserve(domain.vertex_count());
  for (const auto& id : domain.vertices()) {
    auto target = f(id);
    auto w = codomain.find(target);
    if (!w)
      throw MapError("image " + target.to_string() + " of " + id.to_string() +
                     " is not a vertex of the codomain");
    image.push_back(*w);
  }
  return VertexMap(std::move(domain), std::move(codomain), std::move(image));
}

VertexMap VertexMap::identity(const Graph& g) {
  std::vector<std::size_t> image(g.vertex_count());
  for (std::size_t v = 0; v < image.size(); ++v) image[v] = v;
  return VertexMap(g, g, std::move(image));
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  if (!(inner.codomain() == outer.domain()))
    throw MapError("cannot compose: codomain and domain differ");
  std::vector<std::size_t> image(inner.domain().vertex_count());
  for (std::size_t v = 0; v < image.size(); ++v) image[v] = outer(inner(v));
  return VertexMap(inner.domain(), outer.codomain(), std::move(image));
}

bool is_graph_morphism(const VertexMap& m) {
  const auto& to = m.codomain();
  for (const auto& e : m.domain().edges())
    if (!to.adjacent(m(e.u), m(e.v))) return false;
  return true;
}

bool is_bijective(const VertexMap& m) {
  if (m.domain().vertex_count() != m.codomain().vertex_count()) return false;
  std::vector<char> hit(m.codomain().vertex_count(), 0);
  for (auto w : m.image()) {
    if (hit[w]) return false;
    hit[w] = 1;
  }
  return true;
}

bool is_graph_isomorphism(const VertexMap& m) {
  return is_bijective(m) && is_graph_morphism(m) &&
         m.domain().edge_count() == m.codomain().edge_count();
}

std::optional<VertexMap> inverse(const VertexMap& m) {
  if (!is_bijective(m)) return std::nullopt;
  std::vector<std::size_t> image(m.codomain().vertex_count());
  for (std::size_t v = 0; v < m.domain().vertex_count(); ++v) image[m(v)] = v;
  return VertexMap(m.codomain(), m.domain(), std::move(image));
}

DartMap::DartMap(const VertexMap& m) : map_(m) {
  if (!is_graph_morphism(m))
    throw PreconditionError("induced dart map requires a graph morphism");
  const auto& from = m.domain();
  const auto& to = m.codomain();
  image_.resize(from.dart_count());
  for (std::size_t d = 0; d < from.dart_count(); ++d) {
    auto dart = from.dart(d);
    image_[d] = *to.dart_index(m(dart.vertex), m(dart.other));
  }
}

Dart DartMap::operator()(const Dart& d) const {
  return {map_(d.vertex), map_(d.other)};
}

DartMap induced_dart_map(const VertexMap& m) { return DartMap(m); }

bool is_covering_map(const VertexMap& m) {
  if (!is_graph_morphism(m)) return false;
  const auto& from = m.domain();
  const auto& to = m.codomain();
  std::vector<std::size_t> images;
  for (std::size_t x = 0; x < from.vertex_count(); ++x) {
    auto nx = from.neighbors(x);
    if (nx.size() != to.degree(m(x))) return false;
    // A morphism sends N(x) into N(m(x)); equal sizes plus injectivity give
    // the bijection.
    images.clear();
    for (auto y : nx) images.push_back(m(y));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      return false;
  }
  return true;
}

CombinatorialCoverCheck is_combinatorial_cover(const VertexMap& m) {
  using Violation = CombinatorialCoverCheck::Violation;
  CombinatorialCoverCheck out;
  const auto& from = m.domain();
  const auto& to = m.codomain();

  for (const auto& e : from.edges()) {
    if (!to.adjacent(m(e.u), m(e.v))) {
      out.violation = Violation::not_morphism;
      out.witness = {from.id(e.u), from.id(e.v)};
      out.message = "edge {" + from.id(e.u).to_string() + "," +
                    from.id(e.v).to_string() + "} does not map to an edge";
      return out;
    }
  }
  if (to.edge_count() == 0) {
    out.violation = Violation::no_base_edges;
    out.message = "codomain has no edges; the index is undefined";
    return out;
  }

  // Condition (1): every codomain edge has the same number of domain edges
  // over it.
  std::vector<std::size_t> fiber_edges(to.edge_count(), 0);
  for (const auto& e : from.edges()) ++fiber_edges[*to.edge_index(m(e.u), m(e.v))];
  const std::size_t index = fiber_edges.front();
  for (std::size_t k = 0; k < fiber_edges.size(); ++k) {
    if (fiber_edges[k] != index || index == 0) {
      const auto& e = to.edges()[k];
      out.violation = Violation::edge_fiber_count;
      out.witness = {to.id(e.u), to.id(e.v)};
      out.message = "edge {" + to.id(e.u).to_string() + "," +
                    to.id(e.v).to_string() + "} has " +
                    std::to_string(fiber_edges[k]) + " preimage edges, edge {" +
                    to.id(to.edges()[0].u).to_string() + "," +
                    to.id(to.edges()[0].v).to_string() + "} has " +
                    std::to_string(index);
      return out;
    }
  }

  // Condition (2): for x in the fiber over u and v ∼ u, |N(x) ∩ m⁻¹(v)|
  // depends only on (u, v). The first vertex found in each fiber is the
  // reference; every other fiber member is compared against it, which is
  // equivalent to comparing all pairs.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> reference(to.vertex_count(), none);
  std::vector<std::size_t> counts(to.dart_count(), 0);   // reference counts
  std::vector<std::size_t> scratch(to.dart_count(), 0);  // current vertex
  for (std::size_t x = 0; x < from.vertex_count(); ++x) {
    const std::size_t u = m(x);
    for (auto d = to.dart_begin(u); d < to.dart_end(u); ++d) scratch[d] = 0;
    for (auto y : from.neighbors(x)) ++scratch[*to.dart_index(u, m(y))];
    if (reference[u] == none) {
      reference[u] = x;
      for (auto d = to.dart_begin(u); d < to.dart_end(u); ++d)
        counts[d] = scratch[d];
      continue;
    }
    for (auto d = to.dart_begin(u); d < to.dart_end(u); ++d) {
      if (scratch[d] != counts[d]) {
        const auto v = to.dart(d).other;
        out.violation = Violation::neighbor_fiber_count;
        out.witness = {from.id(reference[u]), from.id(x), to.id(v)};
        out.message = from.id(reference[u]).to_string() + " has " +
                      std::to_string(counts[d]) + " neighbours over " +
                      to.id(v).to_string() + ", " + from.id(x).to_string() +
                      " has " + std::to_string(scratch[d]);
        return out;
      }
    }
  }
  out.index = index;
  return out;
}

}  // namespace zz
