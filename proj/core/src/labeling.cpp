#include "zz/labeling.hpp"

#include <algorithm>
#include <set>

#include "zz/error.hpp"

namespace zz {

HLabeling::HLabeling(Graph base, Graph labels,
                     std::vector<std::size_t> dart_labels)
    : base_(std::move(base)),
      labels_(std::move(labels)),
      dart_labels_(std::move(dart_labels)) {
  if (dart_labels_.size() != base_.dart_count())
    throw LabelingError("labeling has " + std::to_string(dart_labels_.size()) +
                        " entries for " + std::to_string(base_.dart_count()) +
                        " darts");
  for (auto h : dart_labels_)
    if (h >= labels_.vertex_count())
      throw LabelingError("label is not a vertex of the label graph");
}

HLabeling HLabeling::constant(Graph base, Graph labels, const VertexId& label) {
  auto h = labels.find(label);
  if (!h)
    throw LabelingError("label " + label.to_string() +
                        " is not a vertex of the label graph");
  std::vector<std::size_t> table(base.dart_count(), *h);
  return HLabeling(std::move(base), std::move(labels), std::move(table));
}

HLabeling HLabeling::from_function(
    Graph base, Graph labels,
    const std::function<VertexId(const VertexId&, const VertexId&)>& f) {
  std::vector<std::size_t> table(base.dart_count());
  for (std::size_t d = 0; d < table.size(); ++d) {
    auto dart = base.dart(d);
    auto label = f(base.id(dart.vertex), base.id(dart.other));
    auto h = labels.find(label);
    if (!h)
      throw LabelingError("label " + label.to_string() +
                          " is not a vertex of the label graph");
    table[d] = *h;
  }
  return HLabeling(std::move(base), std::move(labels), std::move(table));
}

HLabeling HLabeling::from_indices(
    Graph base, Graph labels,
    const std::function<std::size_t(const Dart&)>& f) {
  std::vector<std::size_t> table(base.dart_count());
  for (std::size_t d = 0; d < table.size(); ++d) table[d] = f(base.dart(d));
  return HLabeling(std::move(base), std::move(labels), std::move(table));
}

std::size_t HLabeling::operator()(const Dart& d) const {
  if (d.vertex >= base_.vertex_count())
    throw LabelingError("dart vertex outside the base graph");
  auto id = base_.dart_index(d.vertex, d.other);
  if (!id) throw LabelingError("not a dart of the base graph");
  return dart_labels_[*id];
}

bool is_locally_constant(const HLabeling& a) {
  const auto& g = a.base();
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (auto d = g.dart_begin(u) + 1; d < g.dart_end(u); ++d)
      if (a(d) != a(g.dart_begin(u))) return false;
  return true;
}

ImageValency image_valency(const HLabeling& a) {
  if (a.base().dart_count() == 0)
    throw PreconditionError("image valency of a labeling on an edgeless graph");
  std::set<std::size_t> valencies;
  for (auto h : a.table()) valencies.insert(a.labels().degree(h));
  ImageValency out;
  out.found.assign(valencies.begin(), valencies.end());
  if (valencies.size() > 1) {
    out.message = "labels in the image have valencies";
    for (auto v : out.found) out.message += " " + std::to_string(v);
    return out;
  }
  if (*valencies.begin() == 0) {
    out.message = "labels in the image are isolated vertices of H";
    return out;
  }
  out.valency = *valencies.begin();
  return out;
}

HLabeling pullback_labeling(const HLabeling& a, const VertexMap& m) {
  if (!(m.codomain() == a.base()))
    throw LabelingError("pullback map does not land in the labeled graph");
  if (!is_graph_morphism(m))
    throw PreconditionError("pullback along a map that is not a morphism");
  DartMap dmap(m);
  std::vector<std::size_t> table(m.domain().dart_count());
  for (std::size_t d = 0; d < table.size(); ++d) table[d] = a(dmap(d));
  return HLabeling(m.domain(), a.labels(), std::move(table));
}

HLabeling pushforward_labeling(const HLabeling& a, const VertexMap& psi) {
  if (!(psi.domain() == a.labels()))
    throw LabelingError("pushforward map does not start at the label graph");
  if (!is_graph_morphism(psi))
    throw PreconditionError("pushforward along a map that is not a morphism");
  std::vector<std::size_t> table(a.table().begin(), a.table().end());
  for (auto& h : table) h = psi(h);
  return HLabeling(a.base(), psi.codomain(), std::move(table));
}

HLabeling restrict_labeling(const HLabeling& a, const VertexSubset& f) {
  auto sub = induced_subgraph(a.base(), f);
  const auto& g = sub.graph;
  std::vector<std::size_t> table(g.dart_count());
  for (std::size_t d = 0; d < table.size(); ++d) {
    auto dart = g.dart(d);
    table[d] = a(*a.base().dart_index(sub.inclusion(dart.vertex),
                                      sub.inclusion(dart.other)));
  }
  return HLabeling(g, a.labels(), std::move(table));
}

LabeledMorphism::LabeledMorphism(VertexMap map, HLabeling source,
                                 HLabeling target)
    : map_(std::move(map)),
      source_(std::move(source)),
      target_(std::move(target)) {
  if (!(source_.labels() == target_.labels()))
    throw LabelingError("labeled morphism between different label graphs");
  if (!(map_.domain() == source_.base()) || !(map_.codomain() == target_.base()))
    throw LabelingError("labeled morphism map does not match the labelings");
  if (!is_graph_morphism(map_))
    throw PreconditionError("labeled morphism map is not a graph morphism");
}

bool is_strict_morphism(const LabeledMorphism& lm) {
  DartMap dmap(lm.map());
  const auto& src = lm.source();
  for (std::size_t d = 0; d < src.base().dart_count(); ++d)
    if (lm.target()(dmap(d)) != src(d)) return false;
  return true;
}

namespace {

// Sorted neighbour rows make both checks a merge.
template <typename Compare>
bool compare_neighborhoods(const LabeledMorphism& lm, Compare cmp) {
  DartMap dmap(lm.map());
  const auto& h = lm.source().labels();
  const auto& src = lm.source();
  for (std::size_t d = 0; d < src.base().dart_count(); ++d) {
    auto from = h.neighbors(src(d));
    auto to = h.neighbors(lm.target()(dmap(d)));
    if (!cmp(from, to)) return false;
  }
  return true;
}

}  // namespace

bool is_weak_morphism(const LabeledMorphism& lm) {
  return compare_neighborhoods(lm, [](auto from, auto to) {
    return std::includes(to.begin(), to.end(), from.begin(), from.end());
  });
}

bool is_weak_morphism_bidirectional(const LabeledMorphism& lm) {
  return compare_neighborhoods(lm, [](auto from, auto to) {
    return std::equal(from.begin(), from.end(), to.begin(), to.end());
  });
}

bool satisfies_neighbor_reflecting(const VertexMap& psi) {
  const auto& h1 = psi.domain();
  const auto& h2 = psi.codomain();
  std::vector<char> hit(h2.vertex_count(), 0);
  for (auto w : psi.image()) hit[w] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  for (std::size_t a = 0; a < h1.vertex_count(); ++a)
    for (std::size_t b = a + 1; b < h1.vertex_count(); ++b)
      if (h1.adjacent(a, b) != h2.adjacent(psi(a), psi(b))) return false;
  return true;
}

}  // namespace zz
