#include "zz/subgraph.hpp"

#include <algorithm>

#include "zz/error.hpp"

namespace zz {

VertexSubset::VertexSubset(const Graph& g, std::vector<std::size_t> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= g.vertex_count())
    throw PreconditionError("vertex subset is not contained in the graph");
}

VertexSubset VertexSubset::from_ids(const Graph& g,
                                    std::span<const VertexId> ids) {
  std::vector<std::size_t> members;
  members.reserve(ids.size());
  for (const auto& id : ids) {
    auto v = g.find(id);
    if (!v)
      throw PreconditionError("vertex " + id.to_string() +
                              " of the subset is not in the graph");
    members.push_back(*v);
  }
  return VertexSubset(g, std::move(members));
}

VertexSubset VertexSubset::all(const Graph& g) {
  std::vector<std::size_t> members(g.vertex_count());
  for (std::size_t v = 0; v < members.size(); ++v) members[v] = v;
  return VertexSubset(g, std::move(members));
}

bool VertexSubset::contains(std::size_t v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::vector<char> VertexSubset::mask(std::size_t vertex_count) const {
  std::vector<char> out(vertex_count, 0);
  for (auto v : members_) out[v] = 1;
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& f) {
  auto members = f.members();
  if (!members.empty() && members.back() >= g.vertex_count())
    throw PreconditionError("vertex subset is not contained in the graph");
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(g.vertex_count(), none);
  std::vector<VertexId> ids;
  ids.reserve(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    local[members[k]] = k;
    ids.push_back(g.id(members[k]));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (local[e.u] != none && local[e.v] != none)
      edges.push_back({local[e.u], local[e.v]});
  Graph sub(std::move(ids), std::move(edges));
  std::vector<std::size_t> image(members.begin(), members.end());
  VertexMap inclusion(sub, g, std::move(image));
  return {std::move(sub), std::move(inclusion)};
}

std::vector<Edge> boundary(const Graph& g, const VertexSubset& f) {
  auto members = f.members();
  if (!members.empty() && members.back() >= g.vertex_count())
    throw PreconditionError("vertex subset is not contained in the graph");
  auto in = f.mask(g.vertex_count());
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (in[e.u] != in[e.v]) out.push_back(e);
  return out;
}

Rational isoperimetric_ratio(const Graph& g, const VertexSubset& f) {
  if (f.empty())
    throw PreconditionError("isoperimetric ratio of an empty vertex set");
  return Rational(static_cast<std::int64_t>(boundary(g, f).size()),
                  static_cast<std::int64_t>(f.size()));
}

}  // namespace zz
