#include "zz/generators.hpp"

#include <algorithm>
#include <string>

#include "zz/error.hpp"

namespace zz::gen {

namespace {

std::vector<VertexId> integer_ids(std::size_t n) {
  std::vector<VertexId> ids;
  ids.reserve(n);
  for (std::size_t v = 0; v < n; ++v) ids.emplace_back(v);
  return ids;
}

}  // namespace

Graph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(integer_ids(n), std::move(edges));
}

Graph path(std::size_t n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(integer_ids(n), std::move(edges));
}

Graph complete(std::size_t n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(integer_ids(n), std::move(edges));
}

Graph hypercube(std::size_t d) {
  if (d < 1) throw PreconditionError("hypercube needs d >= 1");
  if (d > 20) throw PreconditionError("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<VertexId> ids;
  ids.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::string bits(d, '0');
    for (std::size_t b = 0; b < d; ++b)
      if (v & (std::size_t{1} << (d - 1 - b))) bits[b] = '1';
    ids.emplace_back(std::move(bits));
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) edges.push_back({v, w});
    }
  return Graph(std::move(ids), std::move(edges));
}

Graph empty(std::size_t n) { return Graph(integer_ids(n), {}); }

Graph cayley_cyclic(std::size_t n, std::span<const std::int64_t> generators) {
  if (n < 2) throw PreconditionError("cayley_cyclic needs n >= 2");
  const auto sn = static_cast<std::int64_t>(n);
  std::vector<std::int64_t> s;
  for (auto g : generators) {
    if (g <= 0 || g >= sn)
      throw PreconditionError("generator " + std::to_string(g) +
                              " must lie in [1, n-1]");
    s.push_back(g);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (auto g : s)
    if (!std::binary_search(s.begin(), s.end(), sn - g))
      throw PreconditionError("generating set is not closed under negation: " +
                              std::to_string(g) + " present, " +
                              std::to_string(sn - g) + " missing");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (auto g : s) {
      const std::size_t w = (v + static_cast<std::size_t>(g)) % n;
      if (v < w) edges.push_back({v, w});
    }
  return Graph(integer_ids(n), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<VertexId> ids;
  ids.reserve(a.vertex_count() + b.vertex_count());
  for (const auto& v : a.vertices()) ids.push_back(VertexId::pair(0, v));
  for (const auto& v : b.vertices()) ids.push_back(VertexId::pair(1, v));
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const std::size_t shift = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(std::move(ids), std::move(edges));
}

Graph generate(std::string_view kind, std::span<const std::int64_t> params) {
  auto single = [&]() -> std::size_t {
    if (params.size() != 1)
      throw PreconditionError(std::string(kind) + " takes one parameter");
    if (params[0] < 0)
      throw PreconditionError(std::string(kind) + " parameter must be >= 0");
    return static_cast<std::size_t>(params[0]);
  };
  if (kind == "cycle") return cycle(single());
  if (kind == "path") return path(single());
  if (kind == "complete") return complete(single());
  if (kind == "hypercube") return hypercube(single());
  if (kind == "empty") return empty(single());
  if (kind == "cayley_cyclic") {
    if (params.empty() || params[0] < 0)
      throw PreconditionError("cayley_cyclic takes n followed by generators");
    return cayley_cyclic(static_cast<std::size_t>(params[0]),
                         params.subspan(1));
  }
  throw PreconditionError("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace zz::gen
