#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "zz/generators.hpp"

namespace fixture {

using zz::Graph;
using zz::HLabeling;
using zz::VertexId;

namespace {

std::vector<VertexId> integer_ids(std::size_t n) {
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.emplace_back(static_cast<std::int64_t>(i));
  return ids;
}

}  // namespace

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<zz::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(integer_ids(n), std::move(edges));
}

Graph random_graph_no_isolated(std::mt19937& rng, std::size_t n, double p) {
  auto g = random_graph(rng, n, p);
  std::vector<zz::Edge> edges(g.edges().begin(), g.edges().end());
  std::uniform_int_distribution<std::size_t> pick(0, n - 2);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) > 0) continue;
    auto w = pick(rng);
    if (w >= v) ++w;
    auto e = zz::Edge::normalized(v, w);
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Graph(integer_ids(n), std::move(edges));
}

Graph random_connected(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<zz::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 2; v < n; ++v)
      if (coin(rng)) {
        auto e = zz::Edge::normalized(u, v);
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
      }
  return Graph(integer_ids(n), std::move(edges));
}

HLabeling random_labeling(std::mt19937& rng, const Graph& g, const Graph& h) {
  std::uniform_int_distribution<std::size_t> pick(0, h.vertex_count() - 1);
  std::vector<std::size_t> table(g.dart_count());
  for (auto& t : table) t = pick(rng);
  return HLabeling(g, h, std::move(table));
}

std::optional<HLabeling> random_locally_constant(std::mt19937& rng, const Graph& g,
                                                 const Graph& h, std::size_t k) {
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < h.vertex_count(); ++i)
    if (h.degree(i) == k) pool.push_back(i);
  if (pool.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::size_t> per_vertex(g.vertex_count());
  for (auto& x : per_vertex) x = pool[pick(rng)];
  return HLabeling::from_indices(g, h, [&](const zz::Dart& d) { return per_vertex[d.vertex]; });
}

HLabeling rank_labeling(const Graph& g, const Graph& h) {
  return HLabeling::from_indices(g, h, [&](const zz::Dart& d) {
    auto nb = g.neighbors(d.vertex);
    return static_cast<std::size_t>(std::find(nb.begin(), nb.end(), d.other) - nb.begin());
  });
}

HLabeling centre_of_p3(const Graph& g) {
  return HLabeling::constant(g, zz::gen::path(3), VertexId(1));
}

std::vector<Labeled> worked() {
  using namespace zz::gen;
  std::vector<Labeled> out;
  for (std::size_t n : {3, 4, 5, 6, 8})
    out.push_back({"C" + std::to_string(n) + "xP3", centre_of_p3(cycle(n))});
  out.push_back({"K2xK2", HLabeling::constant(complete(2), complete(2), VertexId(0))});
  out.push_back({"P4xP3", centre_of_p3(path(4))});
  out.push_back({"C3xK2", rank_labeling(cycle(3), complete(2))});
  out.push_back({"K4xC3", rank_labeling(complete(4), cycle(3))});
  out.push_back({"Q3xP3", centre_of_p3(hypercube(3))});
  out.push_back({"C5xP3-end", HLabeling::constant(cycle(5), path(3), VertexId(0))});
  return out;
}

std::vector<Labeled> random_fixtures(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> gsize(1, 12), hsize(1, 6);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  std::vector<Labeled> out;
  while (out.size() < count) {
    auto g = random_graph(rng, gsize(rng), density(rng));
    auto h = random_graph(rng, hsize(rng), density(rng));
    out.push_back({"random-" + std::to_string(out.size()), random_labeling(rng, g, h)});
  }
  return out;
}

std::vector<Labeled> constant_valency_fixtures(std::size_t count, std::size_t max_g,
                                               std::size_t max_h, bool connected,
                                               std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> gsize(2, max_g), hsize(2, max_h);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  std::vector<Labeled> out;
  while (out.size() < count) {
    auto g = connected ? random_connected(rng, gsize(rng), density(rng))
                       : random_graph_no_isolated(rng, gsize(rng), density(rng));
    auto h = random_graph(rng, hsize(rng), density(rng));
    std::vector<std::size_t> valencies;
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
      if (h.degree(i) > 0) valencies.push_back(h.degree(i));
    if (valencies.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, valencies.size() - 1);
    auto a = random_locally_constant(rng, g, h, valencies[pick(rng)]);
    out.push_back({"const-" + std::to_string(out.size()), std::move(*a)});
  }
  return out;
}

BlowUp blow_up(const Graph& h, std::span<const std::size_t> copies) {
  std::vector<VertexId> ids;
  std::vector<std::size_t> owner;
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    for (std::size_t c = 0; c < copies[v]; ++c) {
      ids.push_back(VertexId::pair(h.id(v), static_cast<std::int64_t>(c)));
      owner.push_back(v);
    }
  std::vector<zz::Edge> edges;
  for (std::size_t x = 0; x < ids.size(); ++x)
    for (std::size_t y = x + 1; y < ids.size(); ++y)
      if (h.adjacent(owner[x], owner[y])) edges.push_back({x, y});
  Graph big(ids, std::move(edges));
  auto fold = zz::VertexMap::from_function(big, h, [](const VertexId& id) { return id.first(); });
  return {std::move(big), std::move(fold)};
}

zz::VertexMap cyclic_cover(std::size_t k, std::size_t n) {
  auto big = zz::gen::cycle(k * n);
  auto small = zz::gen::cycle(n);
  return zz::VertexMap::from_function(big, small, [n](const VertexId& id) {
    return VertexId(id.as_integer() % static_cast<std::int64_t>(n));
  });
}

}  // namespace fixture
