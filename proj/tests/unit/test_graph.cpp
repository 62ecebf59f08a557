#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zz/error.hpp"
#include "zz/generators.hpp"
#include "zz/graph.hpp"
#include "zz/subgraph.hpp"
#include "zz/vertex_id.hpp"
#include "zz/vertex_map.hpp"

using namespace zz;

namespace {

Graph k2ab() { return Graph::from_ids({"a", "b"}, {{"a", "b"}}); }

VertexMap mod_map(std::size_t big, std::size_t small) {
  return VertexMap::from_function(gen::cycle(big), gen::cycle(small), [small](const VertexId& v) {
    return VertexId(v.as_integer() % static_cast<std::int64_t>(small));
  });
}

}  // namespace

TEST(VertexId, CanonicalOrder) {
  EXPECT_LT(VertexId(5), VertexId(10));
  EXPECT_LT(VertexId(-3), VertexId(0));
  EXPECT_LT(VertexId(1000), VertexId("a"));
  EXPECT_LT(VertexId("ab"), VertexId("b"));
  EXPECT_LT(VertexId("z"), VertexId::pair(0, 0));
  EXPECT_LT(VertexId::pair(0, 5), VertexId::pair(1, 0));
  EXPECT_LT(VertexId::pair(1, 0), VertexId::pair(1, 2));
  EXPECT_EQ(VertexId::pair(VertexId::pair(1, 2), 3), VertexId::pair(VertexId::pair(1, 2), 3));
  EXPECT_EQ(VertexId::pair(VertexId::pair(1, "x"), 3).to_string(), "((1,x),3)");
  EXPECT_EQ(VertexId::pair(VertexId::pair(1, 2), 3).depth(), 2u);
}

TEST(Graph, RejectsLoopsMultiEdgesAndDuplicates) {
  EXPECT_THROW(Graph::from_ids({1, 2}, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph::from_ids({1, 2}, {{1, 2}, {2, 1}}), GraphError);
  EXPECT_THROW(Graph::from_ids({1, 1}, {}), GraphError);
  EXPECT_THROW(Graph::from_ids({1, 2}, {{1, 3}}), GraphError);
}

TEST(Graph, CanonicalStorage) {
  auto g = Graph::from_ids({3, 1, 2}, {{3, 1}, {2, 1}});
  ASSERT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.id(0), VertexId(1));
  EXPECT_EQ(g.id(2), VertexId(3));
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g, Graph::from_ids({1, 2, 3}, {{1, 2}, {1, 3}}));
}

TEST(Graph, EmptyGraph) {
  Graph g;
  EXPECT_TRUE(g.empty());
  EXPECT_TRUE(darts(g).empty());
  EXPECT_EQ(max_degree(g), 0u);
  EXPECT_TRUE(boundary(g, VertexSubset{}).empty());
}

TEST(Darts, Examples) {
  auto k2 = k2ab();
  auto d = darts(k2);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(k2.id(d[0].vertex), VertexId("a"));
  EXPECT_EQ(k2.id(d[1].vertex), VertexId("b"));
  EXPECT_EQ(d[0].edge(), d[1].edge());
  EXPECT_TRUE(darts(gen::empty(3)).empty());
  EXPECT_EQ(darts(gen::cycle(4)).size(), 8u);
}

TEST(Darts, CountAndHandshakeOnRandomGraphs) {
  std::mt19937 rng(fixture::kSeed);
  for (int t = 0; t < 60; ++t) {
    auto g = fixture::random_graph(rng, 1 + t % 14, 0.35);
    EXPECT_EQ(darts(g).size(), 2 * g.edge_count());
    std::size_t degrees = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) degrees += g.degree(v);
    EXPECT_EQ(degrees, 2 * g.edge_count());
    for (std::size_t d = 0; d < g.dart_count(); ++d) {
      auto dart = g.dart(d);
      EXPECT_EQ(g.dart_index(dart.vertex, dart.other), d);
      EXPECT_EQ(g.edges()[g.dart_edge(d)], dart.edge());
    }
  }
}

TEST(Morphism, Examples) {
  EXPECT_TRUE(is_graph_morphism(VertexMap::identity(gen::cycle(4))));
  EXPECT_TRUE(is_graph_morphism(mod_map(6, 3)));
  auto constant = VertexMap::from_function(gen::cycle(4), gen::complete(2),
                                           [](const VertexId&) { return VertexId(0); });
  EXPECT_FALSE(is_graph_morphism(constant));
}

TEST(Morphism, MapValidation) {
  auto c4 = gen::cycle(4);
  EXPECT_THROW(VertexMap(c4, c4, {0, 1, 2}), MapError);
  EXPECT_THROW(VertexMap(c4, c4, {0, 1, 2, 4}), MapError);
  EXPECT_THROW(VertexMap::from_pairs(c4, c4, {{0, 0}, {1, 1}, {2, 2}}), MapError);
  EXPECT_THROW(VertexMap::from_pairs(c4, c4, {{0, 0}, {0, 1}, {1, 1}, {2, 2}, {3, 3}}),
               MapError);
}

TEST(Morphism, AgreesWithOracleOnRandomMaps) {
  std::mt19937 rng(fixture::kSeed + 1);
  for (int t = 0; t < 80; ++t) {
    auto a = fixture::random_graph(rng, 2 + t % 7, 0.4);
    auto b = fixture::random_graph(rng, 2 + t % 5, 0.6);
    std::uniform_int_distribution<std::size_t> pick(0, b.vertex_count() - 1);
    std::vector<std::size_t> image(a.vertex_count());
    for (auto& x : image) x = pick(rng);
    VertexMap m(a, b, image);
    EXPECT_EQ(is_graph_morphism(m), oracle::is_morphism(m));
    if (oracle::is_morphism(m)) {
      EXPECT_EQ(is_covering_map(m), oracle::is_covering(m));
      EXPECT_EQ(is_combinatorial_cover(m).index, oracle::comb_cover_index(m));
    }
  }
}

TEST(DartMap, Examples) {
  auto id = VertexMap::identity(gen::cycle(5));
  auto did = induced_dart_map(id);
  for (const auto& d : darts(gen::cycle(5))) EXPECT_EQ(did(d), d);

  auto m = mod_map(6, 3);
  auto dm = induced_dart_map(m);
  auto image = dm(Dart{4, 5});
  EXPECT_EQ(image.vertex, 1u);
  EXPECT_EQ(image.other, 2u);

  auto k2 = k2ab();
  auto swap = VertexMap::from_pairs(k2, k2, {{"a", "b"}, {"b", "a"}});
  auto ds = induced_dart_map(swap);
  EXPECT_EQ(ds(Dart{0, 1}), (Dart{1, 0}));

  auto constant = VertexMap::from_function(gen::cycle(4), gen::complete(2),
                                           [](const VertexId&) { return VertexId(0); });
  EXPECT_THROW(induced_dart_map(constant), PreconditionError);
}

TEST(Covering, Examples) {
  EXPECT_TRUE(is_covering_map(mod_map(6, 3)));
  EXPECT_TRUE(is_covering_map(VertexMap::identity(gen::hypercube(3))));
  auto fold = VertexMap::from_pairs(gen::path(3), gen::complete(2), {{0, 0}, {1, 1}, {2, 0}});
  EXPECT_TRUE(is_graph_morphism(fold));
  EXPECT_FALSE(is_covering_map(fold));
}

TEST(Covering, CyclicCoversAreCombinatorialCovers) {
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t k = 1; k <= 5; ++k) {
      auto p = fixture::cyclic_cover(k, n);
      EXPECT_TRUE(is_covering_map(p));
      EXPECT_TRUE(oracle::is_covering(p));
      auto c = is_combinatorial_cover(p);
      ASSERT_TRUE(c) << c.message;
      EXPECT_EQ(*c.index, k);
      EXPECT_EQ(oracle::comb_cover_index(p), k);
    }
}

TEST(CombinatorialCover, Examples) {
  EXPECT_EQ(is_combinatorial_cover(mod_map(6, 3)).index, 2u);
  EXPECT_EQ(is_combinatorial_cover(VertexMap::identity(gen::cycle(4))).index, 1u);
  auto c3 = gen::cycle(3);
  auto two = gen::disjoint_union(c3, c3);
  auto collapse = VertexMap::from_function(two, c3, [](const VertexId& v) { return v.second(); });
  EXPECT_EQ(is_combinatorial_cover(collapse).index, 2u);
}

TEST(CombinatorialCover, FailuresNameTheCondition) {
  auto fold = VertexMap::from_pairs(gen::path(3), gen::complete(2), {{0, 0}, {1, 1}, {2, 0}});
  EXPECT_EQ(is_combinatorial_cover(fold).index, 2u);

  // two edges over K2, both at vertex 0; its fiber mate 1 has none
  auto star = Graph::from_ids({0, 1, 2, 3}, {{0, 2}, {0, 3}});
  auto lopsided = VertexMap::from_pairs(star, gen::complete(2), {{0, 0}, {1, 0}, {2, 1}, {3, 1}});
  auto c = is_combinatorial_cover(lopsided);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.violation, CombinatorialCoverCheck::Violation::neighbor_fiber_count);
  EXPECT_FALSE(c.witness.empty());

  // unequal preimage counts over the two edges of P3
  auto g = Graph::from_ids({0, 1, 2, 3}, {{0, 1}, {1, 2}, {3, 2}});
  auto uneven = VertexMap::from_pairs(g, gen::path(3), {{0, 0}, {1, 1}, {2, 2}, {3, 1}});
  auto u = is_combinatorial_cover(uneven);
  EXPECT_FALSE(u);
  EXPECT_EQ(u.violation, CombinatorialCoverCheck::Violation::edge_fiber_count);

  auto constant = VertexMap::from_function(gen::cycle(4), gen::complete(2),
                                           [](const VertexId&) { return VertexId(0); });
  EXPECT_EQ(is_combinatorial_cover(constant).violation,
            CombinatorialCoverCheck::Violation::not_morphism);

  auto edgeless = VertexMap::identity(gen::empty(2));
  EXPECT_EQ(is_combinatorial_cover(edgeless).violation,
            CombinatorialCoverCheck::Violation::no_base_edges);
}

TEST(Boundary, Examples) {
  auto c4 = gen::cycle(4);
  EXPECT_TRUE(boundary(c4, VertexSubset::all(c4)).empty());
  EXPECT_TRUE(boundary(c4, VertexSubset(c4, {})).empty());
  EXPECT_EQ(boundary(c4, VertexSubset(c4, {0, 1})).size(), 2u);
  EXPECT_THROW(VertexSubset(c4, {7}), PreconditionError);
}

TEST(Boundary, ComplementSymmetryAndOracle) {
  std::mt19937 rng(fixture::kSeed + 2);
  for (int t = 0; t < 50; ++t) {
    auto g = fixture::random_graph(rng, 1 + t % 12, 0.4);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::size_t> in, out;
    std::vector<bool> mask(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      mask[v] = coin(rng);
      (mask[v] ? in : out).push_back(v);
    }
    auto b1 = boundary(g, VertexSubset(g, in));
    auto b2 = boundary(g, VertexSubset(g, out));
    EXPECT_EQ(b1, b2);
    EXPECT_EQ(b1.size(), oracle::boundary_size(g, mask));
  }
}

TEST(Isoperimetric, Examples) {
  auto c4 = gen::cycle(4);
  EXPECT_EQ(isoperimetric_ratio(c4, VertexSubset::all(c4)), Rational(0));
  EXPECT_EQ(isoperimetric_ratio(c4, VertexSubset(c4, {2})), Rational(2));
  for (std::size_t k = 1; k < 7; ++k) {
    auto p = gen::path(7);
    std::vector<std::size_t> first(k);
    for (std::size_t i = 0; i < k; ++i) first[i] = i;
    EXPECT_EQ(isoperimetric_ratio(p, VertexSubset(p, first)), Rational(1, static_cast<std::int64_t>(k)));
  }
  EXPECT_THROW(isoperimetric_ratio(c4, VertexSubset(c4, {})), PreconditionError);
}

TEST(Generators, Examples) {
  auto c4 = gen::cycle(4);
  EXPECT_EQ(c4, Graph::from_ids({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  const std::int64_t s[] = {1, 5};
  EXPECT_EQ(gen::cayley_cyclic(6, s), gen::cycle(6));
  EXPECT_EQ(gen::complete(2).edge_count(), 1u);
  EXPECT_EQ(gen::hypercube(3).edge_count(), 12u);
  EXPECT_EQ(regular_degree(gen::hypercube(4)), 4u);
  EXPECT_EQ(gen::hypercube(2).id(3), VertexId("11"));
}

TEST(Generators, InvalidParameters) {
  EXPECT_THROW(gen::cycle(2), PreconditionError);
  EXPECT_THROW(gen::path(0), PreconditionError);
  EXPECT_THROW(gen::complete(0), PreconditionError);
  EXPECT_THROW(gen::hypercube(0), PreconditionError);
  const std::int64_t not_symmetric[] = {1, 2};
  EXPECT_THROW(gen::cayley_cyclic(6, not_symmetric), PreconditionError);
  const std::int64_t with_zero[] = {0};
  EXPECT_THROW(gen::cayley_cyclic(6, with_zero), PreconditionError);
}

TEST(Generators, CayleyIsRegular) {
  for (std::size_t n = 3; n <= 12; ++n)
    for (std::int64_t s = 1; 2 * s < static_cast<std::int64_t>(n); ++s) {
      const std::int64_t S[] = {s, static_cast<std::int64_t>(n) - s, 1, static_cast<std::int64_t>(n) - 1};
      std::vector<std::int64_t> set(S, S + 4);
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      auto g = gen::cayley_cyclic(n, set);
      EXPECT_EQ(regular_degree(g), set.size()) << n << " " << s;
    }
}

TEST(Generators, DispatchByName) {
  const std::int64_t four[] = {4};
  EXPECT_EQ(gen::generate("cycle", four), gen::cycle(4));
  EXPECT_EQ(gen::generate("hypercube", std::span<const std::int64_t>(four, 1)), gen::hypercube(4));
  const std::int64_t cay[] = {6, 1, 5};
  EXPECT_EQ(gen::generate("cayley_cyclic", cay), gen::cycle(6));
  EXPECT_THROW(gen::generate("petersen", four), PreconditionError);
}
