#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "zz/graph.hpp"
#include "zz/labeling.hpp"
#include "zz/vertex_map.hpp"

namespace fixture {

inline constexpr std::uint32_t kSeed = 0x5eed2a11u;

struct Labeled {
  std::string name;
  zz::HLabeling a;

  const zz::Graph& g() const { return a.base(); }
  const zz::Graph& h() const { return a.labels(); }
};

zz::Graph random_graph(std::mt19937& rng, std::size_t n, double p);
/// Adds an edge at every isolated vertex. Needs n >= 2.
zz::Graph random_graph_no_isolated(std::mt19937& rng, std::size_t n, double p);
/// Random spanning tree plus edges with probability p.
zz::Graph random_connected(std::mt19937& rng, std::size_t n, double p);

zz::HLabeling random_labeling(std::mt19937& rng, const zz::Graph& g, const zz::Graph& h);
/// Locally constant, every label drawn from the H vertices of degree k.
std::optional<zz::HLabeling> random_locally_constant(std::mt19937& rng, const zz::Graph& g,
                                                     const zz::Graph& h, std::size_t k);

/// Dart (u, {u, v}) labeled by the rank of v among u's neighbours.
zz::HLabeling rank_labeling(const zz::Graph& g, const zz::Graph& h);

/// Hand-picked instances: cycles and complete graphs over P3, K2, C3.
std::vector<Labeled> worked();
/// |V(G)| <= 12, |V(H)| <= 6, arbitrary labelings.
std::vector<Labeled> random_fixtures(std::size_t count, std::uint32_t seed = kSeed);
/// Locally constant labelings with a common image valency.
std::vector<Labeled> constant_valency_fixtures(std::size_t count, std::size_t max_g,
                                               std::size_t max_h, bool connected,
                                               std::uint32_t seed = kSeed);

/// H with vertex h replaced by copies[h] twins; `fold` sends a twin to h.
struct BlowUp {
  zz::Graph big;
  zz::VertexMap fold;
};
BlowUp blow_up(const zz::Graph& h, std::span<const std::size_t> copies);

/// C_{k·n} -> C_n, i ↦ i mod n.
zz::VertexMap cyclic_cover(std::size_t k, std::size_t n);

/// P3 with its centre, the label used throughout the examples.
zz::HLabeling centre_of_p3(const zz::Graph& g);

}  // namespace fixture
