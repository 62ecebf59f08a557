#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "zz/graph.hpp"

namespace zz::gen {

// Fixture graphs. Vertex ids are the integers 0..n-1 except for the
// hypercube, whose ids are the bitstrings "00..0".."11..1".

Graph cycle(std::size_t n);      // n >= 3
Graph path(std::size_t n);       // n >= 1, n vertices
Graph complete(std::size_t n);   // n >= 1
Graph hypercube(std::size_t d);  // d >= 1
Graph empty(std::size_t n);      // n isolated vertices

/// Cay(Z_n, S): i ∼ i + s (mod n) for s in S. S must avoid 0 and be closed
/// under negation mod n; elements are taken in [1, n-1].
Graph cayley_cyclic(std::size_t n, std::span<const std::int64_t> generators);

/// Vertices (0, v) for v in a and (1, w) for w in b.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Dispatch by name: "cycle", "path", "complete", "hypercube", "empty"
/// take one parameter; "cayley_cyclic" takes n followed by the generators.
/// Throws PreconditionError on an unknown kind or bad parameters.
Graph generate(std::string_view kind, std::span<const std::int64_t> params);

}  // namespace zz::gen
