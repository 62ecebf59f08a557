#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zz/graph.hpp"
#include "zz/labeling.hpp"
#include "zz/spectral.hpp"
#include "zz/subgraph.hpp"
#include "zz/vertex_map.hpp"

namespace zz {

struct TowerOptions {
  /// Construction stops before a level with more vertices than this.
  std::size_t vertex_budget = 100000;
  /// Spectra are computed only for levels with at most this many vertices.
  std::size_t spectral_cap = 3000;
};

/// Δ_n with its labeling α_n and projection π_n: Δ_n -> Δ_{n-1}.
struct TowerLevel {
  std::size_t index = 1;
  Graph graph;
  HLabeling labeling;
  std::optional<VertexMap> pi{};             // absent at level 1
  std::optional<std::size_t> cover_index{};  // π_n as a combinatorial cover
  bool locally_constant = false;             // α_n
  std::optional<std::size_t> valency{};      // image valency of α_n
  /// |E(Δ_n)| = m²·|E(Δ_{n-1})|; trivially true at level 1.
  bool edge_count_lemma = true;
  std::optional<SpectrumReport> spectrum{};   // adjacency, below the cap
  std::optional<SpectrumReport> laplacian{};  // below the cap, no isolated vertices
};

struct Tower {
  std::vector<TowerLevel> levels;
  std::size_t valency = 0;  // m
  std::size_t requested_depth = 0;
  bool truncated = false;   // the vertex budget stopped construction
};

/// Δ₁ = G, α₁ = α; Δ_{n+1} = Δ_n ⊠_{α_n} H, α_{n+1} = α_n ∘ D(π_{n+1}).
/// Throws PreconditionError unless α is locally constant with a common image
/// valency m >= 1 and depth >= 1.
Tower build_tower(const Graph& g, const Graph& h, const HLabeling& a,
                  std::size_t depth, const TowerOptions& options = {});

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v);

struct LevelSummary {
  std::size_t index = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<double> rho;
  std::optional<double> lambda2;
  std::optional<double> gap;
  std::optional<std::size_t> cover_index;
};

/// Checks between Δ_n and Δ_{n+1}.
struct LevelPairVerdict {
  std::size_t from = 0;
  std::size_t to = 0;
  Verdict cover = Verdict::skipped;        // π_{n+1} index = m²
  Verdict labeling = Verdict::skipped;     // α_{n+1} locally constant, valency m
  Verdict edge_count = Verdict::skipped;   // |E| grows by m²
  Verdict scaling = Verdict::skipped;      // nonzero spectrum scales by m
  Verdict containment = Verdict::skipped;  // ℒ(Δ_n) spectrum within ℒ(Δ_{n+1})
  Verdict gap_scaling = Verdict::skipped;  // gap grows by m
};

struct TowerReport {
  std::size_t valency = 0;
  bool truncated = false;
  std::vector<LevelSummary> levels;
  std::vector<LevelPairVerdict> pairs;

  /// No verdict failed (skipped verdicts do not count as failures).
  bool all_passed() const;
};

/// Throws PreconditionError for fewer than two levels.
TowerReport tower_spectrum_check(const Tower& tower);

struct FolnerEntry {
  std::size_t size = 0;              // |F|
  std::size_t boundary = 0;          // |∂F| in G
  std::size_t product_size = 0;      // |V(F ⊠ H)|
  std::size_t product_boundary = 0;  // |∂(F ⊠ H)| in G ⊠ H
  bool bound_holds = false;          // product_boundary <= D²·boundary
  Rational ratio;
  std::optional<Rational> product_ratio;  // absent when F ⊠ H is empty
};

struct FolnerReport {
  std::size_t max_label_degree = 0;  // D
  std::vector<FolnerEntry> entries;
  bool bound_holds = true;
  bool product_ratios_non_increasing = true;
};

/// For each F of a nested chain, builds F ⊠ H from the restricted labeling,
/// counts its boundary inside G ⊠ H and compares with D²·|∂F|. Throws
/// PreconditionError for a chain that is not nested or has an empty member.
FolnerReport folner_product_check(const Graph& g, const Graph& h,
                                  const HLabeling& a,
                                  std::span<const VertexSubset> chain);

}  // namespace zz
