#include "zz/tower.hpp"

#include <cmath>
#include <future>
#include <string>
#include <utility>

#include "zz/error.hpp"
#include "zz/zigzag.hpp"

namespace zz {

namespace {

struct LevelSpectra {
  std::optional<SpectrumReport> adjacency;
  std::optional<SpectrumReport> laplacian;
};

LevelSpectra compute_spectra(const Graph& g) {
  LevelSpectra s;
  if (g.empty()) return s;
  s.adjacency = adjacency_spectrum(g);
  if (!has_isolated_vertices(g)) s.laplacian = normalized_laplacian_spectrum(g);
  return s;
}

// |V(Δ ⊠ H)| for a locally constant labeling of valency m: every
// non-isolated vertex has exactly m lifts.
std::size_t next_level_size(const Graph& g, std::size_t m) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) n += m;
  return n;
}

}  // namespace

Tower build_tower(const Graph& g, const Graph& h, const HLabeling& a,
                  std::size_t depth, const TowerOptions& options) {
  if (depth < 1) throw PreconditionError("tower depth must be at least 1");
  if (!(a.base() == g) || !(a.labels() == h))
    throw LabelingError("labeling does not match the given graphs");
  if (!is_locally_constant(a))
    throw PreconditionError("tower needs a locally constant labeling");
  auto val = image_valency(a);
  if (!val) throw PreconditionError("tower needs " + val.message);

  Tower tower;
  tower.valency = *val.valency;
  tower.requested_depth = depth;
  const std::size_t m = tower.valency;

  std::vector<std::future<LevelSpectra>> spectra;
  auto schedule = [&](const Graph& level) {
    if (level.vertex_count() <= options.spectral_cap)
      spectra.push_back(std::async(std::launch::async, compute_spectra, level));
    else
      spectra.push_back(std::async(std::launch::deferred, [] { return LevelSpectra{}; }));
  };

  tower.levels.push_back(TowerLevel{.index = 1,
                                    .graph = g,
                                    .labeling = a,
                                    .locally_constant = true,
                                    .valency = m});
  schedule(g);

  while (tower.levels.size() < depth) {
    const auto& prev = tower.levels.back();
    if (next_level_size(prev.graph, m) > options.vertex_budget) {
      tower.truncated = true;
      break;
    }
    ZigZagGraph z(prev.labeling);
    auto pi = projection(z);
    TowerLevel next{.index = prev.index + 1,
                    .graph = z.product(),
                    .labeling = pullback_labeling(prev.labeling, pi)};
    next.cover_index = is_combinatorial_cover(pi).index;
    next.pi = std::move(pi);
    next.locally_constant = is_locally_constant(next.labeling);
    if (next.graph.dart_count() > 0) next.valency = image_valency(next.labeling).valency;
    next.edge_count_lemma =
        next.graph.edge_count() == m * m * prev.graph.edge_count();
    schedule(next.graph);
    tower.levels.push_back(std::move(next));
  }

  for (std::size_t k = 0; k < tower.levels.size(); ++k) {
    auto s = spectra[k].get();
    tower.levels[k].spectrum = std::move(s.adjacency);
    tower.levels[k].laplacian = std::move(s.laplacian);
  }
  return tower;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "skipped";
  }
}

bool TowerReport::all_passed() const {
  for (const auto& p : pairs)
    for (auto v : {p.cover, p.labeling, p.edge_count, p.scaling, p.containment,
                   p.gap_scaling})
      if (v == Verdict::fail) return false;
  return true;
}

TowerReport tower_spectrum_check(const Tower& tower) {
  if (tower.levels.size() < 2)
    throw PreconditionError("tower check needs at least two levels");
  TowerReport report;
  report.valency = tower.valency;
  report.truncated = tower.truncated;
  const std::size_t m = tower.valency;
  const double factor = static_cast<double>(m);
  auto verdict = [](bool ok) { return ok ? Verdict::pass : Verdict::fail; };

  for (const auto& level : tower.levels) {
    LevelSummary s;
    s.index = level.index;
    s.vertices = level.graph.vertex_count();
    s.edges = level.graph.edge_count();
    s.cover_index = level.cover_index;
    if (level.spectrum) {
      s.rho = level.spectrum->rho;
      s.lambda2 = level.spectrum->lambda2;
      s.gap = level.spectrum->gap;
    }
    report.levels.push_back(s);
  }

  for (std::size_t k = 0; k + 1 < tower.levels.size(); ++k) {
    const auto& lo = tower.levels[k];
    const auto& hi = tower.levels[k + 1];
    LevelPairVerdict p;
    p.from = lo.index;
    p.to = hi.index;
    p.cover = verdict(hi.cover_index == m * m);
    p.labeling = verdict(hi.locally_constant && hi.valency == m);
    p.edge_count = verdict(hi.edge_count_lemma);
    if (lo.spectrum && hi.spectrum) {
      p.scaling = verdict(nonzero_spectrum_scales(
          lo.spectrum->eigenvalues, hi.spectrum->eigenvalues, factor));
      if (lo.spectrum->gap && hi.spectrum->gap)
        p.gap_scaling = verdict(std::abs(*hi.spectrum->gap -
                                         factor * *lo.spectrum->gap) <=
                                kMatchTolerance);
    }
    if (lo.laplacian && hi.laplacian)
      p.containment = verdict(
          spectrum_contained(lo.laplacian->eigenvalues, hi.laplacian->eigenvalues)
              .contained);
    report.pairs.push_back(p);
  }
  return report;
}

FolnerReport folner_product_check(const Graph& g, const Graph& h,
                                  const HLabeling& a,
                                  std::span<const VertexSubset> chain) {
  if (!(a.base() == g) || !(a.labels() == h))
    throw LabelingError("labeling does not match the given graphs");
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k].empty())
      throw PreconditionError("Følner chain member " + std::to_string(k) +
                              " is empty");
    if (k > 0 && !chain[k - 1].is_subset_of(chain[k]))
      throw PreconditionError("Følner chain is not nested at member " +
                              std::to_string(k));
  }

  ZigZagGraph whole(a);
  FolnerReport report;
  report.max_label_degree = max_degree(h);
  const std::size_t bound_factor = report.max_label_degree * report.max_label_degree;

  std::optional<Rational> previous;
  for (const auto& f : chain) {
    FolnerEntry entry;
    entry.size = f.size();
    entry.boundary = boundary(g, f).size();
    entry.ratio = isoperimetric_ratio(g, f);

    ZigZagGraph part(restrict_labeling(a, f));
    std::vector<std::size_t> inside;
    inside.reserve(part.product().vertex_count());
    for (std::size_t p = 0; p < part.product().vertex_count(); ++p) {
      const auto u = f.members()[part.base_vertex(p)];
      auto q = whole.find(u, part.label_vertex(p));
      if (!q)
        throw std::logic_error("F ⊠ H vertex " + part.product().id(p).to_string() +
                               " is missing from G ⊠ H");
      inside.push_back(*q);
    }
    VertexSubset lifted(whole.product(), std::move(inside));
    entry.product_size = lifted.size();
    entry.product_boundary = boundary(whole.product(), lifted).size();
    entry.bound_holds = entry.product_boundary <= bound_factor * entry.boundary;
    if (entry.product_size > 0) {
      entry.product_ratio =
          Rational(static_cast<std::int64_t>(entry.product_boundary),
                   static_cast<std::int64_t>(entry.product_size));
      if (previous && *entry.product_ratio > *previous)
        report.product_ratios_non_increasing = false;
      previous = entry.product_ratio;
    }
    report.bound_holds = report.bound_holds && entry.bound_holds;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace zz
