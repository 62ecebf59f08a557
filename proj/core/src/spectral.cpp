#include "zz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "zz/error.hpp"

namespace zz {

const char* to_string(OperatorKind kind) {
  return kind == OperatorKind::adjacency ? "adjacency" : "normalized_laplacian";
}

SpectrumReport make_spectrum_report(OperatorKind kind,
                                    std::vector<double> eigenvalues) {
  SpectrumReport r;
  r.kind = kind;
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  double rho = 0.0;
  for (double x : eigenvalues) rho = std::max(rho, std::abs(x));
  const double snap = 1e-12 * std::max(1.0, rho);
  for (double& x : eigenvalues)
    if (std::abs(x) <= snap) x = 0.0;
  r.eigenvalues = std::move(eigenvalues);
  r.rho = rho;
  for (double x : r.eigenvalues) {
    const double m = std::abs(x);
    if (rho - m > kMatchTolerance && (!r.lambda2 || m > *r.lambda2))
      r.lambda2 = m;
  }
  if (r.lambda2) r.gap = rho - *r.lambda2;
  return r;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  return a;
}

Eigen::MatrixXd normalized_laplacian_matrix(const Graph& g) {
  if (has_isolated_vertices(g))
    throw PreconditionError("normalized Laplacian of a graph with an isolated vertex");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
  for (const auto& e : g.edges()) {
    const double w =
        -1.0 / std::sqrt(static_cast<double>(g.degree(e.u) * g.degree(e.v)));
    l(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = w;
    l(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = w;
  }
  return l;
}

Eigen::VectorXd apply_adjacency(const Graph& g, const Eigen::VectorXd& x) {
  Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    double s = 0.0;
    for (auto w : g.neighbors(v)) s += x(static_cast<Eigen::Index>(w));
    y(static_cast<Eigen::Index>(v)) = s;
  }
  return y;
}

namespace {

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

struct LabelingShape {
  std::size_t valency;
};

LabelingShape require_constant_valency(const ZigZagGraph& z) {
  if (!is_locally_constant(z.labeling()))
    throw PreconditionError("eigenvector transfer needs a locally constant labeling");
  auto val = image_valency(z.labeling());
  if (!val) throw PreconditionError("eigenvector transfer needs " + val.message);
  return {*val.valency};
}

}  // namespace

SpectrumReport adjacency_spectrum(const Graph& g) {
  if (g.empty()) throw PreconditionError("spectrum of the empty graph");
  return make_spectrum_report(OperatorKind::adjacency,
                              symmetric_eigenvalues(adjacency_matrix(g)));
}

SpectrumReport normalized_laplacian_spectrum(const Graph& g) {
  if (g.empty()) throw PreconditionError("spectrum of the empty graph");
  auto l = normalized_laplacian_matrix(g);
  if (auto d = regular_degree(g)) {
    // ℒ = I − (1/d)A for d-regular graphs.
    const auto n = l.rows();
    Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(n, n) -
                               adjacency_matrix(g) / static_cast<double>(*d);
    if ((l - expected).cwiseAbs().maxCoeff() > 1e-12)
      throw std::logic_error("normalized Laplacian differs from I - P");
  }
  return make_spectrum_report(OperatorKind::normalized_laplacian,
                              symmetric_eigenvalues(l));
}

void normalize_eigenvector(Eigen::VectorXd& v) {
  const double norm = v.norm();
  if (norm > 0.0) v /= norm;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v(k)) > kResidualTolerance) {
      if (v(k) < 0.0) v = -v;
      break;
    }
  }
}

std::vector<EigenPair> adjacency_eigenpairs(const Graph& g) {
  if (g.empty()) throw PreconditionError("spectrum of the empty graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver did not converge");
  std::vector<EigenPair> out;
  const auto n = solver.eigenvalues().size();
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    EigenPair ep{solver.eigenvalues()(k), solver.eigenvectors().col(k)};
    normalize_eigenvector(ep.vector);
    out.push_back(std::move(ep));
  }
  return out;
}

double eigen_residual(const Graph& g, const EigenPair& ep) {
  if (static_cast<std::size_t>(ep.vector.size()) != g.vertex_count())
    throw PreconditionError("eigenvector length differs from the vertex count");
  if (g.empty()) return 0.0;
  return (apply_adjacency(g, ep.vector) - ep.value * ep.vector)
      .cwiseAbs()
      .maxCoeff();
}

LiftedEigenPair lift_eigenvector(const EigenPair& ep, const ZigZagGraph& z) {
  const auto n = require_constant_valency(z).valency;
  const auto& g = z.base();
  if (has_isolated_vertices(g))
    throw PreconditionError("eigenvector lift needs a base without isolated vertices");
  if (eigen_residual(g, ep) > kResidualTolerance)
    throw PreconditionError("input is not a verified eigenpair of the base");

  const auto& prod = z.product();
  Eigen::VectorXd lifted(static_cast<Eigen::Index>(prod.vertex_count()));
  for (std::size_t p = 0; p < prod.vertex_count(); ++p)
    lifted(static_cast<Eigen::Index>(p)) =
        ep.vector(static_cast<Eigen::Index>(z.base_vertex(p)));

  LiftedEigenPair out;
  out.valency = n;
  out.norm_ratio = lifted.norm() / ep.vector.norm();
  if (std::abs(out.norm_ratio - std::sqrt(static_cast<double>(n))) >
      kResidualTolerance * std::sqrt(static_cast<double>(n)))
    throw std::logic_error("lifted norm is not sqrt(n) times the base norm");
  normalize_eigenvector(lifted);
  out.pair = {static_cast<double>(n) * ep.value, std::move(lifted)};
  out.residual = eigen_residual(prod, out.pair);
  if (out.residual > kResidualTolerance)
    throw std::logic_error("lifted eigenvector residual " +
                           std::to_string(out.residual) + " exceeds tolerance");
  return out;
}

DescentResult descend_eigenvector(const EigenPair& ep, const ZigZagGraph& z) {
  const auto n = require_constant_valency(z).valency;
  const auto& prod = z.product();
  if (eigen_residual(prod, ep) > kResidualTolerance)
    throw PreconditionError("input is not a verified eigenpair of the product");

  DescentResult out;
  out.valency = n;
  const auto& g = z.base();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.vertex_count()));
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    auto fib = z.fiber(u);
    if (fib.empty()) continue;
    double lo = ep.vector(static_cast<Eigen::Index>(fib.front()));
    double hi = lo;
    double sum = 0.0;
    for (auto p : fib) {
      const double x = ep.vector(static_cast<Eigen::Index>(p));
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      sum += x;
    }
    out.fiber_spread = std::max(out.fiber_spread, hi - lo);
    f(static_cast<Eigen::Index>(u)) = sum / static_cast<double>(fib.size());
  }
  if (std::abs(ep.value) <= kResidualTolerance) return out;

  if (out.fiber_spread > kResidualTolerance)
    throw std::logic_error("eigenvector with nonzero eigenvalue is not constant on fibers");
  normalize_eigenvector(f);
  EigenPair down{ep.value / static_cast<double>(n), std::move(f)};
  out.residual = eigen_residual(g, down);
  if (out.residual > kResidualTolerance)
    throw std::logic_error("descended eigenvector residual " +
                           std::to_string(out.residual) + " exceeds tolerance");
  out.pair = std::move(down);
  return out;
}

double normalized_radius(const Graph& g, std::size_t d) {
  if (d == 0) throw PreconditionError("normalized radius needs d >= 1");
  auto deg = regular_degree(g);
  if (!deg || *deg != d)
    throw PreconditionError("graph is not " + std::to_string(d) + "-regular");
  return adjacency_spectrum(g).rho / static_cast<double>(d);
}

RadiusComparison radius_comparison_check(const Graph& g, const Graph& h,
                                         const HLabeling& a) {
  if (!(a.base() == g) || !(a.labels() == h))
    throw LabelingError("labeling does not match the given graphs");
  auto m = regular_degree(g);
  if (!m || *m == 0) throw PreconditionError("hypothesis: G is m-regular with m >= 1");
  auto d = regular_degree(h);
  if (!d || *d == 0) throw PreconditionError("hypothesis: H is d-regular with d >= 1");
  if (h.vertex_count() != *m)
    throw PreconditionError("hypothesis: H has m = " + std::to_string(*m) +
                            " vertices");
  std::vector<char> hit(h.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    std::fill(hit.begin(), hit.end(), 0);
    for (auto dd = g.dart_begin(u); dd < g.dart_end(u); ++dd) {
      if (hit[a(dd)])
        throw PreconditionError("hypothesis: α(" + g.id(u).to_string() +
                                ", -) is a bijection onto V(H)");
      hit[a(dd)] = 1;
    }
  }
  ZigZagGraph z(a);
  auto zd = regular_degree(z.product());
  if (!zd) throw std::logic_error("product of the radius hypotheses is not regular");
  RadiusComparison out;
  out.base = normalized_radius(g, *m);
  out.product = normalized_radius(z.product(), *zd);
  out.holds = out.base <= out.product + kResidualTolerance;
  return out;
}

CoverRadiusCheck cover_radius_check(const VertexMap& p, const ZigZagGraph& z) {
  auto lift = lift_covering(p, z);
  CoverRadiusCheck out;
  out.lifted = adjacency_spectrum(lift.lifted.product()).rho;
  out.base = adjacency_spectrum(z.product()).rho;
  out.holds = out.lifted <= out.base + kResidualTolerance;
  return out;
}

ContainmentCheck spectrum_contained(std::span<const double> inner,
                                    std::span<const double> outer, double tol) {
  std::vector<double> a(inner.begin(), inner.end());
  std::vector<double> b(outer.begin(), outer.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  ContainmentCheck out;
  for (double x : a) {
    auto it = std::lower_bound(b.begin(), b.end(), x - tol);
    if (it == b.end() || *it > x + tol) out.unmatched.push_back(x);
  }
  out.contained = out.unmatched.empty();
  // Greedy matching of sorted lists is optimal for equal-width intervals.
  std::size_t j = 0;
  out.multiset_contained = true;
  for (double x : a) {
    while (j < b.size() && b[j] < x - tol) ++j;
    if (j == b.size() || b[j] > x + tol) {
      out.multiset_contained = false;
      break;
    }
    ++j;
  }
  return out;
}

LaplacianContainment laplacian_containment_check(const VertexMap& p,
                                                 const ZigZagGraph& z) {
  auto lift = lift_combinatorial_cover(p, z);
  for (const Graph* g : {&p.domain(), &p.codomain(), &z.product(),
                         &lift.lifted.product()})
    if (g->empty() || has_isolated_vertices(*g))
      throw PreconditionError(
          "Laplacian containment needs nonempty graphs without isolated vertices");
  LaplacianContainment out;
  out.base = normalized_laplacian_spectrum(z.product());
  out.lifted = normalized_laplacian_spectrum(lift.lifted.product());
  out.check = spectrum_contained(out.base.eigenvalues, out.lifted.eigenvalues);
  return out;
}

std::vector<double> nonzero_part(std::span<const double> values, double tol) {
  std::vector<double> out;
  for (double x : values)
    if (std::abs(x) > tol) out.push_back(x);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool multiset_equal(std::span<const double> a, std::span<const double> b,
                    double tol) {
  if (a.size() != b.size()) return false;
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t k = 0; k < x.size(); ++k)
    if (std::abs(x[k] - y[k]) > tol) return false;
  return true;
}

bool nonzero_spectrum_scales(std::span<const double> base,
                             std::span<const double> product, double factor,
                             double tol) {
  auto scaled = nonzero_part(base, tol);
  for (double& x : scaled) x *= factor;
  return multiset_equal(nonzero_part(product, tol), scaled, tol);
}

}  // namespace zz
