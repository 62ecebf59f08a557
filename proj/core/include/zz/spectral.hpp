#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "zz/graph.hpp"
#include "zz/labeling.hpp"
#include "zz/vertex_map.hpp"
#include "zz/zigzag.hpp"

namespace zz {

/// Residual bound for eigenpairs (‖A·v − λ·v‖∞ of a unit vector).
inline constexpr double kResidualTolerance = 1e-9;
/// Tolerance for matching eigenvalues between two spectra.
inline constexpr double kMatchTolerance = 1e-6;

enum class OperatorKind { adjacency, normalized_laplacian };

const char* to_string(OperatorKind kind);

/// Eigenvalues (descending, with multiplicity) of a symmetric graph
/// operator. rho is max |λ|; lambda2 is max |λ| over eigenvalues whose
/// modulus differs from rho by more than kMatchTolerance, and is absent when
/// there are none; gap = rho − lambda2.
struct SpectrumReport {
  OperatorKind kind = OperatorKind::adjacency;
  std::vector<double> eigenvalues;
  double rho = 0.0;
  std::optional<double> lambda2;
  std::optional<double> gap;
};

/// Sorts descending, snaps values within 1e-12·max(1, ρ) of zero to 0, and
/// derives rho, lambda2 and gap.
SpectrumReport make_spectrum_report(OperatorKind kind,
                                    std::vector<double> eigenvalues);

/// Unit eigenvector in canonical vertex order, first entry above
/// kResidualTolerance in modulus positive.
struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);
/// Throws PreconditionError when g has an isolated vertex.
Eigen::MatrixXd normalized_laplacian_matrix(const Graph& g);

/// A·x without forming the matrix.
Eigen::VectorXd apply_adjacency(const Graph& g, const Eigen::VectorXd& x);

/// Throws PreconditionError for the empty graph.
SpectrumReport adjacency_spectrum(const Graph& g);
/// Throws PreconditionError when g is empty or has an isolated vertex.
SpectrumReport normalized_laplacian_spectrum(const Graph& g);

/// All adjacency eigenpairs, eigenvalues descending.
std::vector<EigenPair> adjacency_eigenpairs(const Graph& g);

/// ‖A·v − λ·v‖∞.
double eigen_residual(const Graph& g, const EigenPair& ep);

/// Unit length with the sign convention of EigenPair.
void normalize_eigenvector(Eigen::VectorXd& v);

struct LiftedEigenPair {
  EigenPair pair;               // eigenvalue n·λ, unit vector
  std::size_t valency = 0;      // n
  double norm_ratio = 0.0;      // ‖f̂‖ / ‖f‖ before renormalising
  double residual = 0.0;
};

/// f̂(u,i) = f(u). Needs a locally constant labeling with image valency n,
/// a base without isolated vertices and a verified eigenpair (throws
/// PreconditionError otherwise). Throws std::logic_error if the lift misses
/// the residual bound or the relation ‖f̂‖ = √n‖f‖.
LiftedEigenPair lift_eigenvector(const EigenPair& ep, const ZigZagGraph& z);

struct DescentResult {
  /// Eigenpair of G with eigenvalue λ/n; absent for the zero certificate
  /// (|λ| ≤ kResidualTolerance), where no descent is claimed.
  std::optional<EigenPair> pair;
  std::size_t valency = 0;
  double fiber_spread = 0.0;  // max over fibers of (max − min) of f̂
  double residual = 0.0;

  bool zero_certificate() const { return !pair.has_value(); }
};

/// Throws PreconditionError on the labeling hypotheses or an unverified
/// input, std::logic_error when f̂ is not fiber-constant or the descended
/// pair misses the residual bound.
DescentResult descend_eigenvector(const EigenPair& ep, const ZigZagGraph& z);

/// Largest |eigenvalue| of (1/d)·A. Throws PreconditionError unless g is
/// d-regular with d >= 1.
double normalized_radius(const Graph& g, std::size_t d);

struct RadiusComparison {
  double base = 0.0;     // ρ_N(G)
  double product = 0.0;  // ρ_N(G ⊠ H)
  bool holds = false;    // base <= product + kResidualTolerance
};

/// Hypotheses: G m-regular, H d-regular (d >= 1) on m vertices, and
/// e ↦ α(u,e) a bijection E_G(u) -> V(H) for every u. Each violation throws
/// PreconditionError naming it.
RadiusComparison radius_comparison_check(const Graph& g, const Graph& h,
                                         const HLabeling& a);

struct CoverRadiusCheck {
  double lifted = 0.0;  // ρ(G̃ ⊠_β H)
  double base = 0.0;    // ρ(G ⊠_α H)
  bool holds = false;   // lifted <= base + kResidualTolerance
};

/// Throws PreconditionError unless p is a covering map over z's base.
CoverRadiusCheck cover_radius_check(const VertexMap& p, const ZigZagGraph& z);

struct ContainmentCheck {
  bool contained = false;           // as sets, within tolerance
  bool multiset_contained = false;  // with multiplicity
  std::vector<double> unmatched;    // inner values with no partner (sets)
};

/// Is `inner` contained in `outer` within `tol`?
ContainmentCheck spectrum_contained(std::span<const double> inner,
                                    std::span<const double> outer,
                                    double tol = kMatchTolerance);

struct LaplacianContainment {
  SpectrumReport base;    // ℒ(G ⊠_α H)
  SpectrumReport lifted;  // ℒ(G̃ ⊠_β H)
  ContainmentCheck check;
};

/// Throws PreconditionError unless p is a combinatorial cover over z's
/// base and none of G̃, G and the two products has an isolated vertex.
LaplacianContainment laplacian_containment_check(const VertexMap& p,
                                                 const ZigZagGraph& z);

/// Values with |λ| > tol, descending.
std::vector<double> nonzero_part(std::span<const double> values,
                                 double tol = kMatchTolerance);

/// Equal as multisets within tol.
bool multiset_equal(std::span<const double> a, std::span<const double> b,
                    double tol = kMatchTolerance);

/// nonzero(product) = n × nonzero(base) as multisets within tol.
bool nonzero_spectrum_scales(std::span<const double> base,
                             std::span<const double> product, double factor,
                             double tol = kMatchTolerance);

}  // namespace zz
