#pragma once

#include <variant>
#include <vector>

#include "fockproj/potential.hpp"
#include "fockproj/types.hpp"

namespace fockproj {

/// Eigenvalues lambda_n of the coherent-state quasi-projector on a disc.
struct EigenProfile {
  std::vector<double> lambdas;
};

struct CircleRegion {
  double radius = 1.0;  // in |z|; the disc |z| <= R
  PhasePoint center{};
};

struct EllipseRegion {
  PhasePoint center{};
  Complex squeeze{0.0, 0.0};
  double rotation = 0.0;
  int rank = 1;
};

struct GeneralRegion {
  PotentialSpec potential = HarmonicPotential{};
  int levels = 1;
};

using RegionSpec = std::variant<CircleRegion, EllipseRegion, GeneralRegion>;

/// Throws InvalidSpec when the region's own invariants fail.
void validate(const RegionSpec& region);

/// lambda_n(R) = (2/n!) int_0^R r^{2n+1} e^{-r^2} dr = P(n+1, R^2), n < count.
/// R = 0 is accepted and yields all zeros.
EigenProfile lambda_profile(double radius, int count);

/// Diagonal quasi-projector diag(lambda_0, ..., lambda_{d-1}).
/// Throws DimensionTooSmall when R^2 > d.
FockOperator quasi_projector(double radius, FockDim dim);

/// Replace eigenvalues >= threshold by 1 and the rest by 0 in P's eigenbasis.
FockOperator round_to_projector(const FockOperator& quasi, double threshold = 0.5);

/// sum_{n=0}^{N} |n><n|
FockOperator exact_projector(int N, FockDim dim);

/// Largest N with lambda_N(R) >= threshold, or -1 if lambda_0 < threshold.
int rank_index_for_radius(double radius, double threshold = 0.5);

/// U(c) E_N U(c)^dagger
FockOperator displaced_projector(int N, PhasePoint center, FockDim dim);

/// U(c) R(theta) S(xi) E_{rank-1} S^dagger R^dagger U^dagger
FockOperator elliptical_projector(const EllipseRegion& spec, FockDim dim);

struct GeneralRegionProjector {
  FockOperator projector;
  double boundary_energy;  // midpoint of eigenvalues levels-1 and levels
  std::vector<double> energies;  // lowest `levels + 1` eigenvalues of K
  /// Set when the projector carries weight on the top quarter of the number
  /// basis, i.e. the truncation is not resolving the requested levels.
  bool truncation_warning = false;
  double edge_weight = 0.0;
};

/// Projector onto the lowest `levels` eigenstates of K = p^2/2 + U(q).
GeneralRegionProjector general_region_projector(const GeneralRegion& spec, FockDim dim);

/// Circle regions use N = rank_index_for_radius(R); throws InvalidSpec if the
/// disc is too small to hold a single level.
FockOperator build_projector(const RegionSpec& region, FockDim dim);

/// Rank N + 1 and centre label of a region; used for truncation checks.
struct RegionFootprint {
  int top_level;
  ComplexLabel center;
};
RegionFootprint footprint(const RegionSpec& region);

/// 1 - E
FockOperator complement(const FockOperator& e);

}  // namespace fockproj
