#include "fockproj/projector.hpp"

#include <cmath>
#include <string>

#include "fockproj/dynamics.hpp"
#include "fockproj/error.hpp"
#include "fockproj/fock_core.hpp"
#include "fockproj/special.hpp"

namespace fockproj {

namespace {

constexpr double kSpectrumSlack = 1e-10;
constexpr double kEdgeWeightLimit = 1e-6;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_rank(int N, FockDim dim, const char* who) {
  if (N < 0 || N >= dim.value()) {
    throw Error(ErrorCode::RankExceedsDimension, std::string(who) + ": rank " + std::to_string(N + 1) +
                                                     " does not fit dimension " +
                                                     std::to_string(dim.value()));
  }
}

FockOperator conjugate(const FockOperator& u, const FockOperator& e) {
  Matrix m = u.mat() * e.mat() * u.mat().adjoint();
  // Symmetrize so Hermiticity holds to the last bit; idempotency is untouched
  // at the rounding level.
  m = 0.5 * (m + m.adjoint()).eval();
  return FockOperator(e.dim(), std::move(m));
}

}  // namespace

void validate(const RegionSpec& region) {
  std::visit(overloaded{
                 [](const CircleRegion& c) {
                   if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
                     throw Error(ErrorCode::InvalidSpec, "circle region: R must be positive");
                   }
                 },
                 [](const EllipseRegion& e) {
                   if (e.rank < 1) throw Error(ErrorCode::InvalidSpec, "ellipse region: rank must be >= 1");
                 },
                 [](const GeneralRegion& g) {
                   if (g.levels < 1) throw Error(ErrorCode::InvalidSpec, "general region: levels must be >= 1");
                   validate(g.potential);
                 },
             },
             region);
}

EigenProfile lambda_profile(double radius, int count) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "lambda_profile: R must be a non-negative finite number");
  }
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "lambda_profile: count must be >= 1");
  return EigenProfile{special::gamma_p_int_sequence(count, radius * radius)};
}

FockOperator quasi_projector(double radius, FockDim dim) {
  if (radius * radius > dim.value()) {
    throw Error(ErrorCode::DimensionTooSmall, "quasi_projector: R^2 = " + std::to_string(radius * radius) +
                                                  " exceeds dimension " + std::to_string(dim.value()));
  }
  const auto profile = lambda_profile(radius, dim.value());
  return FockOperator::diagonal(Eigen::Map<const RealVector>(profile.lambdas.data(), dim.index()));
}

FockOperator round_to_projector(const FockOperator& quasi, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "round_to_projector: threshold must lie in (0, 1)");
  }
  const auto eig = eigh(quasi);
  RealVector rounded(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double l = eig.values(i);
    if (l < -kSpectrumSlack || l > 1.0 + kSpectrumSlack) {
      throw Error(ErrorCode::EigenvalueOutOfRange,
                  "round_to_projector: eigenvalue " + std::to_string(l) + " outside [0, 1]");
    }
    rounded(i) = l >= threshold ? 1.0 : 0.0;
  }
  const Matrix& v = eig.vectors.mat();
  Matrix m = v * rounded.cast<Complex>().asDiagonal() * v.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return FockOperator(quasi.dim(), std::move(m));
}

FockOperator exact_projector(int N, FockDim dim) {
  require_rank(N, dim, "exact_projector");
  RealVector d = RealVector::Zero(dim.index());
  d.head(N + 1).setOnes();
  return FockOperator::diagonal(d);
}

int rank_index_for_radius(double radius, double threshold) {
  const double x = radius * radius;
  // lambda_n is non-increasing in n; start near n = R^2 and walk.
  int n = std::max(0, static_cast<int>(std::lround(x)) - 1);
  while (n >= 0 && special::gamma_p_int(n, x) < threshold) --n;
  while (special::gamma_p_int(n + 1, x) >= threshold) ++n;
  return n;
}

FockOperator displaced_projector(int N, PhasePoint center, FockDim dim) {
  require_rank(N, dim, "displaced_projector");
  const FockOperator e = exact_projector(N, dim);
  if (center.p == 0.0 && center.q == 0.0) return e;
  return conjugate(displacement(center, dim), e);
}

FockOperator elliptical_projector(const EllipseRegion& spec, FockDim dim) {
  validate(RegionSpec{spec});
  require_rank(spec.rank - 1, dim, "elliptical_projector");
  const FockOperator chain = displacement(spec.center, dim) * rotate(spec.rotation, dim) * squeeze(spec.squeeze, dim);
  return conjugate(chain, exact_projector(spec.rank - 1, dim));
}

GeneralRegionProjector general_region_projector(const GeneralRegion& spec, FockDim dim) {
  validate(RegionSpec{spec});
  if (2 * spec.levels > dim.value()) {
    throw Error(ErrorCode::DimensionTooSmall, "general_region_projector: levels " + std::to_string(spec.levels) +
                                                  " exceed half the dimension " + std::to_string(dim.value()));
  }
  const auto eig = eigh(build_hamiltonian(spec.potential, dim));
  const auto block = eig.vectors.mat().leftCols(spec.levels);
  Matrix m = block * block.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();

  GeneralRegionProjector out{FockOperator(dim, std::move(m)), 0.0, {}, false, 0.0};
  out.boundary_energy = 0.5 * (eig.values(spec.levels - 1) + eig.values(spec.levels));
  out.energies.assign(eig.values.data(), eig.values.data() + spec.levels + 1);

  const int edge = (3 * dim.value()) / 4;
  double weight = 0.0;
  for (int n = edge; n < dim.value(); ++n) weight += out.projector(n, n).real();
  out.edge_weight = weight / spec.levels;
  out.truncation_warning = out.edge_weight > kEdgeWeightLimit;
  return out;
}

FockOperator build_projector(const RegionSpec& region, FockDim dim) {
  validate(region);
  return std::visit(overloaded{
                        [dim](const CircleRegion& c) {
                          const int N = rank_index_for_radius(c.radius);
                          if (N < 0) {
                            throw Error(ErrorCode::InvalidSpec, "circle region: R^2 below ln 2 holds no level");
                          }
                          return displaced_projector(N, c.center, dim);
                        },
                        [dim](const EllipseRegion& e) { return elliptical_projector(e, dim); },
                        [dim](const GeneralRegion& g) { return general_region_projector(g, dim).projector; },
                    },
                    region);
}

RegionFootprint footprint(const RegionSpec& region) {
  return std::visit(overloaded{
                        [](const CircleRegion& c) {
                          return RegionFootprint{std::max(rank_index_for_radius(c.radius), 0),
                                                 ComplexLabel::from_point(c.center)};
                        },
                        [](const EllipseRegion& e) {
                          // Squeezing by r stretches one axis by e^r, so the
                          // occupied number range grows by roughly e^{2r}.
                          const double stretch = std::exp(2.0 * std::abs(e.squeeze));
                          return RegionFootprint{static_cast<int>(std::ceil(e.rank * stretch)) - 1,
                                                 ComplexLabel::from_point(e.center)};
                        },
                        [](const GeneralRegion& g) { return RegionFootprint{g.levels - 1, ComplexLabel{}}; },
                    },
                    region);
}

FockOperator complement(const FockOperator& e) { return FockOperator::identity(e.dim()) - e; }

}  // namespace fockproj
