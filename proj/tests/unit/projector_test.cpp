#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "fockproj/error.hpp"
#include "fockproj/fock_core.hpp"
#include "fockproj/phase_space.hpp"
#include "fockproj/projector.hpp"

namespace fockproj {
namespace {

double lambda_quadrature(int n, double radius) {
  auto f = [n](double r) { return r <= 0.0 ? 0.0 : 2.0 * std::exp((2.0 * n + 1.0) * std::log(r) - r * r - std::lgamma(n + 1.0)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, radius, 15, 1e-13);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(LambdaProfile, ClosedFormAtLevelZero) {
  EXPECT_NEAR(lambda_profile(std::sqrt(std::log(2.0)), 1).lambdas[0], 0.5, 1e-15);
  for (double r : {0.1, 1.0, 3.0}) EXPECT_NEAR(lambda_profile(r, 1).lambdas[0], -std::expm1(-r * r), 1e-15);
}

TEST(LambdaProfile, EmptyAndFullRegions) {
  for (double v : lambda_profile(0.0, 5).lambdas) EXPECT_EQ(v, 0.0);
  for (double v : lambda_profile(1e-9, 5).lambdas) EXPECT_LT(v, 1e-17);
  EXPECT_NEAR(lambda_profile(20.0, 4).lambdas[3], 1.0, 1e-12);
  EXPECT_NEAR(lambda_quadrature(3, 20.0), 1.0, 1e-12);
}

TEST(LambdaProfile, MatchesQuadrature) {
  for (double r : {0.7, 3.0, 8.0}) {
    const auto prof = lambda_profile(r, 80);
    for (int n = 0; n < 80; n += 3) EXPECT_NEAR(prof.lambdas[n], lambda_quadrature(n, r), 1e-10);
  }
}

TEST(LambdaProfile, MonotoneInLevelAndRadius) {
  for (double r : {0.5, 3.0, 9.0}) {
    const auto a = lambda_profile(r, 120).lambdas;
    const auto b = lambda_profile(r * 1.1, 120).lambdas;
    for (int n = 0; n < 120; ++n) {
      EXPECT_GE(a[n], 0.0);
      EXPECT_LE(a[n], 1.0);
      EXPECT_GE(b[n], a[n]);
      if (n > 0) EXPECT_LE(a[n], a[n - 1]);
    }
  }
}

TEST(LambdaProfile, RejectsBadArguments) {
  EXPECT_EQ(code_of([] { lambda_profile(-1.0, 3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { lambda_profile(NAN, 3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { lambda_profile(1.0, 0); }), ErrorCode::InvalidArgument);
}

TEST(QuasiProjector, DiagonalWithLambdaEntries) {
  const auto p = quasi_projector(std::sqrt(std::log(2.0)), FockDim(1));
  EXPECT_NEAR(p(0, 0).real(), 0.5, 1e-15);

  const FockDim d(32);
  const auto q = quasi_projector(3.0, d);
  const auto prof = lambda_profile(3.0, 32).lambdas;
  for (int m = 0; m < 32; ++m) {
    for (int n = 0; n < 32; ++n) {
      if (m == n) {
        EXPECT_EQ(q(m, n).real(), prof[n]);
      } else {
        EXPECT_EQ(q(m, n), Complex(0.0));
      }
    }
  }
  EXPECT_EQ(code_of([] { quasi_projector(6.0, FockDim(30)); }), ErrorCode::DimensionTooSmall);
}

TEST(RoundToProjector, FixedPointsAndZero) {
  const FockDim d(10);
  EXPECT_EQ(round_to_projector(FockOperator::zero(d)).mat(), Matrix::Zero(10, 10));
  const auto e = exact_projector(4, d);
  EXPECT_LE(max_abs_diff(round_to_projector(e), e), 1e-14);
  const auto disp = displaced_projector(2, PhasePoint{0.5, 0.5}, FockDim(40));
  EXPECT_LE(max_abs_diff(round_to_projector(disp), disp), 1e-12);
}

TEST(RoundToProjector, QuasiRoundsToExactProjector) {
  const FockDim d(160);
  for (double r : {1.0, 2.0, 3.5, 6.0, 9.0, 12.0}) {
    const int N = rank_index_for_radius(r);
    const auto prof = lambda_profile(r, 160).lambdas;
    ASSERT_GE(prof[N], 0.5);
    ASSERT_LT(prof[N + 1], 0.5);
    EXPECT_LE(max_abs_diff(round_to_projector(quasi_projector(r, d)), exact_projector(N, d)), 1e-14) << r;
  }
}

TEST(RoundToProjector, RankTracksAreaAndThreshold) {
  const FockDim d(160);
  for (double r = 2.0; r <= 12.0; r += 0.5) {
    const auto q = quasi_projector(r, d);
    const double rank = round_to_projector(q).trace().real();
    EXPECT_LE(std::abs(rank - r * r), 3.0 * r + 5.0) << r;
    const double low = round_to_projector(q, 0.3).trace().real();
    const double high = round_to_projector(q, 0.7).trace().real();
    EXPECT_GE(low, high);
    EXPECT_LE(low - high, 3.0 * r + 5.0);
  }
}

TEST(RoundToProjector, RejectsOutOfRangeSpectrum) {
  RealVector v(3);
  v << 0.2, 1.3, 0.0;
  EXPECT_EQ(code_of([&] { round_to_projector(FockOperator::diagonal(v)); }), ErrorCode::EigenvalueOutOfRange);
  EXPECT_EQ(code_of([] { round_to_projector(FockOperator::zero(FockDim(2)), 1.0); }), ErrorCode::InvalidArgument);
}

TEST(ExactProjector, Basics) {
  RealVector v(3);
  v << 1, 0, 0;
  EXPECT_EQ(exact_projector(0, FockDim(3)).mat(), FockOperator::diagonal(v).mat());
  const auto e = exact_projector(7, FockDim(20));
  EXPECT_EQ(e.trace(), Complex(8.0));
  EXPECT_EQ(e.idempotency_defect(), 0.0);
  EXPECT_EQ(code_of([] { exact_projector(3, FockDim(3)); }), ErrorCode::RankExceedsDimension);
  EXPECT_THROW(exact_projector(-1, FockDim(3)), Error);
}

TEST(DisplacedProjector, OriginIsExactProjector) {
  const FockDim d(30);
  EXPECT_LE(max_abs_diff(displaced_projector(4, PhasePoint{}, d), exact_projector(4, d)), 1e-15);
}

TEST(DisplacedProjector, TraceAndExactness) {
  const FockDim d(128);
  for (auto c : {PhasePoint{1.5, -2.0}, PhasePoint{-3.0, 0.5}, PhasePoint{0.0, 4.0}}) {
    const auto e = displaced_projector(10, c, d);
    EXPECT_NEAR(e.trace().real(), 11.0, 1e-11);
    EXPECT_LE(e.idempotency_defect(), 1e-12);
    EXPECT_LE(e.hermiticity_defect(), 1e-12);
  }
}

TEST(DisplacedProjector, HusimiCovariance) {
  const FockDim d(80);
  const auto e = displaced_projector(5, PhasePoint{0.0, std::sqrt(2.0)}, d);
  EXPECT_NEAR(husimi(e, ComplexLabel{Complex(1.0, 0.0)}), husimi(exact_projector(5, d), ComplexLabel{}), 1e-8);
}

TEST(EllipticalProjector, ReducesToDisplaced) {
  const FockDim d(64);
  const EllipseRegion spec{PhasePoint{0.4, -1.0}, Complex(0.0), 0.0, 6};
  EXPECT_LE(max_abs_diff(elliptical_projector(spec, d), displaced_projector(5, spec.center, d)), 1e-13);
}

TEST(EllipticalProjector, TraceAndExactness) {
  const FockDim d(128);
  const auto e = elliptical_projector(EllipseRegion{PhasePoint{1.0, 1.0}, std::polar(0.4, 0.3), 0.7, 8}, d);
  EXPECT_NEAR(e.trace().real(), 8.0, 1e-11);
  EXPECT_LE(e.idempotency_defect(), 1e-12);
  EXPECT_LE(e.hermiticity_defect(), 1e-12);
}

TEST(EllipticalProjector, WignerMassInsideEllipse) {
  // real squeeze r: semi-axes e^{r} sqrt(2N) along p and e^{-r} sqrt(2N) along q
  const int N = 10;
  const double r = 0.5;
  const FockDim d(128);
  const auto e = elliptical_projector(EllipseRegion{PhasePoint{}, Complex(r, 0.0), 0.0, N + 1}, d);
  const double a_p = std::exp(r) * std::sqrt(2.0 * N);
  const double a_q = std::exp(-r) * std::sqrt(2.0 * N);
  const auto p_axis = uniform_axis(-1.3 * a_p, 1.3 * a_p, 241);
  const auto q_axis = uniform_axis(-1.3 * a_q, 1.3 * a_q, 241);
  PhaseGrid grid = wigner_grid(e, p_axis, q_axis);
  const double total = integrate(grid);
  for (int i = 0; i < 241; ++i) {
    for (int j = 0; j < 241; ++j) {
      const double u = p_axis[i] / a_p;
      const double v = q_axis[j] / a_q;
      if (u * u + v * v > 1.0) grid.values(i, j) = 0.0;
    }
  }
  EXPECT_NEAR(total, N + 1.0, 0.05);
  EXPECT_GE(integrate(grid) / (N + 1.0), 0.9);
}

TEST(GeneralRegion, HarmonicMatchesExactProjector) {
  const FockDim d(128);
  for (int N : {0, 3, 7, 20}) {
    const auto g = general_region_projector(GeneralRegion{HarmonicPotential{}, N + 1}, d);
    EXPECT_LE(max_abs_diff(g.projector, exact_projector(N, d)), 1e-8) << N;
    EXPECT_NEAR(g.boundary_energy, N + 1.0, 1e-8);
    EXPECT_FALSE(g.truncation_warning);
  }
}

TEST(GeneralRegion, QuarticProjectorIsExactAndLocalized) {
  const FockDim d(128);
  const auto g = general_region_projector(GeneralRegion{PolynomialPotential{{0, 0, 0, 0, 0.25}}, 8}, d);
  EXPECT_LE(g.projector.idempotency_defect(), 1e-12);
  EXPECT_LE(g.projector.hermiticity_defect(), 1e-12);
  EXPECT_NEAR(g.projector.trace().real(), 8.0, 1e-10);
  EXPECT_FALSE(g.truncation_warning);
  ASSERT_EQ(g.energies.size(), 9u);
  EXPECT_NEAR(g.boundary_energy, 0.5 * (g.energies[7] + g.energies[8]), 1e-14);

  const auto axis = uniform_axis(-6.5, 6.5, 201);
  PhaseGrid grid = wigner_grid(g.projector, axis, axis);
  for (int i = 0; i < 201; ++i) {
    for (int j = 0; j < 201; ++j) {
      const double p = axis[i];
      const double q = axis[j];
      if (0.5 * p * p + 0.25 * q * q * q * q > g.boundary_energy) grid.values(i, j) = 0.0;
    }
  }
  EXPECT_GE(integrate(grid) / 8.0, 0.85);
}

TEST(GeneralRegion, TooManyLevelsForDimension) {
  EXPECT_EQ(code_of([] { general_region_projector(GeneralRegion{HarmonicPotential{}, 9}, FockDim(16)); }),
            ErrorCode::DimensionTooSmall);
}

TEST(GeneralRegion, WarnsWhenTruncationIsCoarse) {
  // a very soft quartic needs far more than 24 levels to resolve 12 states
  const auto g = general_region_projector(GeneralRegion{PolynomialPotential{{0, 0, 0, 0, 0.002}}, 12}, FockDim(24));
  EXPECT_TRUE(g.truncation_warning);
  EXPECT_GT(g.edge_weight, 1e-6);
}

TEST(BuildProjector, DispatchesOnRegion) {
  const FockDim d(64);
  const auto circle = build_projector(CircleRegion{3.0, PhasePoint{1.0, 0.0}}, d);
  EXPECT_LE(max_abs_diff(circle, displaced_projector(rank_index_for_radius(3.0), PhasePoint{1.0, 0.0}, d)), 1e-15);
  EXPECT_EQ(code_of([&] { build_projector(CircleRegion{0.5, {}}, d); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([&] { build_projector(CircleRegion{-1.0, {}}, d); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([&] { build_projector(EllipseRegion{{}, Complex(0.0), 0.0, 0}, d); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([&] { build_projector(GeneralRegion{HarmonicPotential{}, 0}, d); }), ErrorCode::InvalidSpec);
}

TEST(Complement, IsOrthogonalProjector) {
  const FockDim d(96);
  const auto e = displaced_projector(5, PhasePoint{1.0, 1.5}, d);
  const auto c = complement(e);
  EXPECT_LE(c.idempotency_defect(), 1e-12);
  EXPECT_LE((e * c).mat().cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LE(max_abs_diff(e + c, FockOperator::identity(d)), 1e-15);
}

TEST(Footprint, CoversRegion) {
  EXPECT_EQ(footprint(EllipseRegion{{}, Complex(0.0), 0.0, 6}).top_level, 5);
  const auto fp = footprint(EllipseRegion{PhasePoint{0.0, std::sqrt(2.0)}, Complex(0.5, 0.0), 0.0, 11});
  EXPECT_EQ(fp.top_level, int(std::ceil(11 * std::exp(1.0))) - 1);
  EXPECT_NEAR(fp.center.z.real(), 1.0, 1e-15);
}

}  // namespace
}  // namespace fockproj
