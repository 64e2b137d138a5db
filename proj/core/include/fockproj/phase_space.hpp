#pragma once

#include <vector>

#include "fockproj/types.hpp"

namespace fockproj {

/// Values sampled on a rectangular (p, q) grid; values(i, j) is at
/// (p_axis[i], q_axis[j]).
struct PhaseGrid {
  std::vector<double> p_axis;
  std::vector<double> q_axis;
  Eigen::MatrixXd values;
};

/// Weighted sum of coherent-state projectors; a positive point-mass P-function.
struct CoherentMixture {
  struct Term {
    double weight;
    ComplexLabel label;
  };
  std::vector<Term> terms;
};

std::vector<double> uniform_axis(double lo, double hi, int points);

/// Wigner function normalized so that int W dp dq = Tr A and
/// Tr(AB) = 2 pi int W_A W_B dp dq:
///
///   W_A(p, q) = (1/pi) Tr[A U(p,q) Pi U(p,q)^dagger].
///
/// The displaced parity is evaluated from its closed-form number-basis
/// matrix elements, so A is treated as an operator on the full space that
/// vanishes outside the truncated block.
double wigner_point(const FockOperator& a, PhasePoint x);

/// sum_{n=0}^{N} (-1)^n L_n(r2) e^{-r2/2} / pi with r2 = 2(p^2 + q^2).
double wigner_series_circular(int N, double r2);

PhaseGrid wigner_grid(const FockOperator& a, const std::vector<double>& p_axis,
                      const std::vector<double>& q_axis, unsigned threads = 0);

/// <z|A|z> with the truncated coherent state.
double husimi(const FockOperator& a, ComplexLabel z);

PhaseGrid husimi_grid(const FockOperator& a, const std::vector<double>& p_axis,
                      const std::vector<double>& q_axis, unsigned threads = 0);

struct Probability {
  double value;  // clamped to [0, 1]
  double raw;
};

/// Tr(E rho). Throws InvalidDensity or NotAProjector on bad inputs.
Probability region_probability(const FockOperator& rho, const FockOperator& e);

struct PFunctionProbability {
  double exact;   // sum_i w_i <z_i|E_N|z_i>
  double cutoff;  // sum_{i : |z_i|^2 < N} w_i
};

PFunctionProbability pfunction_probability(const CoherentMixture& mix, int N);

/// Throws InvalidSpec unless weights are positive and sum to 1 within 1e-12.
void validate(const CoherentMixture& mix);

/// Checks Hermiticity, unit trace and spectrum >= -1e-10; throws InvalidDensity.
void validate_density(const FockOperator& rho);

/// Trapezoid-rule integral of the grid values.
double integrate(const PhaseGrid& grid);

/// Trapezoid-rule integral of the product of two grids on identical axes.
double integrate_product(const PhaseGrid& a, const PhaseGrid& b);

}  // namespace fockproj
