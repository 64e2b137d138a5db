#pragma once

// Reference computations that do not go through the library's own code paths.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace fockproj::oracle {

/// (2/n!) int_0^R r^{2n+1} e^{-r^2} dr by adaptive Gauss-Kronrod quadrature.
double lambda_by_quadrature(int n, double radius);

/// Poisson CDF P(K <= n) for mean `mean` (Boost.Math).
double poisson_cdf(int n, double mean);

struct MonteCarloProjector {
  Eigen::MatrixXcd mean;      // R^2 * sample mean of |z><z|
  Eigen::MatrixXd se_real;    // standard error of the real parts
  Eigen::MatrixXd se_imag;    // standard error of the imaginary parts
};

/// Monte-Carlo estimate of int_{|z|<=R} d^2z/pi |z><z| on a d-level truncation,
/// sampling z uniformly in the disc. Coherent amplitudes are built here by
/// their own recurrence.
MonteCarloProjector monte_carlo_quasi_projector(double radius, int dim, int samples, std::uint64_t seed);

/// Trapezoid-weighted sum of `values` over the cells where inside(p, q) holds.
double masked_trapezoid(const std::vector<double>& p_axis, const std::vector<double>& q_axis,
                        const Eigen::MatrixXd& values, const std::function<bool(double, double)>& inside);

}  // namespace fockproj::oracle
