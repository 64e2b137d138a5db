#include "oracles.hpp"

#include <cmath>
#include <random>

#include <boost/math/distributions/poisson.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace fockproj::oracle {

double lambda_by_quadrature(int n, double radius) {
  const double log_norm = std::log(2.0) - std::lgamma(n + 1.0);
  auto integrand = [n, log_norm](double r) {
    if (r <= 0.0) return 0.0;
    return std::exp(log_norm + (2.0 * n + 1.0) * std::log(r) - r * r);
  };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, radius, 15, 1e-13, &error);
}

double poisson_cdf(int n, double mean) {
  if (mean == 0.0) return 1.0;
  return boost::math::cdf(boost::math::poisson_distribution<double>(mean), n);
}

MonteCarloProjector monte_carlo_quasi_projector(double radius, int dim, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double two_pi = 2.0 * std::acos(-1.0);

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXd sq_re = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd sq_im = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXcd amp(dim);

  for (int s = 0; s < samples; ++s) {
    const double r = radius * std::sqrt(unit(rng));
    const std::complex<double> z = std::polar(r, two_pi * unit(rng));
    amp(0) = std::exp(-0.5 * r * r);
    for (int n = 1; n < dim; ++n) amp(n) = amp(n - 1) * z / std::sqrt(double(n));
    const Eigen::MatrixXcd outer = amp * amp.adjoint();
    sum += outer;
    sq_re += outer.real().cwiseAbs2();
    sq_im += outer.imag().cwiseAbs2();
  }

  const double m = samples;
  const double area = radius * radius;  // (pi R^2) / pi
  MonteCarloProjector out;
  const Eigen::MatrixXcd mean = sum / m;
  out.mean = area * mean;
  const Eigen::MatrixXd var_re = (sq_re / m - mean.real().cwiseAbs2()) * (m / (m - 1.0));
  const Eigen::MatrixXd var_im = (sq_im / m - mean.imag().cwiseAbs2()) * (m / (m - 1.0));
  out.se_real = area * var_re.cwiseMax(0.0).cwiseSqrt() / std::sqrt(m);
  out.se_imag = area * var_im.cwiseMax(0.0).cwiseSqrt() / std::sqrt(m);
  return out;
}

double masked_trapezoid(const std::vector<double>& p_axis, const std::vector<double>& q_axis,
                        const Eigen::MatrixXd& values, const std::function<bool(double, double)>& inside) {
  auto weights = [](const std::vector<double>& axis) {
    std::vector<double> w(axis.size(), 0.0);
    for (std::size_t i = 1; i < axis.size(); ++i) {
      const double h = 0.5 * (axis[i] - axis[i - 1]);
      w[i - 1] += h;
      w[i] += h;
    }
    return w;
  };
  const auto wp = weights(p_axis);
  const auto wq = weights(q_axis);
  double acc = 0.0;
  for (std::size_t i = 0; i < p_axis.size(); ++i) {
    for (std::size_t j = 0; j < q_axis.size(); ++j) {
      if (inside(p_axis[i], q_axis[j])) {
        acc += wp[i] * wq[j] * values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return acc;
}

}  // namespace fockproj::oracle
