#pragma once

#include <cmath>
#include <random>

#include "fockproj/types.hpp"

namespace fockproj::testing {

inline FockOperator random_hermitian(FockDim dim, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(dim.index(), dim.index());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return FockOperator(dim, (m + m.adjoint()) * 0.5);
}

// Random pure state supported on the lowest `support` levels.
inline FockOperator random_pure_density(FockDim dim, int support, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v = Vector::Zero(dim.index());
  for (int n = 0; n < support; ++n) v(n) = Complex(g(rng), g(rng));
  v.normalize();
  return FockOperator(dim, v * v.adjoint());
}

inline Matrix top_left(const FockOperator& a, Eigen::Index n) { return a.mat().topLeftCorner(n, n); }

}  // namespace fockproj::testing
