#include "fockproj/fock_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "fockproj/error.hpp"
#include "fockproj/special.hpp"

namespace fockproj {

FockState number_state(int n, FockDim dim) {
  if (n < 0 || n >= dim.value()) {
    throw Error(ErrorCode::IndexOutOfRange, "number_state: n = " + std::to_string(n) +
                                                " outside [0, " + std::to_string(dim.value()) + ")");
  }
  Vector amp = Vector::Zero(dim.index());
  amp(n) = 1.0;
  return FockState(dim, std::move(amp));
}

FockState coherent_state(ComplexLabel z, FockDim dim) {
  Vector amp = Vector::Zero(dim.index());
  const double r2 = z.norm2();
  if (r2 == 0.0) {
    amp(0) = 1.0;
    return FockState(dim, std::move(amp));
  }
  const double log_r = 0.5 * std::log(r2);
  const double phase = std::arg(z.z);
  for (int n = 0; n < dim.value(); ++n) {
    const double mag = std::exp(n * log_r - 0.5 * r2 - 0.5 * std::lgamma(n + 1.0));
    amp(n) = std::polar(mag, n * phase);
  }
  return FockState(dim, std::move(amp));
}

double coherent_norm_deficit(ComplexLabel z, FockDim dim) {
  return special::gamma_p_int(dim.value() - 1, z.norm2());
}

LadderOps ladder_ops(FockDim dim) {
  Matrix a = Matrix::Zero(dim.index(), dim.index());
  for (int n = 1; n < dim.value(); ++n) a(n - 1, n) = std::sqrt(double(n));
  FockOperator annihilation(dim, a);
  return LadderOps{annihilation, annihilation.adjoint()};
}

Quadratures quadratures(FockDim dim) {
  const auto [a, adag] = ladder_ops(dim);
  const double s = 1.0 / std::sqrt(2.0);
  FockOperator q = (a + adag) * Complex(s, 0.0);
  FockOperator p = (a - adag) * Complex(0.0, -s);
  return Quadratures{std::move(q), std::move(p)};
}

FockOperator number_operator(FockDim dim) {
  return FockOperator::diagonal(RealVector::LinSpaced(dim.index(), 0.0, dim.value() - 1.0));
}

FockOperator parity(FockDim dim) {
  RealVector d(dim.index());
  for (int n = 0; n < dim.value(); ++n) d(n) = (n % 2 == 0) ? 1.0 : -1.0;
  return FockOperator::diagonal(d);
}

EigenDecomposition eigh(const FockOperator& a, double tol) {
  const double defect = a.hermiticity_defect();
  if (!(defect <= tol)) {
    throw Error(ErrorCode::NotHermitian,
                "eigh: operator is not Hermitian (max |A - A^dagger| = " + std::to_string(defect) + ")");
  }
  const Matrix sym = 0.5 * (a.mat() + a.mat().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "eigh: eigensolver did not converge");
  }
  return EigenDecomposition{solver.eigenvalues(), FockOperator(a.dim(), solver.eigenvectors())};
}

FockOperator expi_hermitian(const FockOperator& generator) {
  const auto eig = eigh(generator);
  const Vector phases = eig.values.unaryExpr([](double l) { return std::polar(1.0, l); });
  const Matrix& v = eig.vectors.mat();
  return FockOperator(generator.dim(), v * phases.asDiagonal() * v.adjoint());
}

FockOperator displacement(PhasePoint x, FockDim dim) {
  if (x.p == 0.0 && x.q == 0.0) return FockOperator::identity(dim);
  const auto quad = quadratures(dim);
  return expi_hermitian(quad.q * Complex(x.p, 0.0) - quad.p * Complex(x.q, 0.0));
}

FockOperator squeeze(Complex xi, FockDim dim) {
  if (xi == Complex(0.0, 0.0)) return FockOperator::identity(dim);
  const auto [a, adag] = ladder_ops(dim);
  // exp(A) with A anti-Hermitian equals exp(i G) for G = -i A.
  const FockOperator anti = (a * a) * (0.5 * std::conj(xi)) - (adag * adag) * (0.5 * xi);
  FockOperator g = anti * Complex(0.0, -1.0);
  return expi_hermitian(g);
}

FockOperator rotate(double theta, FockDim dim) {
  Vector d(dim.index());
  for (int n = 0; n < dim.value(); ++n) d(n) = std::polar(1.0, -theta * n);
  return FockOperator(dim, Matrix(d.asDiagonal()));
}

int minimum_dimension(int N, ComplexLabel z) {
  const int tail = std::max(static_cast<int>(std::ceil(4.0 * z.norm2())), 25);
  return N + tail;
}

void check_truncation(int N, ComplexLabel z, FockDim dim) {
  const int need = minimum_dimension(N, z);
  if (dim.value() < need) {
    throw Error(ErrorCode::TruncationBound, "working dimension " + std::to_string(dim.value()) +
                                                " below required " + std::to_string(need) +
                                                " for rank " + std::to_string(N + 1) +
                                                " at |z|^2 = " + std::to_string(z.norm2()));
  }
}

}  // namespace fockproj
