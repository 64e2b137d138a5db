#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace fockproj {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Truncation dimension of the number basis {|0>, ..., |d-1>}.
class FockDim {
 public:
  explicit FockDim(int d);

  int value() const noexcept { return d_; }
  Eigen::Index index() const noexcept { return d_; }

  friend bool operator==(FockDim, FockDim) = default;

 private:
  int d_;
};

/// Phase-space point in hbar = 1 units.
struct PhasePoint {
  double p = 0.0;
  double q = 0.0;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// Coherent-state label z = (q + i p) / sqrt(2).
struct ComplexLabel {
  Complex z{0.0, 0.0};

  static ComplexLabel from_point(PhasePoint x);
  PhasePoint to_point() const;
  double norm2() const { return std::norm(z); }
};

struct FockState {
  FockDim dim;
  Vector amp;

  FockState(FockDim d, Vector amplitudes);

  double norm2() const { return amp.squaredNorm(); }
};

/// Dense operator on the truncated number basis; element (m, n) = <m|A|n>.
class FockOperator {
 public:
  explicit FockOperator(FockDim dim);
  FockOperator(FockDim dim, Matrix mat);

  static FockOperator identity(FockDim dim);
  static FockOperator zero(FockDim dim);
  static FockOperator outer(const FockState& ket, const FockState& bra);
  static FockOperator diagonal(const RealVector& diag);

  FockDim dim() const noexcept { return dim_; }
  const Matrix& mat() const noexcept { return mat_; }
  Complex operator()(Eigen::Index m, Eigen::Index n) const { return mat_(m, n); }

  FockOperator adjoint() const;
  Complex trace() const { return mat_.trace(); }

  /// max |A - A^dagger| entry
  double hermiticity_defect() const;
  /// max |A^2 - A| entry
  double idempotency_defect() const;
  /// max |A^dagger A - 1| entry
  double unitarity_defect() const;

  bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }
  bool is_projector(double tol = 1e-10) const;

  FockOperator& operator+=(const FockOperator& rhs);
  FockOperator& operator-=(const FockOperator& rhs);
  FockOperator& operator*=(Complex s);

  friend FockOperator operator+(FockOperator lhs, const FockOperator& rhs) { return lhs += rhs; }
  friend FockOperator operator-(FockOperator lhs, const FockOperator& rhs) { return lhs -= rhs; }
  friend FockOperator operator*(FockOperator lhs, Complex s) { return lhs *= s; }
  friend FockOperator operator*(Complex s, FockOperator rhs) { return rhs *= s; }
  friend FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs);
  friend FockState operator*(const FockOperator& lhs, const FockState& rhs);

 private:
  FockDim dim_;
  Matrix mat_;
};

/// max |A - B| entry
double max_abs_diff(const FockOperator& a, const FockOperator& b);

/// <bra|A|ket>
Complex matrix_element(const FockState& bra, const FockOperator& a, const FockState& ket);

}  // namespace fockproj
