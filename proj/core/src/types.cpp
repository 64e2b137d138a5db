#include "fockproj/types.hpp"

#include <cmath>
#include <string>

#include "fockproj/error.hpp"

namespace fockproj {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::NotHermitian: return "not-hermitian";
    case ErrorCode::EigenvalueOutOfRange: return "eigenvalue-out-of-range";
    case ErrorCode::DimensionTooSmall: return "dimension-too-small";
    case ErrorCode::RankExceedsDimension: return "rank-exceeds-dimension";
    case ErrorCode::NonConfiningPotential: return "non-confining-potential";
    case ErrorCode::InvalidDensity: return "invalid-density-operator";
    case ErrorCode::NotAProjector: return "not-a-projector";
    case ErrorCode::InvalidSpec: return "invalid-spec";
    case ErrorCode::UnknownLabel: return "unknown-label";
    case ErrorCode::NonIncreasingTimes: return "non-increasing-times";
    case ErrorCode::TruncationBound: return "truncation-bound";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

FockDim::FockDim(int d) : d_(d) {
  if (d < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "FockDim: dimension must be >= 1, got " + std::to_string(d));
  }
}

ComplexLabel ComplexLabel::from_point(PhasePoint x) {
  return ComplexLabel{Complex(x.q, x.p) / std::sqrt(2.0)};
}

PhasePoint ComplexLabel::to_point() const {
  return PhasePoint{std::sqrt(2.0) * z.imag(), std::sqrt(2.0) * z.real()};
}

FockState::FockState(FockDim d, Vector amplitudes) : dim(d), amp(std::move(amplitudes)) {
  if (amp.size() != d.index()) {
    throw Error(ErrorCode::InvalidArgument, "FockState: amplitude length does not match dimension");
  }
}

FockOperator::FockOperator(FockDim dim) : dim_(dim), mat_(Matrix::Zero(dim.index(), dim.index())) {}

FockOperator::FockOperator(FockDim dim, Matrix mat) : dim_(dim), mat_(std::move(mat)) {
  if (mat_.rows() != dim.index() || mat_.cols() != dim.index()) {
    throw Error(ErrorCode::InvalidArgument, "FockOperator: matrix shape does not match dimension");
  }
}

FockOperator FockOperator::identity(FockDim dim) {
  return FockOperator(dim, Matrix::Identity(dim.index(), dim.index()));
}

FockOperator FockOperator::zero(FockDim dim) { return FockOperator(dim); }

FockOperator FockOperator::outer(const FockState& ket, const FockState& bra) {
  if (!(ket.dim == bra.dim)) {
    throw Error(ErrorCode::InvalidArgument, "outer: dimension mismatch");
  }
  return FockOperator(ket.dim, ket.amp * bra.amp.adjoint());
}

FockOperator FockOperator::diagonal(const RealVector& diag) {
  FockDim dim(static_cast<int>(diag.size()));
  Matrix m = Matrix::Zero(dim.index(), dim.index());
  m.diagonal() = diag.cast<Complex>();
  return FockOperator(dim, std::move(m));
}

FockOperator FockOperator::adjoint() const { return FockOperator(dim_, mat_.adjoint()); }

double FockOperator::hermiticity_defect() const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

double FockOperator::idempotency_defect() const {
  return (mat_ * mat_ - mat_).cwiseAbs().maxCoeff();
}

double FockOperator::unitarity_defect() const {
  return (mat_.adjoint() * mat_ - Matrix::Identity(mat_.rows(), mat_.cols())).cwiseAbs().maxCoeff();
}

bool FockOperator::is_projector(double tol) const {
  return hermiticity_defect() <= tol && idempotency_defect() <= tol;
}

FockOperator& FockOperator::operator+=(const FockOperator& rhs) {
  if (!(dim_ == rhs.dim_)) throw Error(ErrorCode::InvalidArgument, "operator+: dimension mismatch");
  mat_ += rhs.mat_;
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& rhs) {
  if (!(dim_ == rhs.dim_)) throw Error(ErrorCode::InvalidArgument, "operator-: dimension mismatch");
  mat_ -= rhs.mat_;
  return *this;
}

FockOperator& FockOperator::operator*=(Complex s) {
  mat_ *= s;
  return *this;
}

FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs) {
  if (!(lhs.dim_ == rhs.dim_)) throw Error(ErrorCode::InvalidArgument, "operator*: dimension mismatch");
  return FockOperator(lhs.dim_, lhs.mat_ * rhs.mat_);
}

FockState operator*(const FockOperator& lhs, const FockState& rhs) {
  if (!(lhs.dim_ == rhs.dim)) throw Error(ErrorCode::InvalidArgument, "operator*: dimension mismatch");
  return FockState(rhs.dim, lhs.mat_ * rhs.amp);
}

double max_abs_diff(const FockOperator& a, const FockOperator& b) {
  if (!(a.dim() == b.dim())) throw Error(ErrorCode::InvalidArgument, "max_abs_diff: dimension mismatch");
  return (a.mat() - b.mat()).cwiseAbs().maxCoeff();
}

Complex matrix_element(const FockState& bra, const FockOperator& a, const FockState& ket) {
  return bra.amp.dot(a.mat() * ket.amp);
}

}  // namespace fockproj
