#pragma once

#include <utility>

#include "fockproj/types.hpp"

namespace fockproj {

FockState number_state(int n, FockDim dim);

/// Truncated coherent state: amp_n = z^n / sqrt(n!) e^{-|z|^2/2} for n < d.
/// Amplitudes are formed in log space so large |z| does not underflow early.
FockState coherent_state(ComplexLabel z, FockDim dim);

/// 1 - sum_{n<d} |<n|z>|^2, i.e. the Poisson tail sum_{n>=d} e^{-|z|^2} |z|^{2n}/n!.
double coherent_norm_deficit(ComplexLabel z, FockDim dim);

struct LadderOps {
  FockOperator annihilation;
  FockOperator creation;
};

struct Quadratures {
  FockOperator q;
  FockOperator p;
};

LadderOps ladder_ops(FockDim dim);

/// q = (a + a^dagger)/sqrt(2), p = (a - a^dagger)/(i sqrt(2)).
Quadratures quadratures(FockDim dim);

FockOperator number_operator(FockDim dim);

/// Parity diag((-1)^n).
FockOperator parity(FockDim dim);

struct EigenDecomposition {
  RealVector values;  // ascending
  FockOperator vectors;  // columns are eigenvectors
};

/// Hermitian eigendecomposition. Throws NotHermitian when max |A - A^dagger|
/// exceeds `tol`.
EigenDecomposition eigh(const FockOperator& a, double tol = 1e-10);

/// exp(i G) for Hermitian G, formed spectrally so the result is unitary to
/// rounding.
FockOperator expi_hermitian(const FockOperator& generator);

/// U(p, q) = exp(i p q_hat - i q p_hat); maps |0> to |z> with z = (q + i p)/sqrt(2).
FockOperator displacement(PhasePoint x, FockDim dim);

/// exp((xi^* a^2 - xi a^dagger^2) / 2).
FockOperator squeeze(Complex xi, FockDim dim);

/// exp(-i theta a^dagger a).
FockOperator rotate(double theta, FockDim dim);

/// Smallest working dimension accepted for a rank N+1 projector displaced to
/// label z: N + max(4|z|^2, 25).
int minimum_dimension(int N, ComplexLabel z);

/// Throws TruncationBound if `dim` is below minimum_dimension(N, z).
void check_truncation(int N, ComplexLabel z, FockDim dim);

}  // namespace fockproj
