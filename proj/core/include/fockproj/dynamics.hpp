#pragma once

#include <vector>

#include "fockproj/fock_core.hpp"
#include "fockproj/potential.hpp"
#include "fockproj/types.hpp"

namespace fockproj {

// Oscillator dynamics with H = a^dagger a (the zero-point 1/2 is a global phase
// and is dropped everywhere). Classical flow is a rigid rotation of the plane:
//   q(t) = q cos t + p sin t,  p(t) = -q sin t + p cos t.

/// exp(-i H t), diagonal in the number basis.
FockOperator evolution_operator(double t, FockDim dim);

/// (q cos t + p sin t, -q sin t + p cos t)
Quadratures heisenberg_quadratures(double t, FockDim dim);

PhasePoint classical_flow(PhasePoint x0, double t);

struct Trajectory {
  PhasePoint initial;
  std::vector<double> times;
  std::vector<PhasePoint> points;
};

Trajectory classical_trajectory(PhasePoint x0, const std::vector<double>& times);

/// Heisenberg-picture image e^{iHt} A e^{-iHt} of an arbitrary operator.
FockOperator heisenberg(const FockOperator& a, double t);

/// e^{iHt} E e^{-iHt}. Throws NotAProjector unless E is a projector to 1e-10.
FockOperator evolve_projector(const FockOperator& e, double t);

/// K = p^2/2 + U(q) with U(q_hat) formed spectrally on the eigenbasis of q_hat.
FockOperator build_hamiltonian(const PotentialSpec& spec, FockDim dim);

}  // namespace fockproj
