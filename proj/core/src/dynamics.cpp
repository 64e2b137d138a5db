#include "fockproj/dynamics.hpp"

#include <cmath>

#include "fockproj/error.hpp"

namespace fockproj {

FockOperator evolution_operator(double t, FockDim dim) { return rotate(t, dim); }

Quadratures heisenberg_quadratures(double t, FockDim dim) {
  const auto [q, p] = quadratures(dim);
  const double c = std::cos(t);
  const double s = std::sin(t);
  return Quadratures{q * c + p * s, q * (-s) + p * c};
}

PhasePoint classical_flow(PhasePoint x0, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return PhasePoint{-x0.q * s + x0.p * c, x0.q * c + x0.p * s};
}

Trajectory classical_trajectory(PhasePoint x0, const std::vector<double>& times) {
  Trajectory traj{x0, times, {}};
  traj.points.reserve(times.size());
  for (double t : times) traj.points.push_back(classical_flow(x0, t));
  return traj;
}

FockOperator heisenberg(const FockOperator& a, double t) {
  // (e^{iHt} A e^{-iHt})_{mn} = e^{i t (m - n)} A_{mn}
  Matrix out = a.mat();
  const int d = a.dim().value();
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      if (m != n) out(m, n) *= std::polar(1.0, t * (m - n));
    }
  }
  return FockOperator(a.dim(), std::move(out));
}

FockOperator evolve_projector(const FockOperator& e, double t) {
  if (!e.is_projector(1e-10)) {
    throw Error(ErrorCode::NotAProjector, "evolve_projector: operator is not a projector");
  }
  return heisenberg(e, t);
}

FockOperator build_hamiltonian(const PotentialSpec& spec, FockDim dim) {
  validate(spec);
  const auto [q, p] = quadratures(dim);
  const auto q_eig = eigh(q);
  RealVector u(dim.index());
  for (int i = 0; i < dim.value(); ++i) u(i) = evaluate(spec, q_eig.values(i));
  const Matrix& v = q_eig.vectors.mat();
  Matrix potential = v * u.cast<Complex>().asDiagonal() * v.adjoint();
  Matrix kinetic = 0.5 * (p.mat() * p.mat());
  Matrix k = kinetic + potential;
  k = 0.5 * (k + k.adjoint()).eval();
  return FockOperator(dim, std::move(k));
}

}  // namespace fockproj
