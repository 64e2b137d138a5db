#pragma once

#include <string>
#include <vector>

#include "fockproj/types.hpp"

namespace fockproj {

struct BranchAlternative {
  FockOperator projector;
  std::string label;
};

/// Alternatives at one time; they must be mutually orthogonal projectors
/// summing to the identity.
struct HistoryStep {
  double time;
  std::vector<BranchAlternative> alternatives;
};

struct HistorySpec {
  FockOperator rho0;
  std::vector<HistoryStep> steps;
};

/// Largest branch count decoherence_functional will materialize (2^12).
inline constexpr std::size_t kMaxBranches = 4096;

/// Checks step structure; throws InvalidSpec / NonIncreasingTimes.
/// With `check_density` also validates rho0 (InvalidDensity).
void validate(const HistorySpec& spec, bool check_density = true);

/// C = P_n(t_n) ... P_1(t_1) with P(t) = e^{iHt} P e^{-iHt}.
FockOperator class_operator(const HistorySpec& spec, const std::vector<std::string>& branch);

struct DecoherenceReport {
  std::vector<std::vector<std::string>> branches;
  Matrix functional;  // D(b, b') = Tr(C_b rho0 C_b'^dagger)
  std::vector<double> probabilities;
  double max_offdiag = 0.0;
  double max_diag = 0.0;
  double tolerance = 0.0;
  bool decoherent = false;
};

/// Decoherent iff max off-diagonal |D| <= tolerance * max diagonal D.
DecoherenceReport decoherence_functional(const HistorySpec& spec, double tolerance = 1e-9,
                                         unsigned threads = 0);

/// {E at classical_flow(center, t_i), 1 - E} at each t_i, labelled "in"/"out".
HistorySpec classical_history_spec(int N, PhasePoint center, const std::vector<double>& times, FockDim dim,
                                   FockOperator rho0);

/// As classical_history_spec, but every step after the first is centred at the
/// flowed point shifted by `offset`. Negative control: the alignment between
/// successive regions is broken.
HistorySpec misaligned_history_spec(int N, PhasePoint center, const std::vector<double>& times,
                                    PhasePoint offset, FockDim dim, FockOperator rho0);

}  // namespace fockproj
