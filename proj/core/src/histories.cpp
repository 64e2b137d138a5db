#include "fockproj/histories.hpp"

#include <algorithm>
#include <cmath>

#include "fockproj/dynamics.hpp"
#include "fockproj/error.hpp"
#include "fockproj/parallel.hpp"
#include "fockproj/phase_space.hpp"
#include "fockproj/projector.hpp"

namespace fockproj {

namespace {

constexpr double kProjectorTol = 1e-10;
constexpr double kCompletenessTol = 1e-10;

std::vector<std::vector<std::size_t>> enumerate_branches(const HistorySpec& spec) {
  std::size_t total = 1;
  for (const auto& step : spec.steps) {
    total *= step.alternatives.size();
    if (total > kMaxBranches) {
      throw Error(ErrorCode::InvalidSpec, "history has more than " + std::to_string(kMaxBranches) + " branches");
    }
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(total);
  std::vector<std::size_t> idx(spec.steps.size(), 0);
  for (std::size_t b = 0; b < total; ++b) {
    out.push_back(idx);
    // odometer, last step varies fastest
    for (std::size_t s = spec.steps.size(); s-- > 0;) {
      if (++idx[s] < spec.steps[s].alternatives.size()) break;
      idx[s] = 0;
    }
  }
  return out;
}

FockOperator class_operator_by_index(const HistorySpec& spec, const std::vector<std::size_t>& branch) {
  const FockDim dim = spec.rho0.dim();
  Matrix c = Matrix::Identity(dim.index(), dim.index());
  for (std::size_t s = 0; s < spec.steps.size(); ++s) {
    const auto& step = spec.steps[s];
    c = heisenberg(step.alternatives[branch[s]].projector, step.time).mat() * c;
  }
  return FockOperator(dim, std::move(c));
}

}  // namespace

void validate(const HistorySpec& spec, bool check_density) {
  if (spec.steps.empty()) throw Error(ErrorCode::InvalidSpec, "history has no steps");
  const FockDim dim = spec.rho0.dim();
  for (std::size_t s = 0; s < spec.steps.size(); ++s) {
    const auto& step = spec.steps[s];
    if (!std::isfinite(step.time)) throw Error(ErrorCode::InvalidSpec, "history step time is not finite");
    if (s > 0 && !(step.time > spec.steps[s - 1].time)) {
      throw Error(ErrorCode::NonIncreasingTimes, "history times must be strictly increasing");
    }
    if (step.alternatives.empty()) throw Error(ErrorCode::InvalidSpec, "history step has no alternatives");
    Matrix sum = Matrix::Zero(dim.index(), dim.index());
    for (std::size_t i = 0; i < step.alternatives.size(); ++i) {
      const auto& alt = step.alternatives[i];
      if (!(alt.projector.dim() == dim)) throw Error(ErrorCode::InvalidSpec, "alternative dimension mismatch");
      if (!alt.projector.is_projector(kProjectorTol)) {
        throw Error(ErrorCode::NotAProjector, "alternative '" + alt.label + "' is not a projector");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (step.alternatives[j].label == alt.label) {
          throw Error(ErrorCode::InvalidSpec, "duplicate alternative label '" + alt.label + "'");
        }
        const double overlap = (alt.projector.mat() * step.alternatives[j].projector.mat()).cwiseAbs().maxCoeff();
        if (overlap > kProjectorTol) {
          throw Error(ErrorCode::InvalidSpec, "alternatives at one time are not mutually orthogonal");
        }
      }
      sum += alt.projector.mat();
    }
    if ((sum - Matrix::Identity(dim.index(), dim.index())).cwiseAbs().maxCoeff() > kCompletenessTol) {
      throw Error(ErrorCode::InvalidSpec, "alternatives at one time do not sum to the identity");
    }
  }
  if (check_density) validate_density(spec.rho0);
}

FockOperator class_operator(const HistorySpec& spec, const std::vector<std::string>& branch) {
  if (branch.size() != spec.steps.size()) {
    throw Error(ErrorCode::InvalidSpec, "class_operator: need one label per step");
  }
  for (std::size_t s = 1; s < spec.steps.size(); ++s) {
    if (!(spec.steps[s].time > spec.steps[s - 1].time)) {
      throw Error(ErrorCode::NonIncreasingTimes, "class_operator: times must be strictly increasing");
    }
  }
  std::vector<std::size_t> idx(branch.size());
  for (std::size_t s = 0; s < branch.size(); ++s) {
    const auto& alts = spec.steps[s].alternatives;
    auto it = std::find_if(alts.begin(), alts.end(), [&](const auto& a) { return a.label == branch[s]; });
    if (it == alts.end()) throw Error(ErrorCode::UnknownLabel, "class_operator: unknown label '" + branch[s] + "'");
    idx[s] = static_cast<std::size_t>(it - alts.begin());
  }
  return class_operator_by_index(spec, idx);
}

DecoherenceReport decoherence_functional(const HistorySpec& spec, double tolerance, unsigned threads) {
  validate(spec);
  const auto branches = enumerate_branches(spec);
  const std::size_t nb = branches.size();

  std::vector<Matrix> cls(nb);
  std::vector<Matrix> weighted(nb);  // C_b rho0
  parallel_for(
      nb,
      [&](std::size_t b) {
        cls[b] = class_operator_by_index(spec, branches[b]).mat();
        weighted[b] = cls[b] * spec.rho0.mat();
      },
      threads);

  DecoherenceReport report;
  report.tolerance = tolerance;
  report.functional = Matrix::Zero(static_cast<Eigen::Index>(nb), static_cast<Eigen::Index>(nb));
  // Tr(X Y^dagger) = sum_ij X_ij conj(Y_ij); each row is independent.
  parallel_for(
      nb,
      [&](std::size_t b) {
        for (std::size_t bp = 0; bp < nb; ++bp) {
          report.functional(b, bp) = (weighted[b].array() * cls[bp].array().conjugate()).sum();
        }
      },
      threads);

  report.branches.reserve(nb);
  for (const auto& idx : branches) {
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < idx.size(); ++s) labels.push_back(spec.steps[s].alternatives[idx[s]].label);
    report.branches.push_back(std::move(labels));
  }
  report.probabilities.resize(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    report.probabilities[b] = report.functional(b, b).real();
    report.max_diag = std::max(report.max_diag, report.probabilities[b]);
    for (std::size_t bp = 0; bp < nb; ++bp) {
      if (bp != b) report.max_offdiag = std::max(report.max_offdiag, std::abs(report.functional(b, bp)));
    }
  }
  report.decoherent = report.max_offdiag <= tolerance * report.max_diag;
  return report;
}

namespace {

HistorySpec flowed_spec(int N, PhasePoint center, const std::vector<double>& times, PhasePoint offset,
                        FockDim dim, FockOperator rho0) {
  if (times.empty()) throw Error(ErrorCode::InvalidSpec, "history needs at least one time");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw Error(ErrorCode::NonIncreasingTimes, "times must be strictly increasing");
  }
  HistorySpec spec{std::move(rho0), {}};
  spec.steps.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    PhasePoint c = classical_flow(center, times[i]);
    if (i > 0) {
      c.p += offset.p;
      c.q += offset.q;
    }
    FockOperator e = displaced_projector(N, c, dim);
    FockOperator ebar = complement(e);
    spec.steps.push_back(HistoryStep{times[i], {{std::move(e), "in"}, {std::move(ebar), "out"}}});
  }
  return spec;
}

}  // namespace

HistorySpec classical_history_spec(int N, PhasePoint center, const std::vector<double>& times, FockDim dim,
                                   FockOperator rho0) {
  return flowed_spec(N, center, times, PhasePoint{}, dim, std::move(rho0));
}

HistorySpec misaligned_history_spec(int N, PhasePoint center, const std::vector<double>& times,
                                    PhasePoint offset, FockDim dim, FockOperator rho0) {
  if (offset.p == 0.0 && offset.q == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "misaligned_history_spec: offset must be non-zero");
  }
  return flowed_spec(N, center, times, offset, dim, std::move(rho0));
}

}  // namespace fockproj
