#include "fockproj/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fockproj/error.hpp"
#include "fockproj/fock_core.hpp"
#include "fockproj/parallel.hpp"
#include "fockproj/projector.hpp"
#include "fockproj/special.hpp"

namespace fockproj {

namespace {

constexpr double kHermitianTol = 1e-10;

void require_hermitian(const FockOperator& a, const char* who) {
  if (!a.is_hermitian(kHermitianTol)) {
    throw Error(ErrorCode::NotHermitian, std::string(who) + ": operator is not Hermitian");
  }
}

// Upper diagonals of A with the (-1)^n sign folded in. Only diagonals that
// carry a non-zero entry are kept, so diagonal operators cost O(d) per point.
class WignerKernel {
 public:
  explicit WignerKernel(const FockOperator& a) {
    const int d = a.dim().value();
    for (int k = 0; k < d; ++k) {
      std::vector<Complex> w(d - k);
      bool any = false;
      for (int n = 0; n + k < d; ++n) {
        w[n] = (n % 2 == 0 ? 1.0 : -1.0) * a(n, n + k);
        any = any || w[n] != Complex(0.0, 0.0);
      }
      if (any) {
        // trailing zeros do not contribute; trim to shorten the recurrence
        auto last = std::find_if(w.rbegin(), w.rend(), [](Complex c) { return c != Complex(0.0, 0.0); });
        w.erase(last.base(), w.end());
        diagonals_.push_back({k, std::move(w)});
      }
    }
  }

  double operator()(PhasePoint x) const {
    const double r2 = 2.0 * (x.p * x.p + x.q * x.q);
    const double phi = std::atan2(x.p, x.q);
    double acc = 0.0;
    for (const auto& [k, w] : diagonals_) {
      const Complex s = special::laguerre_weighted_sum(k, r2, w);
      acc += (k == 0) ? s.real() : 2.0 * (s * std::polar(1.0, k * phi)).real();
    }
    return acc / std::numbers::pi;
  }

 private:
  struct Diagonal {
    int k;
    std::vector<Complex> weights;
  };
  std::vector<Diagonal> diagonals_;
};

void require_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw Error(ErrorCode::InvalidArgument, std::string(name) + " axis is empty");
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, std::string(name) + " axis must be strictly increasing");
    }
  }
}

template <class F>
PhaseGrid fill_grid(const std::vector<double>& p_axis, const std::vector<double>& q_axis, unsigned threads,
                    F&& cell) {
  require_axis(p_axis, "p");
  require_axis(q_axis, "q");
  PhaseGrid grid{p_axis, q_axis, Eigen::MatrixXd(p_axis.size(), q_axis.size())};
  parallel_for(
      p_axis.size(),
      [&](std::size_t i) {
        for (std::size_t j = 0; j < q_axis.size(); ++j) {
          grid.values(i, j) = cell(PhasePoint{p_axis[i], q_axis[j]});
        }
      },
      threads);
  return grid;
}

std::vector<double> trapezoid_weights(const std::vector<double>& axis) {
  std::vector<double> w(axis.size(), 0.0);
  for (std::size_t i = 1; i < axis.size(); ++i) {
    const double h = 0.5 * (axis[i] - axis[i - 1]);
    w[i - 1] += h;
    w[i] += h;
  }
  return w;
}

}  // namespace

std::vector<double> uniform_axis(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) {
    throw Error(ErrorCode::InvalidArgument, "uniform_axis: need hi > lo and at least 2 points");
  }
  std::vector<double> axis(points);
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) axis[i] = lo + step * i;
  axis.back() = hi;
  return axis;
}

double wigner_point(const FockOperator& a, PhasePoint x) {
  require_hermitian(a, "wigner_point");
  return WignerKernel(a)(x);
}

double wigner_series_circular(int N, double r2) {
  if (!(r2 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "wigner_series_circular: r2 must be >= 0");
  return special::alternating_laguerre_sum(N, r2) / std::numbers::pi;
}

PhaseGrid wigner_grid(const FockOperator& a, const std::vector<double>& p_axis,
                      const std::vector<double>& q_axis, unsigned threads) {
  require_hermitian(a, "wigner_grid");
  const WignerKernel kernel(a);
  return fill_grid(p_axis, q_axis, threads, kernel);
}

double husimi(const FockOperator& a, ComplexLabel z) {
  require_hermitian(a, "husimi");
  const FockState coh = coherent_state(z, a.dim());
  return matrix_element(coh, a, coh).real();
}

PhaseGrid husimi_grid(const FockOperator& a, const std::vector<double>& p_axis,
                      const std::vector<double>& q_axis, unsigned threads) {
  require_hermitian(a, "husimi_grid");
  return fill_grid(p_axis, q_axis, threads, [&a](PhasePoint x) {
    const FockState coh = coherent_state(ComplexLabel::from_point(x), a.dim());
    return matrix_element(coh, a, coh).real();
  });
}

void validate_density(const FockOperator& rho) {
  if (!rho.is_hermitian(1e-10)) throw Error(ErrorCode::InvalidDensity, "density operator is not Hermitian");
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
    throw Error(ErrorCode::InvalidDensity, "density operator trace " + std::to_string(tr.real()) + " != 1");
  }
  const auto eig = eigh(rho);
  if (eig.values.minCoeff() < -1e-10) {
    throw Error(ErrorCode::InvalidDensity, "density operator has a negative eigenvalue");
  }
}

Probability region_probability(const FockOperator& rho, const FockOperator& e) {
  validate_density(rho);
  if (!e.is_projector(1e-10)) throw Error(ErrorCode::NotAProjector, "region_probability: E is not a projector");
  const double raw = (e.mat().cwiseProduct(rho.mat().transpose())).sum().real();
  return Probability{std::clamp(raw, 0.0, 1.0), raw};
}

void validate(const CoherentMixture& mix) {
  if (mix.terms.empty()) throw Error(ErrorCode::InvalidSpec, "coherent mixture is empty");
  double total = 0.0;
  for (const auto& t : mix.terms) {
    if (!(t.weight > 0.0)) throw Error(ErrorCode::InvalidSpec, "coherent mixture weights must be positive");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidSpec, "coherent mixture weights must sum to 1");
}

PFunctionProbability pfunction_probability(const CoherentMixture& mix, int N) {
  validate(mix);
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "pfunction_probability: N must be >= 0");
  const FockDim dim(N + 1);
  const FockOperator e = exact_projector(N, dim);
  PFunctionProbability out{0.0, 0.0};
  for (const auto& t : mix.terms) {
    out.exact += t.weight * husimi(e, t.label);
    if (t.label.norm2() < N) out.cutoff += t.weight;
  }
  return out;
}

double integrate(const PhaseGrid& grid) {
  const auto wp = trapezoid_weights(grid.p_axis);
  const auto wq = trapezoid_weights(grid.q_axis);
  double acc = 0.0;
  for (std::size_t i = 0; i < wp.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < wq.size(); ++j) row += wq[j] * grid.values(i, j);
    acc += wp[i] * row;
  }
  return acc;
}

double integrate_product(const PhaseGrid& a, const PhaseGrid& b) {
  if (a.p_axis != b.p_axis || a.q_axis != b.q_axis) {
    throw Error(ErrorCode::InvalidArgument, "integrate_product: grids must share axes");
  }
  PhaseGrid prod{a.p_axis, a.q_axis, a.values.cwiseProduct(b.values)};
  return integrate(prod);
}

}  // namespace fockproj
