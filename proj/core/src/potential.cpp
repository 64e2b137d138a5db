#include "fockproj/potential.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "fockproj/error.hpp"

namespace fockproj {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate_polynomial(const PolynomialPotential& poly) {
  const auto& c = poly.coefficients;
  auto last = std::find_if(c.rbegin(), c.rend(), [](double v) { return v != 0.0; });
  if (last == c.rend()) {
    throw Error(ErrorCode::NonConfiningPotential, "polynomial potential is identically zero");
  }
  const auto degree = static_cast<long>(std::distance(last, c.rend())) - 1;
  if (degree < 2 || degree % 2 != 0 || *last <= 0.0) {
    throw Error(ErrorCode::NonConfiningPotential,
                "polynomial potential must have even degree >= 2 with a positive leading coefficient");
  }
}

void validate_tabulated(const TabulatedPotential& tab) {
  const auto& g = tab.grid;
  const auto& v = tab.values;
  if (g.size() != v.size() || g.size() < 3) {
    throw Error(ErrorCode::InvalidSpec, "tabulated potential needs >= 3 points and equal-length arrays");
  }
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!(g[i] > g[i - 1])) throw Error(ErrorCode::InvalidSpec, "tabulated grid must be strictly increasing");
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidSpec, "tabulated values must be finite");
  }
  // Extrapolation is linear from the end segments, so both must climb outward.
  if (!(v.front() > v[1]) || !(v.back() > v[v.size() - 2])) {
    throw Error(ErrorCode::NonConfiningPotential,
                "tabulated potential must increase outward at both ends of the grid");
  }
}

double eval_tabulated(const TabulatedPotential& tab, double q) {
  const auto& g = tab.grid;
  const auto& v = tab.values;
  std::size_t hi;
  if (q <= g.front()) {
    hi = 1;
  } else if (q >= g.back()) {
    hi = g.size() - 1;
  } else {
    hi = static_cast<std::size_t>(std::upper_bound(g.begin(), g.end(), q) - g.begin());
  }
  const std::size_t lo = hi - 1;
  const double w = (q - g[lo]) / (g[hi] - g[lo]);
  return v[lo] + w * (v[hi] - v[lo]);
}

}  // namespace

void validate(const PotentialSpec& spec) {
  std::visit(overloaded{
                 [](const HarmonicPotential&) {},
                 [](const PolynomialPotential& p) { validate_polynomial(p); },
                 [](const TabulatedPotential& t) { validate_tabulated(t); },
             },
             spec);
}

double evaluate(const PotentialSpec& spec, double q) {
  return std::visit(overloaded{
                        [q](const HarmonicPotential&) { return 0.5 * q * q; },
                        [q](const PolynomialPotential& p) {
                          double acc = 0.0;
                          for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
                            acc = acc * q + *it;
                          }
                          return acc;
                        },
                        [q](const TabulatedPotential& t) { return eval_tabulated(t, q); },
                    },
                    spec);
}

}  // namespace fockproj
