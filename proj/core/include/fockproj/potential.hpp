#pragma once

#include <variant>
#include <vector>

namespace fockproj {

struct HarmonicPotential {};  // U(q) = q^2 / 2

/// U(q) = sum_k coefficients[k] q^k
struct PolynomialPotential {
  std::vector<double> coefficients;
};

/// Piecewise-linear U(q) through (grid[i], values[i]); linear extrapolation
/// from the end segments outside the grid.
struct TabulatedPotential {
  std::vector<double> grid;
  std::vector<double> values;
};

using PotentialSpec = std::variant<HarmonicPotential, PolynomialPotential, TabulatedPotential>;

/// Throws InvalidSpec for malformed specs and NonConfiningPotential when U
/// does not grow without bound on both sides.
void validate(const PotentialSpec& spec);

double evaluate(const PotentialSpec& spec, double q);

}  // namespace fockproj
