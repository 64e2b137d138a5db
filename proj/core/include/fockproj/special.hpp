#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fockproj::special {

/// Regularized lower incomplete gamma P(n + 1, x) for integer n >= 0.
///
/// Below x = n + 2 the power series is summed; above it the complement
/// Q(n + 1, x) is the finite Poisson sum e^{-x} sum_{k<=n} x^k / k!, accumulated
/// downward from k = n so every term is smaller than the previous one.
double gamma_p_int(int n, double x);

/// Regularized upper incomplete gamma Q(n + 1, x) = 1 - P(n + 1, x).
double gamma_q_int(int n, double x);

/// P(n+1, x) for n = 0 .. count-1.
std::vector<double> gamma_p_int_sequence(int count, double x);

/// Poisson cumulative distribution sum_{k<=n} e^{-mean} mean^k / k!.
double poisson_cdf(int n, double mean);

/// Laguerre functions in the normalization used by displaced-parity matrix
/// elements:
///
///   f_n^{(k)}(x) = sqrt(n! / (n+k)!) x^{k/2} e^{-x/2} L_n^{(k)}(x),
///
/// for n = 0 .. count-1, via the three-term recurrence with running rescaling
/// so that neither the polynomial nor the exponential factor overflows.
std::vector<double> laguerre_functions(int k, double x, int count);

/// sum_n weights[n] f_n^{(k)}(x) over n < weights.size(), without
/// materializing the sequence. Used in the Wigner inner loop.
std::complex<double> laguerre_weighted_sum(int k, double x,
                                           std::span<const std::complex<double>> weights);

/// Ordinary Laguerre polynomial sum
///   sum_{n=0}^{N} (-1)^n L_n(x) e^{-x/2}
/// evaluated by the plain three-term recurrence with scale tracking.
double alternating_laguerre_sum(int N, double x);

}  // namespace fockproj::special
