#include "fockproj/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fockproj::special {

namespace {

constexpr double kRescaleAbove = 1e150;
constexpr double kRescaleFactor = 1e-150;
const double kRescaleLog = 150.0 * std::log(10.0);

// P(a, x) by the series e^{-x} x^a / Gamma(a+1) * sum_k x^k / ((a+1)...(a+k)).
double gamma_p_series(int n, double x) {
  const double a = n + 1.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (term < sum * std::numeric_limits<double>::epsilon()) break;
  }
  return std::exp(a * std::log(x) - x - std::lgamma(a + 1.0)) * sum;
}

// Q(n+1, x) = e^{-x} sum_{k=0}^{n} x^k / k!, summed from k = n downward.
// Valid as a stable evaluation when x >= n + 1 (terms shrink as k falls).
double gamma_q_poisson_sum(int n, double x) {
  double term = std::exp(n * std::log(x) - x - std::lgamma(n + 1.0));
  double sum = term;
  for (int k = n; k > 0; --k) {
    term *= k / x;
    sum += term;
    if (term < sum * std::numeric_limits<double>::epsilon()) break;
  }
  return sum;
}

bool use_series(int n, double x) { return x < n + 2.0; }

}  // namespace

double gamma_p_int(int n, double x) {
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (use_series(n, x)) return gamma_p_series(n, x);
  return 1.0 - gamma_q_poisson_sum(n, x);
}

double gamma_q_int(int n, double x) {
  if (x <= 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (use_series(n, x)) return 1.0 - gamma_p_series(n, x);
  return gamma_q_poisson_sum(n, x);
}

std::vector<double> gamma_p_int_sequence(int count, double x) {
  std::vector<double> out(count > 0 ? count : 0);
  for (int n = 0; n < count; ++n) out[n] = gamma_p_int(n, x);
  return out;
}

double poisson_cdf(int n, double mean) {
  if (n < 0) return 0.0;
  return gamma_q_int(n, mean);
}

std::complex<double> laguerre_weighted_sum(int k, double x,
                                           std::span<const std::complex<double>> weights) {
  const int count = static_cast<int>(weights.size());
  if (count == 0) return {0.0, 0.0};
  if (x == 0.0) {
    if (k > 0) return {0.0, 0.0};
    // f_n^{(0)}(0) = L_n(0) = 1
    std::complex<double> acc{0.0, 0.0};
    for (const auto& w : weights) acc += w;
    return acc;
  }

  double log_scale = 0.5 * k * std::log(x) - 0.5 * x - 0.5 * std::lgamma(k + 1.0);
  double g_prev = 1.0;
  std::complex<double> acc = weights[0] * g_prev;
  if (count == 1) return acc * std::exp(log_scale);

  double g_cur = (1.0 + k - x) / std::sqrt(1.0 + k);
  acc += weights[1] * g_cur;
  for (int n = 1; n + 1 < count; ++n) {
    const double g_next = ((2.0 * n + 1.0 + k - x) * g_cur - std::sqrt(double(n) * (n + k)) * g_prev) /
                          std::sqrt((n + 1.0) * (n + 1.0 + k));
    g_prev = g_cur;
    g_cur = g_next;
    acc += weights[n + 1] * g_cur;
    if (std::abs(g_cur) > kRescaleAbove) {
      g_prev *= kRescaleFactor;
      g_cur *= kRescaleFactor;
      acc *= kRescaleFactor;
      log_scale += kRescaleLog;
    }
  }
  return acc * std::exp(log_scale);
}

std::vector<double> laguerre_functions(int k, double x, int count) {
  std::vector<double> out(count > 0 ? count : 0);
  if (count <= 0) return out;
  if (x == 0.0) {
    std::fill(out.begin(), out.end(), k == 0 ? 1.0 : 0.0);
    return out;
  }
  double log_scale = 0.5 * k * std::log(x) - 0.5 * x - 0.5 * std::lgamma(k + 1.0);
  double g_prev = 1.0;
  out[0] = std::exp(log_scale);
  if (count == 1) return out;
  double g_cur = (1.0 + k - x) / std::sqrt(1.0 + k);
  out[1] = g_cur * std::exp(log_scale);
  for (int n = 1; n + 1 < count; ++n) {
    const double g_next = ((2.0 * n + 1.0 + k - x) * g_cur - std::sqrt(double(n) * (n + k)) * g_prev) /
                          std::sqrt((n + 1.0) * (n + 1.0 + k));
    g_prev = g_cur;
    g_cur = g_next;
    if (std::abs(g_cur) > kRescaleAbove) {
      g_prev *= kRescaleFactor;
      g_cur *= kRescaleFactor;
      log_scale += kRescaleLog;
    }
    out[n + 1] = g_cur * std::exp(log_scale);
  }
  return out;
}

double alternating_laguerre_sum(int N, double x) {
  if (N < 0) return 0.0;
  // L_0 = 1, L_1 = 1 - x, (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}
  double log_scale = 0.0;
  double l_prev = 1.0;
  double acc = l_prev;
  if (N >= 1) {
    double l_cur = 1.0 - x;
    acc -= l_cur;
    for (int n = 1; n < N; ++n) {
      const double l_next = ((2.0 * n + 1.0 - x) * l_cur - n * l_prev) / (n + 1.0);
      l_prev = l_cur;
      l_cur = l_next;
      acc += ((n + 1) % 2 == 0 ? 1.0 : -1.0) * l_cur;
      if (std::abs(l_cur) > kRescaleAbove) {
        l_prev *= kRescaleFactor;
        l_cur *= kRescaleFactor;
        acc *= kRescaleFactor;
        log_scale += kRescaleLog;
      }
    }
  }
  return acc * std::exp(log_scale - 0.5 * x);
}

}  // namespace fockproj::special
