#pragma once

#include "polytri/color_vector.hpp"

#include <utility>
#include <vector>

namespace polytri {

/// Saddle data at mean occupancy rho = n/k.  The only module that rounds:
/// everything here is binary64.
struct SaddleSolution {
    double rho = 0.0;
    double x = 0.0;         // positive saddle point, drift(a, x) = rho
    double entropy = 0.0;   // nats per box
    double variance = 0.0;  // x^2 * dispersion(a, x)
};

/// Delta p_a(x) = x p'(x) / p(x); strictly increasing from 0 to m on (0, inf)
/// for nonnegative a with a_0, a_m > 0.
double drift(const ColorVector& colors, double x);

/// delta p_a(x) = p''/p - (p'/p)^2 + p'/(x p); positive for non-degenerate a.
double dispersion(const ColorVector& colors, double x);

/// Unique positive root of sum_i (i - rho) a_i t^i, to relative tolerance
/// 1e-12.  Requires nonnegative aperiodic a with a_0 > 0, a_m > 0 and
/// 0 < rho < m.
double saddle_point(const ColorVector& colors, double rho);

/// Entropy density h(rho) = ln p_a(x(rho)) - rho ln x(rho); the endpoints
/// rho = 0 and rho = m take the limit values ln a_0 and ln a_m.
double entropy(const ColorVector& colors, double rho);

SaddleSolution solve_saddle(const ColorVector& colors, double rho);

/// Closed form for m = 1:
/// (1-rho) ln a0 + rho ln a1 - rho ln rho - (1-rho) ln(1-rho).
double entropy_closed_m1(double a0, double a1, double rho);

/// Saddle-point estimate p^k(x) / (x^{n+1} sqrt(2 pi k delta p(x))) of
/// <k,n>_a, computed in the log domain.
double daniels_good_estimate(const ColorVector& colors, long long k, long long n);
double daniels_good_log_estimate(const ColorVector& colors, long long k, long long n);

/// Central-column estimate for m = 2, a > 0:
/// (a_1 + 2 sqrt(a_0 a_2))^{k+1/2} / (2 (a_0 a_2)^{1/4} sqrt(pi k)).
double central_trinomial_asymp(const ColorVector& colors, long long k);
double central_trinomial_log_asymp(const ColorVector& colors, long long k);

/// Uniform rho-grid over [0, m] (samples >= 2 points, endpoints included)
/// with endpoint limit values; ascending rho.
std::vector<std::pair<double, double>> entropy_curve(const ColorVector& colors, int samples);

}  // namespace polytri
