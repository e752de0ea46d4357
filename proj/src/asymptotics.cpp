#include "polytri/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polytri {

namespace {

struct Weights {
    std::vector<double> a;
    int m;
};

Weights as_doubles(const ColorVector& colors) {
    Weights w;
    w.m = colors.degree();
    w.a.reserve(static_cast<size_t>(w.m) + 1);
    for (int i = 0; i <= w.m; ++i) w.a.push_back(to_double(colors[i]));
    return w;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::vector<double> derivative(const std::vector<double>& c) {
    std::vector<double> d;
    if (c.size() <= 1) return {0.0};
    d.reserve(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
    return d;
}

void require_positive_x(double x) {
    if (!(x > 0)) throw std::domain_error("saddle machinery: x must be positive");
}

void require_saddle_preconditions(const ColorVector& colors) {
    if (!colors.nonnegative()) throw std::domain_error("saddle machinery: negative weight");
    if (colors.degree() < 1) throw std::domain_error("saddle machinery: degree m >= 1 required");
    if (colors[0] == 0 || colors[colors.degree()] == 0)
        throw std::domain_error(
            "saddle machinery: a_0 > 0 and a_m > 0 required (shift the vector first)");
    if (!colors.aperiodic())
        throw std::domain_error("saddle machinery: periodic weight vector rejected");
}

}  // namespace

double drift(const ColorVector& colors, double x) {
    require_positive_x(x);
    const Weights w = as_doubles(colors);
    const double p = horner(w.a, x);
    if (p == 0) throw std::domain_error("drift: p_a(x) vanishes");
    return x * horner(derivative(w.a), x) / p;
}

double dispersion(const ColorVector& colors, double x) {
    require_positive_x(x);
    const Weights w = as_doubles(colors);
    const double p = horner(w.a, x);
    if (p == 0) throw std::domain_error("dispersion: p_a(x) vanishes");
    const std::vector<double> d1 = derivative(w.a);
    const double p1 = horner(d1, x);
    const double p2 = horner(derivative(d1), x);
    return p2 / p - (p1 / p) * (p1 / p) + p1 / (x * p);
}

double saddle_point(const ColorVector& colors, double rho) {
    require_saddle_preconditions(colors);
    const Weights w = as_doubles(colors);
    const int m = w.m;
    if (!(rho > 0) || !(rho < m))
        throw std::domain_error("saddle point: rho must lie strictly inside (0, m)");

    // g(t) = sum (i - rho) a_i t^i has one sign change over t > 0:
    // g(0+) = -rho a_0 < 0 and the t^m term dominates eventually.
    std::vector<double> g(w.a.size());
    for (size_t i = 0; i < w.a.size(); ++i) g[i] = (static_cast<double>(i) - rho) * w.a[i];
    const std::vector<double> g1 = derivative(g);

    double lo = 0.0;
    double hi = 1.0;
    while (horner(g, hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw std::runtime_error("saddle point: bracket growth failed");
    }

    // Newton from the bracket midpoint, falling back to bisection whenever a
    // step leaves the bracket; 1e-12 relative tolerance on the interval.
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double value = horner(g, x);
        if (value > 0.0) hi = x;
        else if (value < 0.0) lo = x;
        else return x;
        const double slope = horner(g1, x);
        double next = slope != 0.0 ? x - value / slope : lo;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        // Interval tolerance well below the 1e-12 relative contract so the
        // scaled residual |g(x)| / p_a(x) lands under 1e-12 too.
        if (hi - lo <= 1e-14 * std::max(1.0, std::abs(x))) return 0.5 * (lo + hi);
        x = next;
    }
    return 0.5 * (lo + hi);
}

double entropy(const ColorVector& colors, double rho) {
    require_saddle_preconditions(colors);
    const int m = colors.degree();
    if (!(rho >= 0) || !(rho <= m)) throw std::domain_error("entropy: rho outside [0, m]");
    // Continuous extension at the edges of the occupancy range.
    if (rho == 0) return std::log(to_double(colors[0]));
    if (rho == m) return std::log(to_double(colors[m]));
    const double x = saddle_point(colors, rho);
    const Weights w = as_doubles(colors);
    return std::log(horner(w.a, x)) - rho * std::log(x);
}

SaddleSolution solve_saddle(const ColorVector& colors, double rho) {
    const double x = saddle_point(colors, rho);
    const Weights w = as_doubles(colors);
    SaddleSolution out;
    out.rho = rho;
    out.x = x;
    out.entropy = std::log(horner(w.a, x)) - rho * std::log(x);
    out.variance = x * x * dispersion(colors, x);
    return out;
}

double entropy_closed_m1(double a0, double a1, double rho) {
    if (!(a0 > 0) || !(a1 > 0)) throw std::domain_error("entropy closed form: weights must be positive");
    if (!(rho > 0) || !(rho < 1)) throw std::domain_error("entropy closed form: rho outside (0, 1)");
    return (1 - rho) * std::log(a0) + rho * std::log(a1) - rho * std::log(rho) -
           (1 - rho) * std::log(1 - rho);
}

double daniels_good_log_estimate(const ColorVector& colors, long long k, long long n) {
    if (k <= 0) throw std::invalid_argument("daniels-good: k must be positive");
    const double rho = static_cast<double>(n) / static_cast<double>(k);
    const double x = saddle_point(colors, rho);
    const Weights w = as_doubles(colors);
    const double disp = dispersion(colors, x);
    return static_cast<double>(k) * std::log(horner(w.a, x)) -
           static_cast<double>(n + 1) * std::log(x) -
           0.5 * std::log(2.0 * std::numbers::pi * static_cast<double>(k) * disp);
}

double daniels_good_estimate(const ColorVector& colors, long long k, long long n) {
    return std::exp(daniels_good_log_estimate(colors, k, n));
}

double central_trinomial_log_asymp(const ColorVector& colors, long long k) {
    if (colors.degree() != 2) throw std::domain_error("central trinomial: requires m = 2");
    for (int i = 0; i <= 2; ++i)
        if (colors[i] <= 0) throw std::domain_error("central trinomial: weights must be positive");
    if (k <= 0) throw std::invalid_argument("central trinomial: k must be positive");
    const double a0 = to_double(colors[0]);
    const double a1 = to_double(colors[1]);
    const double a2 = to_double(colors[2]);
    const double root = std::sqrt(a0 * a2);
    return (static_cast<double>(k) + 0.5) * std::log(a1 + 2.0 * root) - std::log(2.0) -
           0.25 * std::log(a0 * a2) -
           0.5 * std::log(std::numbers::pi * static_cast<double>(k));
}

double central_trinomial_asymp(const ColorVector& colors, long long k) {
    return std::exp(central_trinomial_log_asymp(colors, k));
}

std::vector<std::pair<double, double>> entropy_curve(const ColorVector& colors, int samples) {
    require_saddle_preconditions(colors);
    if (samples < 2) throw std::invalid_argument("entropy curve: need at least two samples");
    const int m = colors.degree();
    std::vector<std::pair<double, double>> curve;
    curve.reserve(static_cast<size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double rho = static_cast<double>(m) * j / (samples - 1);
        curve.emplace_back(rho, entropy(colors, j == samples - 1 ? static_cast<double>(m) : rho));
    }
    return curve;
}

}  // namespace polytri
