#include "polytri/genfun.hpp"

#include "polytri/expansion.hpp"
#include "polytri/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polytri {

namespace {

const ColorVector& colorless_trinomial() {
    static const ColorVector a{Rational(1), Rational(1), Rational(1)};
    return a;
}

ColorVector colorless(int m) {
    return ColorVector(std::vector<Rational>(static_cast<size_t>(m) + 1, Rational(1)));
}

long long ceil_div(long long n, long long m) { return (n + m - 1) / m; }

}  // namespace

DensePolynomial p_polynomial(const ColorVector& colors, int n) {
    if (n < 0) return {};
    const int m = colors.degree();
    if (m < 1) throw std::invalid_argument("p_polynomial: requires degree m >= 1");
    const DensePolynomial u = DensePolynomial::monomial(1);
    const DensePolynomial one_minus_a0u =
        DensePolynomial(std::vector<Rational>{Rational(1), -colors[0]});

    std::vector<DensePolynomial> p;
    p.reserve(static_cast<size_t>(n) + 1);
    p.emplace_back(Rational(1));
    for (int j = 1; j <= n; ++j) {
        DensePolynomial acc;
        DensePolynomial weight{Rational(1)};  // (1 - a_0 u)^{i-1}
        for (int i = 1; i <= m; ++i) {
            if (j - i >= 0 && colors[i] != 0) acc = acc + p[static_cast<size_t>(j - i)] * weight * colors[i];
            weight = weight * one_minus_a0u;
        }
        p.push_back(u * acc);
    }
    return p.back();
}

DensePolynomial p_polynomial_direct(const ColorVector& colors, int n) {
    if (n < 0) return {};
    if (n == 0) return DensePolynomial{Rational(1)};
    const int m = colors.degree();
    if (m < 1) throw std::invalid_argument("p_polynomial_direct: requires degree m >= 1");
    const DensePolynomial one_minus_a0u =
        DensePolynomial(std::vector<Rational>{Rational(1), -colors[0]});
    DensePolynomial acc;
    for (long long i = ceil_div(n, m); i <= n; ++i) {
        const Rational a = alpha(colors, n, i);
        if (a == 0) continue;
        acc = acc + DensePolynomial::monomial(static_cast<int>(i), a) *
                        one_minus_a0u.pow(static_cast<unsigned>(n - i));
    }
    return acc;
}

DensePolynomial r_polynomial(const ColorVector& colors, int n) {
    if (n < 0) return {};
    const int m = colors.degree();
    if (m < 1) throw std::invalid_argument("r_polynomial: requires degree m >= 1");
    std::vector<DensePolynomial> r;
    r.reserve(static_cast<size_t>(n) + 1);
    r.emplace_back(Rational(1));
    for (int j = 1; j <= n; ++j) {
        DensePolynomial slope;
        for (int i = 1; i <= m && i <= j; ++i)
            if (colors[i] != 0) slope = slope + r[static_cast<size_t>(j - i)] * colors[i];
        // R_j(0) = <0, j> = 0 fixes the integration constant.
        r.push_back(slope.antiderivative());
    }
    return r.back();
}

DensePolynomial r_polynomial_direct(const ColorVector& colors, int n) {
    if (n < 0) return {};
    if (n == 0) return DensePolynomial{Rational(1)};
    const int m = colors.degree();
    if (m < 1) throw std::invalid_argument("r_polynomial_direct: requires degree m >= 1");
    DensePolynomial acc;
    for (long long i = ceil_div(n, m); i <= n; ++i) {
        const Rational a = alpha(colors, n, i);
        if (a == 0) continue;
        acc = acc + DensePolynomial::monomial(static_cast<int>(i),
                                              a / Rational(factorial(static_cast<unsigned>(i))));
    }
    return acc;
}

Rational column_ogf_eval(const ColorVector& colors, int n, const Rational& u) {
    const Rational base = 1 - colors[0] * u;
    if (base == 0) throw std::domain_error("column generating function: pole at u = 1/a_0");
    Rational den = 1;
    for (int e = 0; e <= n; ++e) den *= base;
    return p_polynomial(colors, n)(u) / den;
}

DensePolynomial pm2_closed_form(int n) {
    if (n < 0) return {};
    // With s = sqrt(u(4-3u)), the solved recurrence gives
    //   P_n = [(u+s)^{n+1} - (u-s)^{n+1}] / (2^{n+1} s)
    //       = 2^{-n} sum_{j odd} C(n+1, j) u^{n+1-j} (u(4-3u))^{(j-1)/2}.
    const DensePolynomial radicand(std::vector<Rational>{Rational(0), Rational(4), Rational(-3)});
    DensePolynomial acc;
    for (int j = 1; j <= n + 1; j += 2) {
        acc = acc + DensePolynomial::monomial(n + 1 - j, Rational(binomial(n + 1, j))) *
                        radicand.pow(static_cast<unsigned>((j - 1) / 2));
    }
    Rational scale(1);
    for (int e = 0; e < n; ++e) scale /= 2;
    return acc * scale;
}

Pm2Zeros pm2_zeros(int n) {
    if (n < 0) throw std::invalid_argument("pm2_zeros: n must be nonnegative");
    Pm2Zeros out;
    out.trivial_multiplicity = n == 0 ? 0 : static_cast<int>(ceil_div(n, 2));
    for (int p = 1; p <= n; ++p) {
        if ((n + 1) % 3 == 0 && (p == (n + 1) / 3 || p == 2 * (n + 1) / 3)) continue;
        const double c = std::cos(2.0 * std::numbers::pi * p / (n + 1));
        const double u = 2.0 * (1.0 + c) / (1.0 + 2.0 * c);
        if (std::abs(u) < 1e-9) continue;  // coincides with the trivial zero
        out.nontrivial.push_back(u);
    }
    std::sort(out.nontrivial.begin(), out.nontrivial.end());
    // The index set double-covers each zero through conjugate pairs.
    std::vector<double> unique;
    for (double u : out.nontrivial) {
        if (unique.empty() || std::abs(u - unique.back()) > 1e-7 * std::max(1.0, std::abs(u)))
            unique.push_back(u);
    }
    out.nontrivial = std::move(unique);
    return out;
}

BigInt fibonacci_trinomial(int n) {
    if (n < 1) throw std::invalid_argument("fibonacci_trinomial: n must be >= 1");
    Rational value = p_polynomial(colorless_trinomial(), n - 1)(Rational(1, 2));
    for (int e = 0; e < n - 1; ++e) value *= 2;
    if (denominator(value) != 1) throw std::logic_error("fibonacci_trinomial: non-integer value");
    return numerator(value);
}

FibonacciSeries fibonacci_series(int n, int k_last) {
    if (n < 1) throw std::invalid_argument("fibonacci_series: n must be >= 1");
    const long long column = n - 1;
    FibonacciSeries out;
    out.k_last = k_last;
    Rational power(1, 2);  // 2^{-(k+1)} at k = 0
    Rational partial = 0;
    for (int k = 0; k <= k_last; ++k) {
        partial += poly_coeff(colorless_trinomial(), k, column) * power;
        power /= 2;
    }
    out.partial = partial;
    // For k >= 3(n-1) the term ratio is at most (3/2)/2, so the tail after
    // k_last is bounded by 3 * t_{k_last}.
    if (k_last < 3 * column || k_last < 1) {
        out.tail_bound = Rational(-1);  // bound not valid yet
        return out;
    }
    const Rational last_term = poly_coeff(colorless_trinomial(), k_last, column) * (power * 2);
    out.tail_bound = 3 * last_term;
    return out;
}

double hermite_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval: n must be nonnegative");
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 2.0 * x;
    for (int i = 1; i < n; ++i) {
        const double next = 2.0 * x * cur - 2.0 * i * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_trinomial_series(int n, double x, double tol) {
    if (n < 0) throw std::invalid_argument("hermite series: n must be nonnegative");
    if (tol <= 0) throw std::invalid_argument("hermite series: tol must be positive");
    constexpr int kTermCap = 20000;
    const long long start = ceil_div(n, 2);

    double sum = 0.0;
    int small_terms = 0;
    double sign = start % 2 == 0 ? 1.0 : -1.0;
    double factor = std::pow(4.0, static_cast<double>(start)) * std::pow(x, 2.0 * start - n);
    double kfact = static_cast<double>(factorial(static_cast<unsigned>(start)));
    for (long long k = start; k < start + kTermCap; ++k) {
        const double term =
            sign * static_cast<double>(poly_coeff(colorless_trinomial(), static_cast<int>(k), n)) *
            factor / kfact;
        sum += term;
        // Terms are not monotone at first; require three consecutive small ones.
        small_terms = std::abs(term) < tol ? small_terms + 1 : 0;
        if (small_terms >= 3) {
            const double prefactor = (n % 2 == 0 ? 1.0 : -1.0) *
                                     static_cast<double>(factorial(static_cast<unsigned>(n))) /
                                     std::pow(2.0, n) * std::exp(4.0 * x * x);
            return prefactor * sum;
        }
        sign = -sign;
        factor *= 4.0 * x * x;
        kfact *= static_cast<double>(k + 1);
    }
    throw std::runtime_error("hermite series: did not converge within the term cap");
}

std::pair<Rational, Rational> gegenbauer_check(const ColorVector& colors, int k, long long n) {
    if (colors.degree() != 2) throw std::domain_error("gegenbauer check: requires m = 2");
    if (colors[0] != colors[2] || colors[0] <= 0)
        throw std::domain_error("gegenbauer check: requires a_0 = a_2 > 0 to stay rational");
    if (k < 0 || n < 0) throw std::invalid_argument("gegenbauer check: bad indices");

    // With a_0 = a_2: sqrt(a_0 a_2) = a_0, the argument -a_1/(2a_0) is
    // rational, and the prefactor a_0^{k-n/2} a_2^{n/2} collapses to a_0^k.
    const Rational lambda = Rational(-k);
    const Rational x = -colors[1] / (2 * colors[0]);
    Rational prev = 1;            // C_0
    Rational cur = 2 * lambda * x;  // C_1
    Rational c_n;
    if (n == 0) c_n = prev;
    else if (n == 1) c_n = cur;
    else {
        for (long long j = 1; j < n; ++j) {
            // (j+1) C_{j+1} = 2(j+lambda) x C_j - (j + 2 lambda - 1) C_{j-1}
            Rational next = (2 * (j + lambda) * x * cur - (j + 2 * lambda - 1) * prev) / (j + 1);
            prev = std::move(cur);
            cur = std::move(next);
        }
        c_n = cur;
    }
    Rational prefactor = 1;
    for (int e = 0; e < k; ++e) prefactor *= colors[0];
    return {poly_coeff(colors, k, n), prefactor * c_n};
}

}  // namespace polytri
