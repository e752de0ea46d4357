#pragma once

#include "polytri/color_vector.hpp"
#include "polytri/polynomial.hpp"
#include "polytri/rational.hpp"

#include <utility>
#include <vector>

namespace polytri {

/// Numerator polynomial of the ordinary generating function of column n:
/// sum_k <k,n>_a u^k = P_n(u) / (1 - a_0 u)^{n+1}.  Built from the recurrence
/// P_n = u sum_{i=1}^m a_i (1 - a_0 u)^{i-1} P_{n-i}, P_0 = 1.
DensePolynomial p_polynomial(const ColorVector& colors, int n);

/// Same polynomial via the direct sum
/// P_n = sum_i alpha_{n,i} u^i (1 - a_0 u)^{n-i}; independent cross-check.
DensePolynomial p_polynomial_direct(const ColorVector& colors, int n);

/// Polynomial factor of the exponential column generating function
/// sum_k <k,n>_a u^k / k! = e^{a_0 u} R_n(u).  Built by formal
/// antidifferentiation of R_n' = sum_{i=1}^m a_i R_{n-i} with R_n(0) = 0
/// for n >= 1.
DensePolynomial r_polynomial(const ColorVector& colors, int n);

/// R_n = sum_i alpha_{n,i} u^i / i!; independent cross-check.
DensePolynomial r_polynomial_direct(const ColorVector& colors, int n);

/// P_n(u) / (1 - a_0 u)^{n+1}, exact.  Throws at the pole u = 1/a_0.
Rational column_ogf_eval(const ColorVector& colors, int n, const Rational& u);

/// P_n for the colorless m = 2 case via the odd-index binomial expansion of
/// the solved two-term recurrence; an independent route from p_polynomial.
DensePolynomial pm2_closed_form(int n);

/// Real zeros of the colorless m = 2 column polynomial: the deduplicated
/// values 2(1+cos(2 pi p/(n+1)))/(1+2 cos(2 pi p/(n+1))), p = 1..n with the
/// two indices excluded where the denominator vanishes, plus the root 0 of
/// multiplicity ceil(n/2).
struct Pm2Zeros {
    std::vector<double> nontrivial;   // distinct nonzero zeros, ascending
    int trivial_multiplicity = 0;     // multiplicity of the zero at 0
};
Pm2Zeros pm2_zeros(int n);

/// F_n computed exactly as 2^{n-1} P_{n-1}(1/2) over the colorless m = 2
/// vector.  Requires n >= 1.
BigInt fibonacci_trinomial(int n);

/// Partial sum of sum_k <k,n-1>_2 / 2^{k+1} through k = k_last, together
/// with a rigorous bound on the discarded tail (valid once k_last >=
/// 3(n-1)); the series converges to F_n.
struct FibonacciSeries {
    Rational partial;
    Rational tail_bound;
    int k_last = 0;
};
FibonacciSeries fibonacci_series(int n, int k_last);

/// Physicists' Hermite polynomial by the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_eval(int n, double x);

/// H_n(x) from the trinomial series
/// ((-1)^n n!/2^n) e^{4x^2} sum_{k >= ceil(n/2)} <k,n>_2 (-4)^k x^{2k-n} / k!.
/// Stops once three consecutive terms fall below tol in absolute value;
/// throws if the cap of 20000 terms is hit first.
double hermite_trinomial_series(int n, double x, double tol);

/// Evaluates <k,n>_a against the ultraspherical three-term recurrence
/// value a_0^{k-n/2} a_2^{n/2} C_n^{(-k)}(-a_1 / (2 sqrt(a_0 a_2))) over
/// exact rationals.  Restricted to m = 2 with a_0 = a_2 > 0 so every
/// intermediate stays rational.  Returns (triangle value, recurrence value).
std::pair<Rational, Rational> gegenbauer_check(const ColorVector& colors, int k, long long n);

}  // namespace polytri
