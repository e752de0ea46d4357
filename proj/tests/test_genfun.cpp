#include "polytri/expansion.hpp"
#include "polytri/genfun.hpp"
#include "polytri/polynomial.hpp"
#include "polytri/triangle.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace polytri;
using polytri::testing::random_color_vector;

namespace {

const ColorVector& trinomial() {
    static const ColorVector a = ColorVector::parse("1,1,1");
    return a;
}

DensePolynomial from_ints(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.emplace_back(v);
    return DensePolynomial(std::move(c));
}

/// (1 - a_0 u)^{-(n+1)} as a truncated series: coefficient j is
/// C(n+j, j) a_0^j.
std::vector<Rational> inverse_power_series(const Rational& a0, int n, int order) {
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    Rational a0_pow = 1;
    for (int j = 0; j <= order; ++j) {
        out[static_cast<size_t>(j)] = Rational(binomial(n + j, j)) * a0_pow;
        a0_pow *= a0;
    }
    return out;
}

}  // namespace

TEST_CASE("dense polynomial arithmetic") {
    const DensePolynomial p = from_ints({1, 2, 3});  // 1 + 2u + 3u^2
    const DensePolynomial q = from_ints({0, 1});
    CHECK(p.degree() == 2);
    CHECK((p * q).degree() == 3);
    CHECK((p + (-p)).is_zero());
    CHECK(DensePolynomial{}.degree() == -1);
    CHECK(p(Rational(2)) == 17);
    CHECK(p.derivative() == from_ints({2, 6}));
    CHECK(from_ints({2, 6}).antiderivative() == from_ints({0, 2, 3}));
    CHECK(p.pow(2) == p * p);
    CHECK(from_ints({0, 0, 5, 5}).trailing_order() == 2);
    CHECK(from_ints({0, 0, 5, 5}).shifted_down(2) == from_ints({5, 5}));
    CHECK(p.eval_double(0.5) == doctest::Approx(2.75));

    const auto [quot, rem] = DensePolynomial::div_mod(p * q + from_ints({7}), q);
    CHECK(quot == p);
    CHECK(rem == from_ints({7}));

    // gcd is monic, squarefree part drops multiplicity.
    const DensePolynomial square = q * q * from_ints({-2, 1});
    CHECK(DensePolynomial::gcd(square, square.derivative()) == q);
    CHECK(square.squarefree_part() == q * from_ints({-2, 1}));
    CHECK(from_ints({3, 6, 9}).primitive_scaled() == from_ints({1, 2, 3}));
    CHECK(from_ints({1}).str() == "1");
    CHECK(from_ints({0, -1, 2}).str() == "-u + 2*u^2");
}

TEST_CASE("column polynomials match the m=2 table") {
    // u^{-ceil(n/2)} P_n for n = 0..7.
    const std::vector<DensePolynomial> expected = {
        from_ints({1}),          from_ints({1}),           from_ints({1}),
        from_ints({2, -1}),      from_ints({1, 1, -1}),    from_ints({3, -2}),
        from_ints({1, 3, -4, 1}), from_ints({4, -2, -2, 1}),
    };
    for (int n = 0; n <= 7; ++n) {
        const DensePolynomial p = p_polynomial(trinomial(), n);
        const int strip = (n + 1) / 2;
        CHECK(p.trailing_order() == (n == 0 ? 0 : strip));
        CHECK(p.shifted_down(n == 0 ? 0 : strip) == expected[static_cast<size_t>(n)]);
    }
    CHECK(p_polynomial(trinomial(), 0) == from_ints({1}));
}

TEST_CASE("recurrence and direct sum build the same column polynomial") {
    std::mt19937_64 rng(606);
    for (int m = 1; m <= 3; ++m) {
        testing::VectorOptions opts;
        opts.nonzero_a0 = false;
        const ColorVector a = random_color_vector(rng, m, opts);
        for (int n = 0; n <= 8; ++n) CHECK(p_polynomial(a, n) == p_polynomial_direct(a, n));
    }
}

TEST_CASE("column polynomial degree and divisibility") {
    std::mt19937_64 rng(607);
    for (int m = 1; m <= 3; ++m) {
        const ColorVector a = random_color_vector(rng, m);
        for (int n = 1; n <= 8; ++n) {
            const DensePolynomial p = p_polynomial(a, n);
            CHECK(p.degree() <= n);
            CHECK(p.trailing_order() >= (n + m - 1) / m);
            // Top term of the direct sum: sum_i alpha_{n,i} (-a_0)^{n-i}.
            Rational top = 0;
            for (long long i = 0; i <= n; ++i) {
                Rational term = alpha(a, n, i);
                if (term == 0) continue;
                for (long long e = 0; e < n - i; ++e) term *= -a[0];
                top += term;
            }
            CHECK((p.degree() == n) == (top != 0));
        }
    }
}

TEST_CASE("ordinary generating function identity") {
    std::mt19937_64 rng(608);
    for (int m = 1; m <= 3; ++m) {
        const ColorVector a = random_color_vector(rng, m);
        for (int n = 0; n <= 10; ++n) {
            const DensePolynomial p = p_polynomial(a, n);
            const std::vector<Rational> series = inverse_power_series(a[0], n, 25);
            for (int k = 0; k <= 25; ++k) {
                Rational coeff = 0;
                for (int j = 0; j <= std::min(k, p.degree()); ++j)
                    coeff += p.coeff(j) * series[static_cast<size_t>(k - j)];
                CHECK(coeff == poly_coeff(a, k, n));
            }
        }
    }
}

TEST_CASE("exponential generating function identity") {
    std::mt19937_64 rng(609);
    for (int m = 1; m <= 3; ++m) {
        const ColorVector a = random_color_vector(rng, m);
        for (int n = 0; n <= 6; ++n) {
            const DensePolynomial r = r_polynomial(a, n);
            CHECK(r == r_polynomial_direct(a, n));
            // k! [u^k] e^{a_0 u} R_n(u) = <k,n>.
            for (int k = 0; k <= 12; ++k) {
                Rational coeff = 0;
                Rational a0_pow = 1;  // a_0^j / j!
                for (int j = 0; j <= k; ++j) {
                    coeff += a0_pow * r.coeff(k - j);
                    a0_pow *= a[0];
                    a0_pow /= (j + 1);
                }
                coeff *= Rational(factorial(static_cast<unsigned>(k)));
                CHECK(coeff == poly_coeff(a, k, n));
            }
        }
    }
}

TEST_CASE("exponential polynomial examples") {
    CHECK(r_polynomial(trinomial(), 0) == from_ints({1}));
    // R_2 = u + u^2/2.
    const DensePolynomial r2 = r_polynomial(trinomial(), 2);
    CHECK(r2 == DensePolynomial(std::vector<Rational>{0, 1, Rational(1, 2)}));
    // Derivative recurrence: R_3' = R_2 + R_1 (m = 2 truncates the sum).
    const DensePolynomial r3 = r_polynomial(trinomial(), 3);
    CHECK(r3.derivative() == r2 + r_polynomial(trinomial(), 1));
    CHECK(r3.coeff(0) == 0);  // integration constant pinned by R_n(0) = 0
}

TEST_CASE("bivariate generating function of the column polynomials") {
    // After clearing (1 - a_0 u): sum_n P_n z^n = 1 / (1 - u sum_{i>=1}
    // a_i (1-a_0 u)^{i-1} z^i); expand to z-order N and compare.
    std::mt19937_64 rng(610);
    const int order = 7;
    for (int m = 1; m <= 3; ++m) {
        const ColorVector a = random_color_vector(rng, m);
        const DensePolynomial one_minus(std::vector<Rational>{1, -a[0]});
        // kernel[i] = coefficient of z^i: u a_i (1 - a_0 u)^{i-1}, i >= 1.
        std::vector<DensePolynomial> kernel(static_cast<size_t>(m) + 1);
        for (int i = 1; i <= m; ++i)
            kernel[static_cast<size_t>(i)] = DensePolynomial::monomial(1, a[i]) *
                                             one_minus.pow(static_cast<unsigned>(i - 1));
        // geometric series sum_j kernel^j, truncated at z-order `order`.
        std::vector<DensePolynomial> series(static_cast<size_t>(order) + 1);
        series[0] = DensePolynomial(Rational(1));
        std::vector<DensePolynomial> power(series);  // kernel^j, j = 0
        for (int j = 1; j <= order; ++j) {
            std::vector<DensePolynomial> next(static_cast<size_t>(order) + 1);
            for (int deg = 0; deg <= order; ++deg) {
                if (power[static_cast<size_t>(deg)].is_zero()) continue;
                for (int i = 1; i <= m && deg + i <= order; ++i)
                    next[static_cast<size_t>(deg + i)] =
                        next[static_cast<size_t>(deg + i)] +
                        power[static_cast<size_t>(deg)] * kernel[static_cast<size_t>(i)];
            }
            power = std::move(next);
            for (int deg = 0; deg <= order; ++deg)
                series[static_cast<size_t>(deg)] =
                    series[static_cast<size_t>(deg)] + power[static_cast<size_t>(deg)];
        }
        for (int n = 0; n <= order; ++n)
            CHECK(series[static_cast<size_t>(n)] == p_polynomial(a, n));
    }
}

TEST_CASE("column generating function evaluation") {
    CHECK(column_ogf_eval(ColorVector::parse("1,1"), 1, Rational(1, 3)) == Rational(3, 4));
    CHECK(column_ogf_eval(trinomial(), 0, Rational(1, 2)) == 2);
    CHECK_THROWS_AS(column_ogf_eval(trinomial(), 2, Rational(1)), std::domain_error);

    // Partial sums converge with a geometric tail: sum_{k<=K} <k,n> u^k vs
    // the closed form, |tail| <= row_value * u^K * u m / (1-u...) crude
    // bound via ratio test on <k+1,n>/<k,n> <= 3 for the trinomial and
    // u = 1/4: ratio 3/4 per extra k.
    const Rational u(1, 4);
    for (int n = 0; n <= 4; ++n) {
        Rational partial = 0;
        Rational u_pow = 1;
        for (int k = 0; k <= 60; ++k) {
            partial += poly_coeff(trinomial(), k, n) * u_pow;
            u_pow *= u;
        }
        const Rational closed = column_ogf_eval(trinomial(), n, u);
        const Rational tail_bound = poly_coeff(trinomial(), 60, n) * u_pow * 4;  // sum (3/4)^j
        CHECK(abs(closed - partial) <= tail_bound);
    }
}

TEST_CASE("closed form for the colorless m=2 column polynomial") {
    for (int n = 0; n <= 30; ++n) CHECK(pm2_closed_form(n) == p_polynomial(trinomial(), n));
}

TEST_CASE("zeros of the m=2 column polynomial") {
    const Pm2Zeros z3 = pm2_zeros(3);
    REQUIRE(z3.nontrivial.size() == 1);
    CHECK(z3.nontrivial[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(z3.trivial_multiplicity == 2);

    const Pm2Zeros z1 = pm2_zeros(1);
    CHECK(z1.nontrivial.empty());
    CHECK(z1.trivial_multiplicity == 1);

    for (int n = 1; n <= 25; ++n) {
        const DensePolynomial p = p_polynomial(trinomial(), n);
        const Pm2Zeros z = pm2_zeros(n);
        CHECK(z.trivial_multiplicity == p.trailing_order());
        for (double u : z.nontrivial) {
            // Evaluate in binary64 against a scale-aware bound.
            double scale = 0.0;
            double u_pow = 1.0;
            for (int i = 0; i <= p.degree(); ++i) {
                scale += std::abs(to_double(p.coeff(i)) * u_pow);
                u_pow *= u;
            }
            CHECK(std::abs(p.eval_double(u)) <= 1e-12 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("fibonacci from the trinomial column") {
    CHECK(fibonacci_trinomial(1) == 1);
    CHECK(fibonacci_trinomial(2) == 1);
    CHECK(fibonacci_trinomial(10) == 55);
    CHECK(fibonacci_trinomial(30) == 832040);
    // Independent recurrence oracle.
    BigInt prev = 0, cur = 1;
    for (int n = 1; n <= 30; ++n) {
        CHECK(fibonacci_trinomial(n) == cur);
        const BigInt next = prev + cur;
        prev = cur;
        cur = next;
    }

    // Truncated series nails the integer once the tail bound drops below 1.
    for (int n : {1, 2, 5, 9, 12}) {
        const int k_last = std::max(3 * (n - 1), 4);
        const FibonacciSeries s = fibonacci_series(n, k_last);
        REQUIRE(s.tail_bound >= 0);
        CHECK(s.tail_bound < 1);
        CHECK(abs(Rational(fibonacci_trinomial(n)) - s.partial) <= s.tail_bound);
    }
}

TEST_CASE("hermite evaluation against the recurrence") {
    CHECK(hermite_eval(0, 0.37) == 1.0);
    CHECK(hermite_eval(1, 0.37) == doctest::Approx(0.74));
    CHECK(hermite_eval(3, 1.0) == doctest::Approx(-4.0));
    for (int n = 0; n <= 8; ++n) {
        for (double x : {0.3, -0.3, 0.7, -0.7, 1.0, -1.0}) {
            const double series = hermite_trinomial_series(n, x, 1e-12);
            CHECK(std::abs(series - hermite_eval(n, x)) < 1e-8);
        }
    }
    CHECK_THROWS_AS(hermite_trinomial_series(2, 0.5, -1.0), std::invalid_argument);
}

TEST_CASE("ultraspherical recurrence reproduces the trinomial values") {
    for (int k = 0; k <= 10; ++k) {
        for (long long n = 0; n <= 2LL * k + 2; ++n) {
            const auto [triangle_value, recurrence_value] = gegenbauer_check(trinomial(), k, n);
            CHECK(triangle_value == recurrence_value);
        }
    }
    // k=3, n=3 is the row-3 center 7.
    const auto [lhs, rhs] = gegenbauer_check(trinomial(), 3, 3);
    CHECK(lhs == 7);
    CHECK(rhs == 7);
    // n = 0 gives a_0^k.
    CHECK(gegenbauer_check(ColorVector::parse("2,1,2"), 3, 0).second == 8);
    // (1,2,1) is (1+t)^2: values C(2k, n).
    for (int k = 0; k <= 6; ++k)
        for (long long n = 0; n <= 2LL * k; ++n)
            CHECK(gegenbauer_check(ColorVector::parse("1,2,1"), k, n).second ==
                  Rational(binomial(2 * k, n)));

    CHECK_THROWS_AS(gegenbauer_check(ColorVector::parse("1,1"), 2, 1), std::domain_error);
    CHECK_THROWS_AS(gegenbauer_check(ColorVector::parse("1,1,2"), 2, 1), std::domain_error);
    CHECK_THROWS_AS(gegenbauer_check(ColorVector::parse("-1,1,-1"), 2, 1), std::domain_error);
}
