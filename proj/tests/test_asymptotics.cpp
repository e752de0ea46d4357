#include "polytri/asymptotics.hpp"
#include "polytri/triangle.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace polytri;
using polytri::testing::random_color_vector;

namespace {

ColorVector colorless(int m) {
    return ColorVector(std::vector<Rational>(static_cast<size_t>(m) + 1, Rational(1)));
}

double p_at(const ColorVector& a, double x) {
    double acc = 0.0;
    for (int i = a.degree(); i >= 0; --i) acc = acc * x + to_double(a[i]);
    return acc;
}

}  // namespace

TEST_CASE("drift basics") {
    CHECK(drift(colorless(2), 1.0) == doctest::Approx(1.0));
    CHECK(drift(ColorVector::parse("1,1"), 1.0) == doctest::Approx(0.5));
    for (double x : {0.25, 0.5, 2.0, 7.5})
        CHECK(drift(ColorVector::parse("1,1"), x) == doctest::Approx(x / (1.0 + x)));
    CHECK_THROWS_AS(drift(colorless(2), -1.0), std::domain_error);
}

TEST_CASE("dispersion matches the direct moment computation") {
    std::mt19937_64 rng(1212);
    testing::VectorOptions opts;
    opts.positive = true;
    for (int trial = 0; trial < 6; ++trial) {
        const ColorVector a = random_color_vector(rng, 1 + trial % 3, opts);
        for (double x : {0.3, 1.0, 2.5}) {
            // Law P(xi = i) = a_i x^i / p(x): variance equals x^2 delta p(x).
            const double p = p_at(a, x);
            double mean = 0.0, second = 0.0;
            double x_pow = 1.0;
            for (int i = 0; i <= a.degree(); ++i) {
                const double prob = to_double(a[i]) * x_pow / p;
                mean += i * prob;
                second += static_cast<double>(i) * i * prob;
                x_pow *= x;
            }
            const double variance = second - mean * mean;
            CHECK(x * x * dispersion(a, x) == doctest::Approx(variance).epsilon(1e-10));
            CHECK(drift(a, x) == doctest::Approx(mean).epsilon(1e-12));
            CHECK(dispersion(a, x) > 0);
        }
    }
}

TEST_CASE("saddle point closed forms") {
    CHECK(saddle_point(colorless(2), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (double rho : {0.1, 0.3, 0.5, 0.8})
        CHECK(saddle_point(ColorVector::parse("1,1"), rho) ==
              doctest::Approx(rho / (1.0 - rho)).epsilon(1e-11));
}

TEST_CASE("saddle point satisfies the drift equation with a tiny residual") {
    std::mt19937_64 rng(77);
    testing::VectorOptions opts;
    opts.positive = true;
    for (int trial = 0; trial < 8; ++trial) {
        const ColorVector a = random_color_vector(rng, 1 + trial % 3, opts);
        const int m = a.degree();
        double previous = 0.0;
        for (int j = 1; j <= 19; ++j) {
            const double rho = m * j / 20.0;
            const double x = saddle_point(a, rho);
            CHECK(x > previous);  // x(rho) strictly increasing
            previous = x;
            CHECK(drift(a, x) == doctest::Approx(rho).epsilon(1e-10));
            // Scaled residual |sum (i - rho) a_i x^i| / p(x).
            double g = 0.0, x_pow = 1.0;
            for (int i = 0; i <= m; ++i) {
                g += (i - rho) * to_double(a[i]) * x_pow;
                x_pow *= x;
            }
            CHECK(std::abs(g) / p_at(a, x) < 1e-12);
        }
    }
}

TEST_CASE("saddle preconditions are rejected") {
    CHECK_THROWS_AS(saddle_point(colorless(2), 0.0), std::domain_error);
    CHECK_THROWS_AS(saddle_point(colorless(2), 2.0), std::domain_error);
    CHECK_THROWS_AS(saddle_point(ColorVector::parse("1,-1,1"), 1.0), std::domain_error);
    CHECK_THROWS_AS(saddle_point(ColorVector::parse("0,1,1"), 1.0), std::domain_error);
    CHECK_THROWS_AS(saddle_point(ColorVector::parse("1,0,1"), 1.0), std::domain_error);  // periodic
    CHECK_THROWS_AS(entropy(colorless(2), 2.5), std::domain_error);
    CHECK_THROWS_AS(entropy_closed_m1(1.0, 1.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(central_trinomial_asymp(ColorVector::parse("1,1"), 10), std::domain_error);
}

TEST_CASE("entropy peak and closed values") {
    CHECK(entropy(colorless(2), 1.0) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(entropy(ColorVector::parse("1,1"), 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    const double expected = 0.7 * std::log(1.0 / 0.7) + 0.3 * std::log(1.0 / 0.3);
    CHECK(entropy(ColorVector::parse("1,1"), 0.3) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(entropy(colorless(3), 1.5) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    // Endpoints take the limit values.
    CHECK(entropy(ColorVector::parse("2,1,3"), 0.0) == doctest::Approx(std::log(2.0)));
    CHECK(entropy(ColorVector::parse("2,1,3"), 2.0) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("closed m=1 entropy matches the solver") {
    for (double rho : {0.05, 0.3, 0.5, 0.77, 0.95}) {
        CHECK(entropy_closed_m1(1.0, 1.0, rho) ==
              doctest::Approx(entropy(ColorVector::parse("1,1"), rho)).epsilon(1e-12));
        CHECK(entropy_closed_m1(1.0, 2.0, rho) ==
              doctest::Approx(entropy(ColorVector::parse("1,2"), rho)).epsilon(1e-12));
    }
    // rho -> 0 limit tends to ln a_0.
    CHECK(entropy_closed_m1(3.0, 2.0, 1e-9) == doctest::Approx(std::log(3.0)).epsilon(1e-6));
}

TEST_CASE("solve_saddle packages the solution") {
    const SaddleSolution s = solve_saddle(colorless(2), 1.0);
    CHECK(s.x == doctest::Approx(1.0));
    CHECK(s.entropy == doctest::Approx(std::log(3.0)));
    CHECK(s.variance == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(s.rho == 1.0);
}

TEST_CASE("entropy curve shape") {
    const auto curve = entropy_curve(ColorVector::parse("1,1,1,1"), 201);
    REQUIRE(curve.size() == 201);
    CHECK(curve.front().first == 0.0);
    CHECK(curve.back().first == 3.0);
    CHECK(curve.front().second == doctest::Approx(0.0));
    CHECK(curve.back().second == doctest::Approx(0.0));
    // Strict concavity of the sampled second differences.
    for (size_t i = 1; i + 1 < curve.size(); ++i) {
        const double dd = curve[i + 1].second - 2 * curve[i].second + curve[i - 1].second;
        CHECK(dd < 0.0);
    }
    // Peak at mu = 1.5 with value ln 4.
    const auto peak = std::max_element(curve.begin(), curve.end(),
                                       [](const auto& l, const auto& r) { return l.second < r.second; });
    CHECK(std::abs(peak->first - 1.5) <= 3.0 / 200 + 1e-12);
    CHECK(entropy(ColorVector::parse("1,1,1,1"), 1.5) == doctest::Approx(std::log(4.0)).epsilon(1e-10));
}

TEST_CASE("particle-hole duality and scaling of the entropy") {
    std::mt19937_64 rng(31);
    testing::VectorOptions opts;
    opts.positive = true;
    const ColorVector a = random_color_vector(rng, 3, opts);
    const ColorVector ja = a.reversed();
    for (int j = 0; j <= 30; ++j) {
        const double rho = 3.0 * j / 30.0;
        CHECK(std::abs(entropy(a, rho) - entropy(ja, 3.0 - rho)) < 1e-10);
    }
    const ColorVector doubled = ColorVector([&] {
        std::vector<Rational> entries = a.entries();
        for (Rational& c : entries) c *= 2;
        return entries;
    }());
    for (int j = 0; j <= 30; ++j) {
        const double rho = 3.0 * j / 30.0;
        CHECK(std::abs(entropy(doubled, rho) - entropy(a, rho) - std::log(2.0)) < 1e-10);
    }
}

TEST_CASE("daniels-good estimate tracks the exact central coefficient") {
    const ColorVector a = colorless(2);
    const double exact50 = to_double(poly_coeff(a, 50, 50));
    const double err50 = std::abs(daniels_good_estimate(a, 50, 50) / exact50 - 1.0);
    CHECK(err50 < 0.01);
    // Off-center columns work through the same machinery.
    const double exact_off = to_double(poly_coeff(a, 60, 45));
    CHECK(std::abs(daniels_good_estimate(a, 60, 45) / exact_off - 1.0) < 0.01);
    CHECK_THROWS_AS(daniels_good_estimate(a, 50, 0), std::domain_error);
}

TEST_CASE("central trinomial estimate") {
    // (1,2,1) collapses to the central binomial asymptotic 4^k / sqrt(pi k).
    const ColorVector squares = ColorVector::parse("1,2,1");
    for (long long k : {10, 50, 100}) {
        const double expected = k * std::log(4.0) - 0.5 * std::log(M_PI * static_cast<double>(k));
        CHECK(central_trinomial_log_asymp(squares, k) == doctest::Approx(expected).epsilon(1e-12));
    }
    // Agrees with the saddle estimate at the central column.
    const ColorVector a = colorless(2);
    CHECK(central_trinomial_log_asymp(a, 100) ==
          doctest::Approx(daniels_good_log_estimate(a, 100, 100)).epsilon(1e-6));
}
