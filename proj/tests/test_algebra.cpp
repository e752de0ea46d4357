#include "polytri/algebra.hpp"
#include "polytri/genfun.hpp"
#include "polytri/polynomial.hpp"
#include "polytri/triangle.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace polytri;
using polytri::testing::random_color_vector;

namespace {

/// Oracle: coefficients of p_a(p_b(t)) by direct Horner composition.
ColorVector compose_by_polynomials(const ColorVector& a, const ColorVector& b) {
    const DensePolynomial pb(b.entries());
    DensePolynomial acc;
    for (int j = a.degree(); j >= 0; --j)
        acc = acc * pb + DensePolynomial(a[j]);
    std::vector<Rational> coeffs = acc.coefficients();
    return ColorVector(std::move(coeffs));
}

}  // namespace

TEST_CASE("compose basics") {
    const ColorVector e = compose_identity();
    const ColorVector a = ColorVector::parse("1,1,1");
    CHECK(compose(a, e) == a);
    CHECK(compose(e, a) == a);
    CHECK(compose(ColorVector::parse("1,1"), ColorVector::parse("1,1")).str() == "2,1");
    CHECK(compose(ColorVector::parse("1,1,1"), ColorVector::parse("1,1")).str() == "3,3,1");
}

TEST_CASE("compose agrees with direct polynomial composition and is associative") {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 12; ++trial) {
        testing::VectorOptions opts;
        opts.nonzero_a0 = false;
        const ColorVector a = random_color_vector(rng, 1 + trial % 2, opts);
        const ColorVector b = random_color_vector(rng, 1 + (trial / 2) % 2, opts);
        const ColorVector c = random_color_vector(rng, 2, opts);
        CHECK(compose(a, b) == compose_by_polynomials(a, b));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("compose with signed weights and zero constant terms") {
    const ColorVector a = ColorVector::parse("0,1,1");
    const ColorVector b = ColorVector::parse("0,1,-1");
    const ColorVector composed = compose(a, b);
    CHECK(composed == compose_by_polynomials(a, b));
    // (t - t^2) + (t - t^2)^2 = t - 2t^3 + t^4; interior cancellation only,
    // the top coefficient a_m b_p^m can never vanish.
    CHECK(composed.str() == "0,1,0,-2,1");
    CHECK(composed.degree() == a.degree() * b.degree());
}

TEST_CASE("scale and dilate") {
    const ColorVector a = ColorVector::parse("1,2,3");
    CHECK(scale(Rational(2), a).str() == "2,4,6");
    CHECK_THROWS_AS(scale(Rational(0), a), std::invalid_argument);
    CHECK(dilate(Rational(1), a) == a);
    CHECK(dilate(Rational(2), a).str() == "1,4,12");
    // lambda = 0 degenerates to the constant (a_0).
    CHECK(dilate(Rational(0), a).degree() == 0);
    CHECK(dilate(Rational(0), a)[0] == 1);

    // T(lambda a) row k = lambda^k T(a) row k.
    std::mt19937_64 rng(4);
    const ColorVector b = random_color_vector(rng, 2);
    const Rational lambda(5, 3);
    const ColorVector scaled = scale(lambda, b);
    Rational lambda_k = 1;
    for (int k = 0; k <= 5; ++k) {
        const Row expected = triangle_row(b, k);
        const Row actual = triangle_row(scaled, k);
        for (size_t n = 0; n < expected.size(); ++n) CHECK(actual[n] == lambda_k * expected[n]);
        lambda_k *= lambda;
    }
}

TEST_CASE("exchange law a o (lambda b) = (dilate(lambda) a) o b") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const ColorVector a = random_color_vector(rng, 2);
        const ColorVector b = random_color_vector(rng, 1 + trial % 2);
        const Rational lambda(trial + 2, 3);
        CHECK(compose(a, scale(lambda, b)) == compose(dilate(lambda, a), b));
    }
}

TEST_CASE("triangle product equals the composed triangle") {
    std::mt19937_64 rng(2025);
    testing::VectorOptions opts;
    opts.nonzero_a0 = false;
    for (int trial = 0; trial < 6; ++trial) {
        const ColorVector a = random_color_vector(rng, 2, opts);
        const ColorVector b = random_color_vector(rng, 2, opts);
        const auto [product, direct] = triangle_product(a, b, 6);
        CHECK(product == direct);
    }
    // Identity acts trivially.
    const ColorVector b = ColorVector::parse("2,1/2,1");
    const auto [left, right] = triangle_product(compose_identity(), b, 5);
    CHECK(left == right);
    for (size_t k = 0; k < left.rows(); ++k)
        for (size_t n = 0; n < left.cols(); ++n)
            CHECK(left.at(k, n) == poly_coeff(b, static_cast<int>(k), static_cast<long long>(n)));
}

TEST_CASE("binomial triangle product reproduces the doubled binomial sum") {
    // a = b = (1,1): sum_l C(k,l) C(l,n) = 2^{k-n} C(k,n).
    const ColorVector ones = ColorVector::parse("1,1");
    const auto [product, direct] = triangle_product(ones, ones, 6);
    CHECK(product == direct);
    for (int k = 0; k < 6; ++k) {
        for (int n = 0; n <= k; ++n) {
            const Rational expected =
                Rational(binomial(k, n) * (BigInt(1) << static_cast<unsigned>(k - n)));
            CHECK(product.at(static_cast<size_t>(k), static_cast<size_t>(n)) == expected);
        }
    }
    // And matches T((2,1)).
    const ColorVector two_one = compose(ones, ones);
    CHECK(two_one.str() == "2,1");
}

TEST_CASE("s_matrix reproduces the displayed 6x6 array") {
    const TruncatedMatrix s = s_matrix(ColorVector::parse("1,1,1"), 6);
    const long long expected[6][6] = {
        {1, 1, 1, 1, 1, 1},
        {1, 3, 6, 10, 15, 21},
        {1, 6, 19, 45, 90, 161},
        {1, 10, 45, 141, 357, 784},
        {1, 15, 90, 357, 1107, 2907},
        {1, 21, 161, 784, 2907, 8953},
    };
    for (size_t r = 0; r < 6; ++r)
        for (size_t c = 0; c < 6; ++c) CHECK(s.at(r, c) == expected[r][c]);
}

TEST_CASE("s_matrix structure") {
    // Palindromic a gives a symmetric array.
    const TruncatedMatrix s = s_matrix(ColorVector::parse("2,1,2"), 5);
    for (size_t r = 0; r < 5; ++r)
        for (size_t c = 0; c < 5; ++c) CHECK(s.at(r, c) == s.at(c, r));

    // Binomial case: the classical symmetric Pascal matrix C(r+s, r).
    const TruncatedMatrix pascal = s_matrix(ColorVector::parse("1,1"), 6);
    for (size_t r = 0; r < 6; ++r)
        for (size_t c = 0; c < 6; ++c)
            CHECK(pascal.at(r, c) ==
                  Rational(binomial(static_cast<long long>(r + c), static_cast<long long>(r))));

    // S(a) equals the truncation of T(Ja) * T(a)^t.
    const ColorVector a = ColorVector::parse("1,1/2,3");
    const ColorVector ja = a.reversed();
    const TruncatedMatrix sa = s_matrix(a, 5);
    for (int r = 0; r < 5; ++r) {
        for (int s_idx = 0; s_idx < 5; ++s_idx) {
            Rational sum = 0;
            for (long long l = 0; l <= 2LL * std::max(r, s_idx); ++l)
                sum += poly_coeff(ja, r, l) * poly_coeff(a, s_idx, l);
            CHECK(sum == sa.at(static_cast<size_t>(r), static_cast<size_t>(s_idx)));
        }
    }
}

TEST_CASE("affine pairs form a group matching 2x2 matrices") {
    const AffinePair p(Rational(1, 2), Rational(3));
    const AffinePair q(Rational(-2), Rational(1, 4));

    // Composition of pairs is composition of the degree-1 vectors.
    const AffinePair pq = compose(p, q);
    const ColorVector vector_composition =
        compose(ColorVector{p.offset, p.slope}, ColorVector{q.offset, q.slope});
    CHECK(pq.offset == vector_composition[0]);
    CHECK(pq.slope == vector_composition[1]);

    // Homomorphism into the matrix group.
    const auto mp = affine_matrix(p);
    const auto mq = affine_matrix(q);
    const auto mpq = affine_matrix(pq);
    CHECK(mpq[0] == mp[0] * mq[0]);
    CHECK(mpq[1] == mp[0] * mq[1] + mp[1]);
    CHECK(mpq[2] == 0);
    CHECK(mpq[3] == 1);

    // Identity and inverse.
    const AffinePair e(Rational(0), Rational(1));
    CHECK(affine_matrix(e) == std::array<Rational, 4>{1, 0, 0, 1});
    const AffinePair p_inv = inverse(p);
    const AffinePair round_trip = compose(p, p_inv);
    CHECK(round_trip.offset == 0);
    CHECK(round_trip.slope == 1);

    CHECK_THROWS_AS(AffinePair(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("binomial column generating functions have the closed product form") {
    // m = 1: P_n(u) = (a_1 u)^n, so column n is (a_1 u)^n / (1 - a_0 u)^{n+1}.
    const ColorVector a = ColorVector::parse("1/2,3");
    for (int n = 0; n <= 6; ++n) {
        const DensePolynomial p = p_polynomial(a, n);
        Rational a1_pow = 1;
        for (int e = 0; e < n; ++e) a1_pow *= a[1];
        CHECK(p == DensePolynomial::monomial(n, a1_pow));
    }
}
