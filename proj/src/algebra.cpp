#include "polytri/algebra.hpp"

#include "polytri/triangle.hpp"

#include <stdexcept>

namespace polytri {

TruncatedMatrix::TruncatedMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("truncated matrix: empty shape");
}

std::string TruncatedMatrix::str() const {
    std::string out;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t s = 0; s < cols_; ++s) {
            if (s) out += ' ';
            out += to_string(at(r, s));
        }
        out += '\n';
    }
    return out;
}

ColorVector compose_identity() { return ColorVector{Rational(0), Rational(1)}; }

ColorVector compose(const ColorVector& a, const ColorVector& b) {
    const int m = a.degree();
    const int p = b.degree();
    std::vector<Rational> out(static_cast<size_t>(m) * p + 1, Rational(0));
    for (long long i = 0; i < static_cast<long long>(out.size()); ++i) {
        Rational c = 0;
        for (int j = 0; j <= m; ++j) c += a[j] * poly_coeff(b, j, i);
        out[static_cast<size_t>(i)] = std::move(c);
    }
    // Leading coefficients may cancel over signed weights; the constructor
    // trims to genuine degree and rejects the zero polynomial.
    return ColorVector(std::move(out));
}

ColorVector scale(const Rational& lambda, const ColorVector& a) {
    if (lambda == 0) throw std::invalid_argument("scale: lambda = 0 gives the zero polynomial");
    std::vector<Rational> out = a.entries();
    for (Rational& c : out) c *= lambda;
    return ColorVector(std::move(out));
}

ColorVector dilate(const Rational& lambda, const ColorVector& a) {
    std::vector<Rational> out = a.entries();
    Rational power = 1;
    for (size_t i = 1; i < out.size(); ++i) {
        power *= lambda;
        out[i] *= power;
    }
    return ColorVector(std::move(out));
}

std::pair<TruncatedMatrix, TruncatedMatrix> triangle_product(const ColorVector& a,
                                                             const ColorVector& b, int k_rows) {
    if (k_rows < 1) throw std::invalid_argument("triangle_product: need at least one row");
    const int m = a.degree();
    const int p = b.degree();
    const size_t cols = static_cast<size_t>(m) * p * (k_rows - 1) + 1;

    TruncatedMatrix product(static_cast<size_t>(k_rows), cols);
    for (int k = 0; k < k_rows; ++k) {
        // Row k of T(a) has support l = 0..mk; T(b) supplies <l, n>_b.
        for (size_t n = 0; n < cols; ++n) {
            Rational sum = 0;
            for (long long l = 0; l <= static_cast<long long>(m) * k; ++l) {
                const Rational left = poly_coeff(a, k, l);
                if (left == 0) continue;
                sum += left * poly_coeff(b, static_cast<int>(l), static_cast<long long>(n));
            }
            product.at(static_cast<size_t>(k), n) = std::move(sum);
        }
    }

    const ColorVector composed = compose(a, b);
    TruncatedMatrix direct(static_cast<size_t>(k_rows), cols);
    for (int k = 0; k < k_rows; ++k)
        for (size_t n = 0; n < cols; ++n)
            direct.at(static_cast<size_t>(k), n) = poly_coeff(composed, k, static_cast<long long>(n));

    return {std::move(product), std::move(direct)};
}

TruncatedMatrix s_matrix(const ColorVector& colors, int size) {
    if (size < 1) throw std::invalid_argument("s_matrix: size must be positive");
    const long long m = colors.degree();
    TruncatedMatrix out(static_cast<size_t>(size), static_cast<size_t>(size));
    for (int r = 0; r < size; ++r)
        for (int s = 0; s < size; ++s)
            out.at(static_cast<size_t>(r), static_cast<size_t>(s)) = poly_coeff(colors, r + s, m * r);
    return out;
}

AffinePair::AffinePair(Rational a0, Rational a1) : offset(std::move(a0)), slope(std::move(a1)) {
    if (slope == 0) throw std::invalid_argument("affine pair: slope must be nonzero");
}

AffinePair compose(const AffinePair& p, const AffinePair& q) {
    return AffinePair(p.offset + p.slope * q.offset, p.slope * q.slope);
}

AffinePair inverse(const AffinePair& p) {
    return AffinePair(-p.offset / p.slope, Rational(1) / p.slope);
}

std::array<Rational, 4> affine_matrix(const AffinePair& p) {
    return {p.slope, p.offset, Rational(0), Rational(1)};
}

}  // namespace polytri
