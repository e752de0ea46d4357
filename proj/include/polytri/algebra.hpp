#pragma once

#include "polytri/color_vector.hpp"
#include "polytri/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace polytri {

/// Finite window of an infinite row-indexed array; rows are left-justified
/// and zero-padded to a fixed width.
class TruncatedMatrix {
  public:
    TruncatedMatrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }

    bool operator==(const TruncatedMatrix& other) const = default;
    std::string str() const;

  private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Identity element of the composition monoid: e = (0, 1).
ColorVector compose_identity();

/// a o b: coefficient vector of p_a(p_b(t)), computed as
/// (a o b)_i = sum_j a_j <j,i>_b and trimmed to genuine degree.
ColorVector compose(const ColorVector& a, const ColorVector& b);

/// lambda * a entrywise.  Rejects lambda = 0 (zero polynomial).
ColorVector scale(const Rational& lambda, const ColorVector& a);

/// I_lambda a = (a_0, lambda a_1, lambda^2 a_2, ...).  lambda = 0 degenerates
/// to (a_0), which must be nonzero.
ColorVector dilate(const Rational& lambda, const ColorVector& a);

/// K-row truncations of T(a)*T(b) and of T(a o b); rows wide enough to hold
/// every entry of the product window (deg(a)*deg(b)*(K-1) + 1 columns).
/// The two matrices are equal.
std::pair<TruncatedMatrix, TruncatedMatrix> triangle_product(const ColorVector& a,
                                                             const ColorVector& b, int k_rows);

/// Symmetric-style array with entry (r, s) = <r+s, m*r>_a; equals the
/// truncation of T(Ja) * T(a)^t, and is symmetric for palindromic a.
TruncatedMatrix s_matrix(const ColorVector& colors, int size);

/// Degree-1 vector (a_0, a_1) with a_1 != 0, viewed as the affine map
/// x -> a_1 x + a_0.  These form a group under composition.
struct AffinePair {
    Rational offset;  // a_0
    Rational slope;   // a_1, nonzero

    AffinePair(Rational a0, Rational a1);
};

AffinePair compose(const AffinePair& p, const AffinePair& q);
AffinePair inverse(const AffinePair& p);

/// Row-major [[a_1, a_0], [0, 1]]; composition of pairs maps to the 2x2
/// matrix product.
std::array<Rational, 4> affine_matrix(const AffinePair& p);

}  // namespace polytri
