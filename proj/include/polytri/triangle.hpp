#pragma once

#include "polytri/color_vector.hpp"
#include "polytri/rational.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace polytri {

using Row = std::vector<Rational>;

/// Row-by-row view of the triangle T(a).  Rows are produced by the (m+1)-term
/// addition recurrence (iterated convolution with a) and cached; the cache is
/// safe under concurrent access.
class Triangle {
  public:
    explicit Triangle(ColorVector colors);

    const ColorVector& colors() const { return colors_; }

    /// Row k = (<k,0>_a, ..., <k,mk>_a); length m*k + 1.
    Row row(int k) const;

    /// <k,n>_a; zero for n < 0 or n > m*k.
    Rational coeff(int k, long long n) const;

  private:
    void extend(int k) const;

    ColorVector colors_;
    mutable std::mutex mutex_;
    mutable std::vector<Row> rows_;
};

/// Shared per-vector triangle cache keyed by the canonical entry tuple.
/// (2,2,2) and (1,1,1) key distinct triangles.
std::shared_ptr<const Triangle> triangle(const ColorVector& colors);

/// [t^n] p_a(t)^k, memoized per (a, k).  n may be any integer.
Rational poly_coeff(const ColorVector& colors, int k, long long n);

Row triangle_row(const ColorVector& colors, int k);

/// Distribution of the total score after k weighted draws:
/// entry n is <k,n>_a / N^k with N = sum a_i.  Requires a >= 0, sum > 0.
std::vector<Rational> score_distribution(const ColorVector& colors, int k);

}  // namespace polytri
