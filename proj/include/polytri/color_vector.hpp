#pragma once

#include "polytri/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace polytri {

/// Weight vector a = (a_0, ..., a_m) with exact rational entries and genuine
/// degree (a_m != 0).  Trailing zeros are trimmed on construction; the all-zero
/// vector is rejected.  Degree-0 vectors are permitted as degenerate values
/// (they arise from dilate(0, a) and from truncated tails), but the triangle
/// and CLI surfaces require m >= 1.
class ColorVector {
  public:
    explicit ColorVector(std::vector<Rational> entries);
    ColorVector(std::initializer_list<Rational> entries);

    /// Parses a comma-separated list of rationals, e.g. "1,1/2,3".
    static ColorVector parse(std::string_view text);

    int degree() const { return static_cast<int>(entries_.size()) - 1; }
    const Rational& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool nonnegative() const;
    bool palindromic() const;
    /// gcd of the indices i > 0 with a_i != 0 equals 1.  False for degree 0.
    bool aperiodic() const;

    Rational weight_sum() const;
    /// mu = sum i*a_i / sum a_i.  Requires weight_sum() != 0.
    Rational mean_occupancy() const;

    /// Ja = (a_m, ..., a_0), trimmed to genuine degree when a_0 = 0.
    ColorVector reversed() const;
    /// (a_p, ..., a_m); requires 0 <= p <= degree().
    ColorVector tail(int p) const;
    /// Index of the first nonzero entry.
    int min_support() const;

    bool operator==(const ColorVector& other) const { return entries_ == other.entries_; }
    bool operator<(const ColorVector& other) const;

    /// "a_0,a_1,...,a_m" in canonical rational form.
    std::string str() const;

  private:
    std::vector<Rational> entries_;
};

}  // namespace polytri
