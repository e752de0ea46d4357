#include "polytri/identities.hpp"

#include "polytri/expansion.hpp"
#include "polytri/triangle.hpp"

#include <stdexcept>

namespace polytri {

namespace {

// Sweeps over auxiliary parameters (the pretty identity's p and n, the
// binomial theorem's evaluation points) are windowed so the full catalogue
// stays desk-scale at k_max = 10.
constexpr int kPrettyWindow = 8;

struct Check {
    IdentityReport report;

    explicit Check(IdentityId id, const ColorVector& colors, int k_max)
        : report{id, identity_tag(id), colors, k_max, IdentityReport::Status::Passed, "", {}} {}

    void expect_equal(std::string where, const Rational& lhs, const Rational& rhs) {
        if (lhs == rhs) return;
        report.status = IdentityReport::Status::Failed;
        report.counterexamples.push_back({std::move(where), to_string(lhs), to_string(rhs)});
    }
};

std::string at(int k, long long n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

void check_symmetry(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    const ColorVector ja = a.reversed();
    for (int k = 0; k <= k_max; ++k) {
        const long long top = static_cast<long long>(m) * k;
        for (long long n = -1; n <= top + 1; ++n)
            c.expect_equal(at(k, n), poly_coeff(a, k, n), poly_coeff(ja, k, top - n));
    }
}

void check_absorption(Check& c, const ColorVector& a, int k_max) {
    // Multiplied through by n: n <k,n> = k sum_{i>=1} i a_i <k-1, n-i>.
    const int m = a.degree();
    for (int k = 1; k <= k_max; ++k) {
        for (long long n = 0; n <= static_cast<long long>(m) * k; ++n) {
            Rational rhs = 0;
            for (int i = 1; i <= m; ++i) rhs += i * a[i] * poly_coeff(a, k - 1, n - i);
            c.expect_equal(at(k, n), n * poly_coeff(a, k, n), k * rhs);
        }
    }
}

void check_vandermonde(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    for (int r = 0; r <= k_max; ++r) {
        for (int s = 0; r + s <= k_max; ++s) {
            for (long long n = 0; n <= static_cast<long long>(m) * (r + s); ++n) {
                Rational lhs = 0;
                for (long long i = 0; i <= n; ++i)
                    lhs += poly_coeff(a, r, i) * poly_coeff(a, s, n - i);
                c.expect_equal("r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                   " n=" + std::to_string(n),
                               lhs, poly_coeff(a, r + s, n));
            }
        }
    }
}

void check_addition(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    for (int k = 1; k <= k_max; ++k) {
        for (long long n = 0; n <= static_cast<long long>(m) * k; ++n) {
            Rational rhs = 0;
            for (int i = 0; i <= m; ++i) rhs += a[i] * poly_coeff(a, k - 1, n - i);
            c.expect_equal(at(k, n), poly_coeff(a, k, n), rhs);
        }
    }
}

void check_binomial_theorem(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    const std::pair<Rational, Rational> points[] = {
        {Rational(1), Rational(1)},      {Rational(2), Rational(1)},
        {Rational(1, 2), Rational(-3)},  {Rational(-2), Rational(3)},
        {Rational(2, 3), Rational(1, 5)}};
    for (const auto& [x, y] : points) {
        Rational base = 0;
        for (int i = 0; i <= m; ++i) {
            Rational t = a[i];
            for (int e = 0; e < i; ++e) t *= x;
            for (int e = 0; e < m - i; ++e) t *= y;
            base += t;
        }
        Rational rhs = 1;
        for (int k = 0; k <= k_max; ++k) {
            Rational lhs = 0;
            const long long top = static_cast<long long>(m) * k;
            Rational x_power = 1;
            for (long long n = 0; n <= top; ++n) {
                Rational t = poly_coeff(a, k, n) * x_power;
                for (long long e = 0; e < top - n; ++e) t *= y;
                lhs += t;
                x_power *= x;
            }
            c.expect_equal("k=" + std::to_string(k) + " x=" + to_string(x) + " y=" + to_string(y),
                           lhs, rhs);
            rhs *= base;
        }
    }
}

void check_upper_sum(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    for (int p = 0; p <= k_max; ++p) {
        for (long long n = 0; n <= static_cast<long long>(m) * k_max; ++n) {
            Rational lhs = 0;
            Rational a0_pow = 1;  // a_0^{-k}
            for (int k = 0; k <= p; ++k) {
                lhs += poly_coeff(a, k, n) * a0_pow;
                a0_pow /= a[0];
            }
            Rational rhs = 0;
            for (long long i = 0; i <= n; ++i) {
                const Rational al = alpha(a, n, i);
                if (al == 0) continue;
                Rational t = al * binomial(p + 1, i + 1);
                for (long long e = 0; e < i; ++e) t /= a[0];
                rhs += t;
            }
            c.expect_equal("p=" + std::to_string(p) + " n=" + std::to_string(n), lhs, rhs);
        }
    }
}

void check_upper_negation(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    for (int k = 0; k <= k_max; ++k) {
        for (long long n = 0; n <= static_cast<long long>(m) * k; ++n) {
            Rational rhs = 0;
            for (long long i = 0; i <= n; ++i) {
                const Rational al = alpha(a, n, i);
                if (al == 0) continue;
                Rational t = al * falling_binomial(i - k - 1, i);
                if (i % 2 != 0) t = -t;
                // a_0^{k-i}, negative exponents included.
                for (long long e = 0; e < k - i; ++e) t *= a[0];
                for (long long e = 0; e < i - k; ++e) t /= a[0];
                rhs += t;
            }
            c.expect_equal(at(k, n), poly_coeff(a, k, n), rhs);
        }
    }
}

void check_recurrence_n(Check& c, const ColorVector& a, int k_max) {
    // Multiplied through by n a_0:
    // n a_0 <k,n> = sum_{l=1}^m ((k+1)l - n) a_l <k, n-l>.
    const int m = a.degree();
    for (int k = 0; k <= k_max; ++k) {
        for (long long n = 1; n <= static_cast<long long>(m) * k; ++n) {
            Rational rhs = 0;
            for (int l = 1; l <= m; ++l)
                rhs += (static_cast<long long>(k + 1) * l - n) * a[l] * poly_coeff(a, k, n - l);
            c.expect_equal(at(k, n), n * a[0] * poly_coeff(a, k, n), rhs);
        }
    }
}

void check_pretty(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    const ColorVector ja = a.reversed();
    for (int r = 0; r <= k_max; ++r) {
        for (int s = 0; r + s <= k_max; ++s) {
            const long long p_top = std::min<long long>(static_cast<long long>(m) * r, kPrettyWindow);
            const long long n_top = std::min<long long>(static_cast<long long>(m) * s, kPrettyWindow);
            for (long long p = 0; p <= p_top; ++p) {
                for (long long n = 0; n <= n_top; ++n) {
                    Rational lhs = 0;
                    const long long lo = -std::min(p, n);
                    const long long hi = std::min(static_cast<long long>(m) * r - p,
                                                  static_cast<long long>(m) * s - n);
                    for (long long l = lo; l <= hi; ++l)
                        lhs += poly_coeff(ja, r, p + l) * poly_coeff(a, s, n + l);
                    const std::string where = "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                              " p=" + std::to_string(p) + " n=" + std::to_string(n);
                    c.expect_equal(where, lhs,
                                   poly_coeff(a, r + s, static_cast<long long>(m) * r - p + n));
                    c.expect_equal(where, lhs,
                                   poly_coeff(ja, r + s, static_cast<long long>(m) * s + p - n));
                }
            }
        }
    }
}

void check_squares(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    for (int k = 0; k <= k_max; ++k) {
        Rational lhs = 0;
        for (const Rational& v : triangle_row(a, k)) lhs += v * v;
        c.expect_equal("k=" + std::to_string(k), lhs,
                       poly_coeff(a, 2 * k, static_cast<long long>(m) * k));
    }
}

void check_min_occupancy_shift(Check& c, const ColorVector& a, int k_max) {
    const int m = a.degree();
    const int p = a.min_support();
    const ColorVector shifted = a.tail(p);
    for (int k = 0; k <= k_max; ++k) {
        for (long long n = 0; n <= static_cast<long long>(m) * k; ++n) {
            const Rational rhs = n >= static_cast<long long>(k) * p
                                     ? poly_coeff(shifted, k, n - static_cast<long long>(k) * p)
                                     : Rational(0);
            c.expect_equal(at(k, n), poly_coeff(a, k, n), rhs);
        }
    }
}

void check_gegenbauer_recurrences(Check& c, const ColorVector& a, int k_max, IdentityId id) {
    for (int k = 0; k <= k_max; ++k) {
        for (long long n = 0; n <= 2LL * k + 1; ++n) {
            Rational lhs, rhs;
            switch (id) {
                case IdentityId::GegenRec1:
                    if (k < 2) continue;
                    lhs = (2LL * k - n - 1) * (2LL * k - n) * poly_coeff(a, k, n);
                    rhs = static_cast<long long>(k) * (7LL * k - 3 * n - 5) *
                              poly_coeff(a, k - 1, n) -
                          3LL * (k - 1) * k * poly_coeff(a, k - 2, n);
                    break;
                case IdentityId::GegenRec2:
                    lhs = 2 * (k + 1) * poly_coeff(a, k, n);
                    rhs = (2LL * k - n + 2) * poly_coeff(a, k + 1, n) -
                          (k + 1) * poly_coeff(a, k, n - 1);
                    break;
                default:  // GegenRec3
                    if (k < 2) continue;
                    lhs = n * (2LL * k - n) * poly_coeff(a, k, n);
                    rhs = static_cast<long long>(k) * (2LL * k - 1) * poly_coeff(a, k - 1, n - 1) +
                          3LL * (k - 1) * k * poly_coeff(a, k - 2, n - 2);
                    break;
            }
            c.expect_equal(at(k, n), lhs, rhs);
        }
    }
}

bool is_colorless_trinomial(const ColorVector& a) {
    return a.degree() == 2 && a[0] == 1 && a[1] == 1 && a[2] == 1;
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = {
        IdentityId::Symmetry,    IdentityId::Absorption, IdentityId::Vandermonde,
        IdentityId::Addition,    IdentityId::BinomialThm, IdentityId::UpperSum,
        IdentityId::UpperNeg,    IdentityId::RecurrenceN, IdentityId::Pretty,
        IdentityId::Squares,     IdentityId::MinOccShift, IdentityId::GegenRec1,
        IdentityId::GegenRec2,   IdentityId::GegenRec3,
    };
    return ids;
}

std::string identity_tag(IdentityId id) {
    switch (id) {
        case IdentityId::Symmetry: return "SYMMETRY";
        case IdentityId::Absorption: return "ABSORPTION";
        case IdentityId::Vandermonde: return "VANDERMONDE";
        case IdentityId::Addition: return "ADDITION";
        case IdentityId::BinomialThm: return "BINOMIAL_THM";
        case IdentityId::UpperSum: return "UPPER_SUM";
        case IdentityId::UpperNeg: return "UPPER_NEG";
        case IdentityId::RecurrenceN: return "RECURRENCE_N";
        case IdentityId::Pretty: return "PRETTY";
        case IdentityId::Squares: return "SQUARES";
        case IdentityId::MinOccShift: return "MIN_OCC_SHIFT";
        case IdentityId::GegenRec1: return "GEGEN_REC1";
        case IdentityId::GegenRec2: return "GEGEN_REC2";
        case IdentityId::GegenRec3: return "GEGEN_REC3";
    }
    throw std::logic_error("unknown identity");
}

std::optional<IdentityId> parse_identity_tag(std::string_view tag) {
    for (IdentityId id : all_identities())
        if (identity_tag(id) == tag) return id;
    return std::nullopt;
}

IdentityReport verify_identity(IdentityId id, const ColorVector& colors, int k_max) {
    if (k_max < 1) throw std::invalid_argument("verify_identity: k_max must be positive");
    Check c(id, colors, k_max);
    auto reject = [&](std::string reason) {
        c.report.status = IdentityReport::Status::Rejected;
        c.report.rejection_reason = std::move(reason);
        return c.report;
    };

    switch (id) {
        case IdentityId::Symmetry:
        case IdentityId::Pretty:
            // Reversal must keep genuine degree for the index arithmetic to line up.
            if (colors[0] == 0) return reject("requires a_0 != 0 (reversal drops the degree)");
            break;
        case IdentityId::UpperSum:
        case IdentityId::UpperNeg:
        case IdentityId::RecurrenceN:
            if (colors[0] == 0) return reject("requires a_0 != 0 (a_0 appears in a denominator)");
            break;
        case IdentityId::Squares:
            if (!colors.palindromic()) return reject("requires palindromic a");
            break;
        case IdentityId::GegenRec1:
        case IdentityId::GegenRec2:
        case IdentityId::GegenRec3:
            if (!is_colorless_trinomial(colors))
                return reject("requires the colorless m=2 vector (1,1,1)");
            break;
        default:
            break;
    }
    if (colors.degree() < 1) return reject("requires degree m >= 1");

    switch (id) {
        case IdentityId::Symmetry: check_symmetry(c, colors, k_max); break;
        case IdentityId::Absorption: check_absorption(c, colors, k_max); break;
        case IdentityId::Vandermonde: check_vandermonde(c, colors, k_max); break;
        case IdentityId::Addition: check_addition(c, colors, k_max); break;
        case IdentityId::BinomialThm: check_binomial_theorem(c, colors, k_max); break;
        case IdentityId::UpperSum: check_upper_sum(c, colors, k_max); break;
        case IdentityId::UpperNeg: check_upper_negation(c, colors, k_max); break;
        case IdentityId::RecurrenceN: check_recurrence_n(c, colors, k_max); break;
        case IdentityId::Pretty: check_pretty(c, colors, k_max); break;
        case IdentityId::Squares: check_squares(c, colors, k_max); break;
        case IdentityId::MinOccShift: check_min_occupancy_shift(c, colors, k_max); break;
        case IdentityId::GegenRec1:
        case IdentityId::GegenRec2:
        case IdentityId::GegenRec3: check_gegenbauer_recurrences(c, colors, k_max, id); break;
    }
    return c.report;
}

}  // namespace polytri
