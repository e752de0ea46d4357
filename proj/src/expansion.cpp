#include "polytri/expansion.hpp"

#include "polytri/triangle.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace polytri {

Rational MonomialExpansion::substitute(const ColorVector& colors) const {
    if (colors.degree() != m)
        throw std::invalid_argument("monomial expansion: color vector degree mismatch");
    Rational total = 0;
    for (const auto& [exponents, count] : terms) {
        Rational product(count);
        for (int i = 0; i <= m; ++i) {
            for (int e = 0; e < exponents[static_cast<size_t>(i)]; ++e) product *= colors[i];
        }
        total += product;
    }
    return total;
}

std::string MonomialExpansion::str() const {
    std::string out;
    for (const auto& [exponents, count] : terms) {
        if (!out.empty()) out += " + ";
        out += count.str();
        for (int i = 0; i <= m; ++i) {
            const int e = exponents[static_cast<size_t>(i)];
            if (e == 0) continue;
            out += " a" + std::to_string(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "0" : out;
}

MonomialExpansion monomial_expansion(int k, long long n, int m) {
    if (k < 0 || m < 1) throw std::invalid_argument("monomial expansion: bad arguments");
    MonomialExpansion result{k, n, m, {}};
    if (n < 0 || n > static_cast<long long>(m) * k) return result;

    // Walk exponent vectors (k_1..k_m) with sum <= k and weighted sum = n;
    // k_0 absorbs the remainder.
    std::vector<int> exponents(static_cast<size_t>(m) + 1, 0);
    const BigInt k_factorial = factorial(static_cast<unsigned>(k));
    std::function<void(int, int, long long)> walk = [&](int slot, int used, long long left) {
        if (slot == 0) {
            if (left != 0) return;
            exponents[0] = k - used;
            BigInt count = k_factorial;
            for (int i = 0; i <= m; ++i)
                count /= factorial(static_cast<unsigned>(exponents[static_cast<size_t>(i)]));
            result.terms.emplace(exponents, std::move(count));
            return;
        }
        const long long max_by_weight = left / slot;
        const int top = static_cast<int>(std::min<long long>(k - used, max_by_weight));
        for (int e = 0; e <= top; ++e) {
            exponents[static_cast<size_t>(slot)] = e;
            walk(slot - 1, used + e, left - static_cast<long long>(e) * slot);
        }
        exponents[static_cast<size_t>(slot)] = 0;
    };
    walk(m, 0, n);
    return result;
}

long long RestrictedPartition::weight() const {
    long long w = 0;
    for (size_t i = 0; i < multiplicity.size(); ++i)
        w += static_cast<long long>(i + 1) * multiplicity[i];
    return w;
}

int RestrictedPartition::length() const {
    int l = 0;
    for (int k_i : multiplicity) l += k_i;
    return l;
}

BigInt RestrictedPartition::arrangements() const {
    BigInt h = factorial(static_cast<unsigned>(length()));
    for (int k_i : multiplicity) h /= factorial(static_cast<unsigned>(k_i));
    return h;
}

Rational RestrictedPartition::weight_product(const ColorVector& colors) const {
    Rational w = 1;
    for (size_t i = 0; i < multiplicity.size(); ++i) {
        for (int e = 0; e < multiplicity[i]; ++e) w *= colors[static_cast<int>(i) + 1];
    }
    return w;
}

std::string RestrictedPartition::str() const {
    std::string out;
    for (size_t i = 0; i < multiplicity.size(); ++i) {
        for (int e = 0; e < multiplicity[i]; ++e) {
            if (!out.empty()) out += ' ';
            out += std::to_string(i + 1);
        }
    }
    return out.empty() ? "()" : "(" + out + ")";
}

std::vector<RestrictedPartition> restricted_partitions(long long n, int m) {
    if (m < 1) throw std::invalid_argument("restricted partitions: m must be positive");
    std::vector<RestrictedPartition> result;
    if (n < 0) return result;
    std::vector<int> mult(static_cast<size_t>(m), 0);
    std::function<void(int, long long)> walk = [&](int part, long long left) {
        if (part == 0) {
            if (left == 0) result.push_back(RestrictedPartition{mult});
            return;
        }
        const int top = static_cast<int>(left / part);
        for (int e = 0; e <= top; ++e) {
            mult[static_cast<size_t>(part) - 1] = e;
            walk(part - 1, left - static_cast<long long>(e) * part);
        }
        mult[static_cast<size_t>(part) - 1] = 0;
    };
    walk(m, n);
    return result;
}

Rational coeff_by_partitions(const ColorVector& colors, int k, long long n) {
    if (k < 0) throw std::invalid_argument("coeff_by_partitions: k must be nonnegative");
    const int m = colors.degree();
    if (m < 1) {
        if (n != 0) return 0;
        Rational p = 1;
        for (int e = 0; e < k; ++e) p *= colors[0];
        return p;
    }
    if (n < 0 || n > static_cast<long long>(m) * k) return 0;
    Rational total = 0;
    for (const RestrictedPartition& lambda : restricted_partitions(n, m)) {
        const int l = lambda.length();
        if (l > k) continue;  // C(k, l) = 0
        Rational term(lambda.arrangements() * binomial(k, l));
        // a_0^{k-l}; 0^0 = 1 when l = k.
        if (k - l > 0) {
            if (colors[0] == 0) continue;
            Rational a0_power = 1;
            for (int e = 0; e < k - l; ++e) a0_power *= colors[0];
            term *= a0_power;
        }
        term *= lambda.weight_product(colors);
        total += term;
    }
    return total;
}

Rational alpha(const ColorVector& colors, long long n, long long i) {
    const int m = colors.degree();
    if (m < 1) throw std::invalid_argument("alpha: requires degree >= 1");
    if (i < 0 || i > n) return 0;
    if (i > std::numeric_limits<int>::max()) throw std::invalid_argument("alpha: i too large");
    const ColorVector tail = colors.tail(1);
    if (tail.degree() == 0) {
        // m = 1: <i, n-i> over the constant (a_1) is a_1^i when n = i.
        if (n != i) return 0;
        Rational p = 1;
        for (long long e = 0; e < i; ++e) p *= tail[0];
        return p;
    }
    return poly_coeff(tail, static_cast<int>(i), n - i);
}

}  // namespace polytri
