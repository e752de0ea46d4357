#include "polytri/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace polytri {

namespace {

// cpp_int accepts an optional '-' but not '+'.
std::string_view strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = strip(text);
    const size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        const std::string_view value = strip_plus(s);
        if (!is_integer_literal(value))
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        return Rational(BigInt(std::string(value)));
    }
    const std::string_view num = strip_plus(strip(s.substr(0, slash)));
    const std::string_view den = strip_plus(strip(s.substr(slash + 1)));
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    if (d < 0) {  // the canonical form keeps the sign in the numerator
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

std::string to_string(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) {
        s += '/';
        s += denominator(value).str();
    }
    return s;
}

double to_double(const Rational& value) { return static_cast<double>(value); }

double log_big_int(const BigInt& value) {
    if (value == 0) throw std::domain_error("log of zero");
    BigInt v = abs(value);
    const unsigned bits = msb(v);  // floor(log2 v)
    if (bits <= 900) return std::log(static_cast<double>(v));
    const unsigned shift = bits - 63;
    return std::log(static_cast<double>(v >> shift)) + shift * std::log(2.0);
}

double log_rational(const Rational& value) {
    if (value <= 0) throw std::domain_error("log of non-positive rational");
    return log_big_int(numerator(value)) - log_big_int(denominator(value));
}

BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper argument");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: product of i consecutive integers
    }
    return result;
}

Rational falling_binomial(long long x, long long i) {
    if (i < 0) return 0;
    BigInt num = 1;
    for (long long j = 0; j < i; ++j) num *= BigInt(x - j);
    return Rational(num, factorial(static_cast<unsigned>(i)));
}

BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace polytri
