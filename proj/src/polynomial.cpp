#include "polytri/polynomial.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <stdexcept>

namespace polytri {

DensePolynomial::DensePolynomial(Rational constant) {
    if (constant != 0) coefficients_.push_back(std::move(constant));
}

DensePolynomial::DensePolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

DensePolynomial DensePolynomial::monomial(int exponent, Rational coefficient) {
    if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
    if (coefficient == 0) return {};
    std::vector<Rational> c(static_cast<size_t>(exponent) + 1, Rational(0));
    c.back() = std::move(coefficient);
    return DensePolynomial(std::move(c));
}

void DensePolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational DensePolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coefficients_.size())) return 0;
    return coefficients_[static_cast<size_t>(i)];
}

DensePolynomial DensePolynomial::operator+(const DensePolynomial& other) const {
    std::vector<Rational> out(std::max(coefficients_.size(), other.coefficients_.size()),
                              Rational(0));
    for (size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
    for (size_t i = 0; i < other.coefficients_.size(); ++i) out[i] += other.coefficients_[i];
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::operator-(const DensePolynomial& other) const {
    return *this + (-other);
}

DensePolynomial DensePolynomial::operator-() const {
    std::vector<Rational> out = coefficients_;
    for (Rational& c : out) c = -c;
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::operator*(const DensePolynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<Rational> out(coefficients_.size() + other.coefficients_.size() - 1, Rational(0));
    for (size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] == 0) continue;
        for (size_t j = 0; j < other.coefficients_.size(); ++j)
            out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::operator*(const Rational& scalar) const {
    if (scalar == 0) return {};
    std::vector<Rational> out = coefficients_;
    for (Rational& c : out) c *= scalar;
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::pow(unsigned exponent) const {
    DensePolynomial result{Rational(1)};
    DensePolynomial base = *this;
    while (exponent != 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent != 0) base = base * base;
    }
    return result;
}

DensePolynomial DensePolynomial::derivative() const {
    if (coefficients_.size() <= 1) return {};
    std::vector<Rational> out(coefficients_.size() - 1);
    for (size_t i = 1; i < coefficients_.size(); ++i) out[i - 1] = coefficients_[i] * i;
    return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> out(coefficients_.size() + 1, Rational(0));
    for (size_t i = 0; i < coefficients_.size(); ++i)
        out[i + 1] = coefficients_[i] / Rational(i + 1);
    return DensePolynomial(std::move(out));
}

Rational DensePolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = coefficients_.size(); i-- > 0;) acc = acc * x + coefficients_[i];
    return acc;
}

double DensePolynomial::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = coefficients_.size(); i-- > 0;)
        acc = acc * x + static_cast<double>(coefficients_[i]);
    return acc;
}

std::pair<DensePolynomial, DensePolynomial> DensePolynomial::div_mod(const DensePolynomial& num,
                                                                     const DensePolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    DensePolynomial rem = num;
    if (num.degree() < den.degree()) return {DensePolynomial{}, std::move(rem)};
    std::vector<Rational> quot(static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
    const Rational& lead = den.coefficients_.back();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const int shift = rem.degree() - den.degree();
        const Rational factor = rem.coefficients_.back() / lead;
        quot[static_cast<size_t>(shift)] = factor;
        // rem -= factor * u^shift * den
        for (size_t i = 0; i < den.coefficients_.size(); ++i)
            rem.coefficients_[static_cast<size_t>(shift) + i] -= factor * den.coefficients_[i];
        rem.trim();
    }
    return {DensePolynomial(std::move(quot)), std::move(rem)};
}

DensePolynomial DensePolynomial::gcd(DensePolynomial a, DensePolynomial b) {
    while (!b.is_zero()) {
        DensePolynomial r = div_mod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const Rational lead = a.coefficients_.back();
    return a * (Rational(1) / lead);
}

DensePolynomial DensePolynomial::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
    if (degree() == 0) return *this;
    const DensePolynomial g = gcd(*this, derivative());
    return div_mod(*this, g).first;
}

int DensePolynomial::trailing_order() const {
    for (size_t i = 0; i < coefficients_.size(); ++i)
        if (coefficients_[i] != 0) return static_cast<int>(i);
    return 0;
}

DensePolynomial DensePolynomial::shifted_down(int e) const {
    if (e == 0) return *this;
    if (trailing_order() < e) throw std::invalid_argument("shifted_down: u^e does not divide");
    return DensePolynomial(std::vector<Rational>(coefficients_.begin() + e, coefficients_.end()));
}

DensePolynomial DensePolynomial::primitive_scaled() const {
    if (is_zero()) return *this;
    BigInt den_lcm = 1;
    for (const Rational& c : coefficients_)
        den_lcm = boost::integer::lcm(den_lcm, denominator(c));
    BigInt num_gcd = 0;
    for (const Rational& c : coefficients_) {
        if (c == 0) continue;
        num_gcd = boost::integer::gcd(num_gcd, BigInt(numerator(c) * (den_lcm / denominator(c))));
    }
    return *this * Rational(den_lcm, num_gcd);
}

std::string DensePolynomial::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coefficients_.size(); ++i) {
        const Rational& c = coefficients_[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const Rational mag = abs(c);
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace polytri
