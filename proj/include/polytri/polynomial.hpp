#pragma once

#include "polytri/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polytri {

/// Univariate polynomial with exact rational coefficients, stored densely by
/// exponent.  The coefficient of the reported degree is nonzero; the zero
/// polynomial has degree -1.
class DensePolynomial {
  public:
    DensePolynomial() = default;
    explicit DensePolynomial(Rational constant);
    explicit DensePolynomial(std::vector<Rational> coefficients);

    static DensePolynomial monomial(int exponent, Rational coefficient = Rational(1));

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    /// Coefficient of u^i; zero beyond the degree.
    Rational coeff(int i) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    DensePolynomial operator+(const DensePolynomial& other) const;
    DensePolynomial operator-(const DensePolynomial& other) const;
    DensePolynomial operator-() const;
    DensePolynomial operator*(const DensePolynomial& other) const;
    DensePolynomial operator*(const Rational& scalar) const;
    DensePolynomial pow(unsigned exponent) const;

    DensePolynomial derivative() const;
    /// Formal antiderivative with zero constant term.
    DensePolynomial antiderivative() const;

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    /// Euclidean division; remainder degree < divisor degree.
    static std::pair<DensePolynomial, DensePolynomial> div_mod(const DensePolynomial& num,
                                                               const DensePolynomial& den);
    /// Monic gcd.
    static DensePolynomial gcd(DensePolynomial a, DensePolynomial b);

    /// p / gcd(p, p'): same roots, all simple.
    DensePolynomial squarefree_part() const;

    /// Multiplicity of the root 0 (0 for the zero polynomial).
    int trailing_order() const;
    /// Divides by u^e; requires trailing_order() >= e.
    DensePolynomial shifted_down(int e) const;

    /// Scales by a positive rational so coefficients are coprime integers.
    DensePolynomial primitive_scaled() const;

    bool operator==(const DensePolynomial& other) const = default;

    std::string str(std::string_view var = "u") const;

  private:
    void trim();

    std::vector<Rational> coefficients_;  // empty means zero
};

}  // namespace polytri
