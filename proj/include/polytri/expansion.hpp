#pragma once

#include "polytri/color_vector.hpp"
#include "polytri/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace polytri {

/// Symbolic multinomial form of <k,n>_a: maps each exponent vector
/// (k_0, ..., k_m) with sum k_i = k and sum i*k_i = n to its multinomial
/// count k! / prod k_i!.
struct MonomialExpansion {
    int k = 0;
    long long n = 0;
    int m = 0;
    std::map<std::vector<int>, BigInt> terms;

    /// Substitutes numeric weights; reproduces <k,n>_a exactly.
    Rational substitute(const ColorVector& colors) const;
    std::string str() const;
};

MonomialExpansion monomial_expansion(int k, long long n, int m);

/// Partition lambda = 1^{k_1} 2^{k_2} ... m^{k_m} of weight sum i*k_i with
/// all parts <= m.
struct RestrictedPartition {
    std::vector<int> multiplicity;  // k_1 ... k_m

    long long weight() const;
    int length() const;                       // l(lambda) = sum k_i
    BigInt arrangements() const;              // h(lambda) = l! / prod k_i!
    Rational weight_product(const ColorVector& colors) const;  // prod a_i^{k_i}
    std::string str() const;
};

/// All partitions of n with parts <= m, in deterministic order.
std::vector<RestrictedPartition> restricted_partitions(long long n, int m);

/// <k,n>_a via the partition sum: sum over lambda |- n, parts <= m, of
/// a_0^{k-l(lambda)} h(lambda) w_a(lambda) C(k, l(lambda)).  Independent of
/// the row-recurrence path.
Rational coeff_by_partitions(const ColorVector& colors, int k, long long n);

/// alpha_{n,i} = <i, n-i> over the truncated vector (a_1, ..., a_m);
/// zero outside ceil(n/m) <= i <= n.  Requires degree >= 1.
Rational alpha(const ColorVector& colors, long long n, long long i);

}  // namespace polytri
