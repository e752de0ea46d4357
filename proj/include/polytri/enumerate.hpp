#pragma once

#include "polytri/color_vector.hpp"
#include "polytri/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace polytri {

/// Brute-force enumeration is desk-scale by design: states = (m+1)^k.
struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws EnumerationCapExceeded when (m+1)^k > 1e8.
void check_enumeration_cap(int m, int k);

/// Occupancy shape of k boxes holding n balls, at most m per box; part i
/// carries weight a_i.
struct Composition {
    std::vector<int> parts;  // n_1 ... n_k, each in [0, m]

    long long total() const;
    Rational weight(const ColorVector& colors) const;
};

/// All occupancy shapes (n_1..n_k) with sum n, parts <= m, lexicographic.
std::vector<Composition> compositions(int k, long long n, int m);

/// Directed path of k simple steps; step label i has vertical displacement
/// i - m/2, kept exact as the rational (2i - m)/2.
struct LatticePath {
    std::vector<int> labels;  // step labels s_{i} by index i in [0, m]

    Rational end_altitude(int m) const;
    Rational weight(const ColorVector& colors) const;
};

/// sum over occupancy shapes of n with k parts <= m of prod a_{n_i};
/// equals <k,n>_a.
Rational occupancy_oracle(const ColorVector& colors, int k, long long n);

/// Weighted count of k-step paths from the origin ending at altitude
/// n - mk/2; enumerated over step sequences, independently of the occupancy
/// route.
Rational lattice_path_count(const ColorVector& colors, int k, long long n);

/// All paths counted by lattice_path_count(colors, k, n), for the bijection
/// test against compositions.
std::vector<LatticePath> enumerate_lattice_paths(const ColorVector& colors, int k, long long n);

/// Weighted count of length-k spin sequences with projections in
/// {-m/2, ..., m/2} and mean exactly `magnetization`; projection i - m/2 is
/// weighted a_i.
Rational spin_config_count(const ColorVector& colors, int k, const Rational& magnetization);

/// [q^n] of the Gaussian binomial [k+m choose k]_q: the number of partitions
/// of n inside a k x m box.
BigInt gaussian_shape_count(int k, int m, long long n);

/// Empirical score distribution from `trials` simulated games of k draws.
/// Sampling is reproducible across platforms: mt19937_64 seeded directly,
/// one draw per 53-bit uniform, inverted against the cumulative weights
/// (exact rationals rounded once to binary64).
struct EmpiricalDistribution {
    std::vector<Rational> frequencies;  // counts / trials, exact
    long long trials = 0;

    /// Total-variation distance to an exact distribution of equal length.
    Rational tv_distance(const std::vector<Rational>& exact) const;
};

EmpiricalDistribution sample_scores(const ColorVector& colors, int k, long long trials,
                                    uint64_t seed);

}  // namespace polytri
