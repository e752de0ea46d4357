#include "polytri/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace polytri {

void check_enumeration_cap(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("enumeration: bad arguments");
    if (k * std::log(static_cast<double>(m) + 1.0) > std::log(1e8))
        throw EnumerationCapExceeded("enumeration refused: (m+1)^k exceeds 1e8 states");
}

long long Composition::total() const {
    long long t = 0;
    for (int p : parts) t += p;
    return t;
}

Rational Composition::weight(const ColorVector& colors) const {
    Rational w = 1;
    for (int p : parts) w *= colors[p];
    return w;
}

std::vector<Composition> compositions(int k, long long n, int m) {
    std::vector<Composition> out;
    if (n < 0 || n > static_cast<long long>(m) * k) return out;
    if (k == 0) {
        if (n == 0) out.push_back(Composition{{}});
        return out;
    }
    std::vector<int> parts(static_cast<size_t>(k), 0);
    // Lexicographic walk over [0,m]^k keeping a running remainder.
    auto walk = [&](auto&& self, int slot, long long left) -> void {
        if (slot == k) {
            if (left == 0) out.push_back(Composition{parts});
            return;
        }
        const long long remaining_slots = k - slot - 1;
        for (int v = 0; v <= m; ++v) {
            const long long rest = left - v;
            if (rest < 0) break;
            if (rest > remaining_slots * m) continue;
            parts[static_cast<size_t>(slot)] = v;
            self(self, slot + 1, rest);
        }
        parts[static_cast<size_t>(slot)] = 0;
    };
    walk(walk, 0, n);
    return out;
}

Rational occupancy_oracle(const ColorVector& colors, int k, long long n) {
    const int m = colors.degree();
    check_enumeration_cap(m, k);
    if (n < 0 || n > static_cast<long long>(m) * k) return 0;
    Rational total = 0;
    for (const Composition& shape : compositions(k, n, m)) total += shape.weight(colors);
    return total;
}

Rational LatticePath::end_altitude(int m) const {
    Rational altitude = 0;
    for (int label : labels) altitude += Rational(2 * label - m, 2);
    return altitude;
}

Rational LatticePath::weight(const ColorVector& colors) const {
    Rational w = 1;
    for (int label : labels) w *= colors[label];
    return w;
}

namespace {

/// Walks every k-step label sequence, tracking the altitude in exact halves.
template <typename Visit>
void walk_paths(int m, int k, Visit&& visit) {
    std::vector<int> labels(static_cast<size_t>(k), 0);
    auto rec = [&](auto&& self, int step, long long twice_altitude) -> void {
        if (step == k) {
            visit(labels, twice_altitude);
            return;
        }
        for (int label = 0; label <= m; ++label) {
            labels[static_cast<size_t>(step)] = label;
            self(self, step + 1, twice_altitude + (2LL * label - m));
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

Rational lattice_path_count(const ColorVector& colors, int k, long long n) {
    const int m = colors.degree();
    check_enumeration_cap(m, k);
    // Target altitude n - mk/2, in halves: 2n - mk.
    const long long target = 2 * n - static_cast<long long>(m) * k;
    Rational total = 0;
    walk_paths(m, k, [&](const std::vector<int>& labels, long long twice_altitude) {
        if (twice_altitude != target) return;
        Rational w = 1;
        for (int label : labels) w *= colors[label];
        total += w;
    });
    return total;
}

std::vector<LatticePath> enumerate_lattice_paths(const ColorVector& colors, int k, long long n) {
    const int m = colors.degree();
    check_enumeration_cap(m, k);
    const long long target = 2 * n - static_cast<long long>(m) * k;
    std::vector<LatticePath> out;
    walk_paths(m, k, [&](const std::vector<int>& labels, long long twice_altitude) {
        if (twice_altitude == target) out.push_back(LatticePath{labels});
    });
    return out;
}

Rational spin_config_count(const ColorVector& colors, int k, const Rational& magnetization) {
    const int m = colors.degree();
    check_enumeration_cap(m, k);
    if (k == 0) return magnetization == 0 ? Rational(1) : Rational(0);
    // Mean projection M = (sum (label_i - m/2)) / k, tracked in halves.
    const Rational target_sum = magnetization * k * 2;
    if (denominator(target_sum) != 1) return 0;
    Rational total = 0;
    walk_paths(m, k, [&](const std::vector<int>& labels, long long twice_sum) {
        if (Rational(twice_sum) != target_sum) return;
        Rational w = 1;
        for (int label : labels) w *= colors[label];
        total += w;
    });
    return total;
}

BigInt gaussian_shape_count(int k, int m, long long n) {
    if (k < 0 || m < 0) throw std::invalid_argument("gaussian shape count: bad arguments");
    if (n < 0 || n > static_cast<long long>(k) * m) return 0;
    // [N, j]_q by the q-Pascal recurrence [N, j] = [N-1, j-1] + q^j [N-1, j];
    // row N keeps the polynomial for j = min(k, ...) ... we only need the
    // final [k+m, k]_q, building up one column against row order.
    std::vector<std::vector<BigInt>> previous_row;  // [N-1][j] -> coefficient list
    previous_row.push_back({BigInt(1)});            // [0,0]_q = 1
    for (int upper = 1; upper <= k + m; ++upper) {
        std::vector<std::vector<BigInt>> row;
        row.reserve(static_cast<size_t>(upper) + 1);
        for (int j = 0; j <= upper; ++j) {
            if (j == 0 || j == upper) {
                row.push_back({BigInt(1)});
                continue;
            }
            const std::vector<BigInt>& no_shift = previous_row[static_cast<size_t>(j) - 1];
            const std::vector<BigInt>& shifted = previous_row[static_cast<size_t>(j)];
            std::vector<BigInt> sum(std::max(no_shift.size(), shifted.size() + static_cast<size_t>(j)),
                                    BigInt(0));
            for (size_t i = 0; i < no_shift.size(); ++i) sum[i] += no_shift[i];
            for (size_t i = 0; i < shifted.size(); ++i) sum[i + static_cast<size_t>(j)] += shifted[i];
            row.push_back(std::move(sum));
        }
        previous_row = std::move(row);
    }
    const std::vector<BigInt>& result = previous_row[static_cast<size_t>(k)];
    return n < static_cast<long long>(result.size()) ? result[static_cast<size_t>(n)] : BigInt(0);
}

EmpiricalDistribution sample_scores(const ColorVector& colors, int k, long long trials,
                                    uint64_t seed) {
    if (!colors.nonnegative()) throw std::domain_error("sample_scores: negative weight");
    if (colors.weight_sum() == 0) throw std::domain_error("sample_scores: weights sum to zero");
    if (k < 0 || trials <= 0) throw std::invalid_argument("sample_scores: bad arguments");
    const int m = colors.degree();

    // Cumulative inversion: exact rational cumulative weights, rounded once.
    std::vector<double> cumulative(static_cast<size_t>(m) + 1);
    {
        const Rational total = colors.weight_sum();
        Rational acc = 0;
        for (int i = 0; i <= m; ++i) {
            acc += colors[i];
            cumulative[static_cast<size_t>(i)] = to_double(acc / total);
        }
        cumulative.back() = 1.0;  // guard against rounding below the last draw
    }

    std::mt19937_64 rng(seed);
    std::vector<long long> counts(static_cast<size_t>(m) * k + 1, 0);
    for (long long t = 0; t < trials; ++t) {
        long long score = 0;
        for (int draw = 0; draw < k; ++draw) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            score += static_cast<long long>(it - cumulative.begin());
        }
        ++counts[static_cast<size_t>(score)];
    }

    EmpiricalDistribution out;
    out.trials = trials;
    out.frequencies.reserve(counts.size());
    for (long long c : counts) out.frequencies.emplace_back(Rational(c, trials));
    return out;
}

Rational EmpiricalDistribution::tv_distance(const std::vector<Rational>& exact) const {
    if (exact.size() != frequencies.size())
        throw std::invalid_argument("tv distance: length mismatch");
    Rational total = 0;
    for (size_t i = 0; i < exact.size(); ++i) total += abs(frequencies[i] - exact[i]);
    return total / 2;
}

}  // namespace polytri
