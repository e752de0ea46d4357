#pragma once

#include "polytri/polynomial.hpp"
#include "polytri/rational.hpp"

#include <utility>
#include <vector>

namespace polytri {

/// Sturm chain: p, p', then negated remainders.  Each element is scaled to a
/// primitive integer polynomial; positive scaling preserves sign variations.
class SturmChain {
  public:
    static SturmChain build(const DensePolynomial& p);

    const std::vector<DensePolynomial>& chain() const { return chain_; }

    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Distinct real roots in (lo, hi].
    int count_roots(const Rational& lo, const Rational& hi) const;
    /// Distinct real roots on the whole line.
    int count_roots() const;

  private:
    std::vector<DensePolynomial> chain_;
};

/// Number of distinct real roots of p (multiplicities collapsed via the
/// squarefree part before the chain is built).  Requires p nonzero.
int sturm_real_root_count(const DensePolynomial& p);

/// Disjoint intervals (lo, hi], each containing exactly one real root of the
/// squarefree part of p.  Exact roots hit during bisection come back as
/// degenerate [x, x] intervals.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const DensePolynomial& p);

/// Shrinks an isolating interval of sf by bisection (exact signs) until its
/// width is below `width`; returns the midpoint.
double refine_root(const DensePolynomial& squarefree, std::pair<Rational, Rational> interval,
                   double width);

struct ConjectureEntry {
    int n = 0;
    int stripped_degree = 0;       // degree after removing the u^ceil(n/m) factor
    int squarefree_degree = 0;
    int distinct_real_roots = 0;
    bool real_rooted = false;
};

struct ConjectureReport {
    int m = 0;
    int n_max = 0;
    std::vector<ConjectureEntry> entries;     // ascending n
    std::vector<int> counterexamples;

    bool all_real() const { return counterexamples.empty(); }
};

/// Scans the colorless column polynomials P_n for n <= n_max: strips the
/// trivial power of u, squarefrees, and checks by exact Sturm counting that
/// every remaining root is real.
ConjectureReport conjecture_scan(int m, int n_max);

}  // namespace polytri
