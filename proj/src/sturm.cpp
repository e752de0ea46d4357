#include "polytri/sturm.hpp"

#include "polytri/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytri {

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

/// Cauchy bound: every real root lies in (-B, B].
Rational root_bound(const DensePolynomial& p) {
    const Rational lead = abs(p.coeff(p.degree()));
    Rational max_ratio = 0;
    for (int i = 0; i < p.degree(); ++i) {
        const Rational ratio = abs(p.coeff(i)) / lead;
        if (ratio > max_ratio) max_ratio = ratio;
    }
    return 1 + max_ratio;
}

}  // namespace

SturmChain SturmChain::build(const DensePolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm chain of the zero polynomial");
    SturmChain out;
    out.chain_.push_back(p.primitive_scaled());
    if (p.degree() == 0) return out;
    out.chain_.push_back(p.derivative().primitive_scaled());
    while (out.chain_.back().degree() > 0) {
        DensePolynomial rem =
            DensePolynomial::div_mod(out.chain_[out.chain_.size() - 2], out.chain_.back()).second;
        if (rem.is_zero()) break;
        out.chain_.push_back((-rem).primitive_scaled());
    }
    return out;
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const DensePolynomial& q : chain_) signs.push_back(sign_of(q(x)));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const DensePolynomial& q : chain_) {
        const int lead = sign_of(q.coeff(q.degree()));
        signs.push_back(q.degree() % 2 == 0 ? lead : -lead);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const DensePolynomial& q : chain_) signs.push_back(sign_of(q.coeff(q.degree())));
    return count_variations(signs);
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
    if (lo >= hi) return 0;
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

int sturm_real_root_count(const DensePolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmChain::build(p.squarefree_part()).count_roots();
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const DensePolynomial& p) {
    const DensePolynomial sf = p.squarefree_part();
    std::vector<std::pair<Rational, Rational>> isolated;
    if (sf.degree() == 0) return isolated;
    const SturmChain chain = SturmChain::build(sf);
    const Rational bound = root_bound(sf);

    struct Segment {
        Rational lo, hi;
        int roots;
    };
    std::vector<Segment> stack;
    {
        const int total = chain.count_roots(-bound, bound);
        if (total > 0) stack.push_back({-bound, bound, total});
    }
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        if (seg.roots == 1) {
            isolated.emplace_back(seg.lo, seg.hi);
            continue;
        }
        const Rational mid = (seg.lo + seg.hi) / 2;
        if (sf(mid) == 0) {
            isolated.emplace_back(mid, mid);
            // Exclude the hit root from both halves with a puncture small
            // enough to keep every other root on its side.
            Rational eps = (seg.hi - seg.lo) / 4;
            while (chain.count_roots(mid - eps, mid + eps) > 1) eps /= 2;
            const int left = chain.count_roots(seg.lo, mid - eps);
            const int right = chain.count_roots(mid + eps, seg.hi);
            if (left > 0) stack.push_back({seg.lo, mid - eps, left});
            if (right > 0) stack.push_back({mid + eps, seg.hi, right});
            continue;
        }
        const int left = chain.count_roots(seg.lo, mid);
        if (left > 0) stack.push_back({seg.lo, mid, left});
        if (seg.roots - left > 0) stack.push_back({mid, seg.hi, seg.roots - left});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return isolated;
}

double refine_root(const DensePolynomial& squarefree, std::pair<Rational, Rational> interval,
                   double width) {
    auto [lo, hi] = interval;
    if (lo == hi) return to_double(lo);
    // Sturm intervals are (lo, hi]; a simple root means opposite (or zero)
    // signs at the ends once we nudge the open end off any exact zero.
    int sign_lo = squarefree(lo) > 0 ? 1 : -1;
    const Rational at_hi = squarefree(hi);
    if (at_hi == 0) {
        // hi is the root; tighten from the left only.
        while (to_double(hi - lo) > width) {
            const Rational mid = (lo + hi) / 2;
            if (squarefree(mid) == 0) return to_double(mid);
            lo = mid;
        }
        return to_double(hi);
    }
    while (to_double(hi - lo) > width) {
        const Rational mid = (lo + hi) / 2;
        const Rational value = squarefree(mid);
        if (value == 0) return to_double(mid);
        if ((value > 0 ? 1 : -1) == sign_lo) lo = mid;
        else hi = mid;
    }
    return to_double((lo + hi) / 2);
}

ConjectureReport conjecture_scan(int m, int n_max) {
    if (m < 1) throw std::invalid_argument("conjecture scan: m must be positive");
    if (n_max < 0) throw std::invalid_argument("conjecture scan: n_max must be nonnegative");
    const ColorVector colors(std::vector<Rational>(static_cast<size_t>(m) + 1, Rational(1)));
    ConjectureReport report;
    report.m = m;
    report.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        ConjectureEntry entry;
        entry.n = n;
        const DensePolynomial p = p_polynomial(colors, n);
        const DensePolynomial stripped = p.shifted_down(p.trailing_order());
        entry.stripped_degree = stripped.degree();
        if (stripped.degree() == 0) {
            entry.squarefree_degree = 0;
            entry.distinct_real_roots = 0;
            entry.real_rooted = true;
        } else {
            const DensePolynomial sf = stripped.squarefree_part();
            entry.squarefree_degree = sf.degree();
            entry.distinct_real_roots = SturmChain::build(sf).count_roots();
            entry.real_rooted = entry.distinct_real_roots == sf.degree();
        }
        if (!entry.real_rooted) report.counterexamples.push_back(n);
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace polytri
