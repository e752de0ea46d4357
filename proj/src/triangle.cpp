#include "polytri/triangle.hpp"

#include <map>
#include <stdexcept>

namespace polytri {

Triangle::Triangle(ColorVector colors) : colors_(std::move(colors)) {
    rows_.push_back(Row{Rational(1)});
}

void Triangle::extend(int k) const {
    // Addition/Induction: row k is the convolution of row k-1 with a.
    const int m = colors_.degree();
    while (static_cast<int>(rows_.size()) <= k) {
        const Row& prev = rows_.back();
        Row next(prev.size() + static_cast<size_t>(m), Rational(0));
        for (size_t i = 0; i < prev.size(); ++i) {
            if (prev[i] == 0) continue;
            for (int j = 0; j <= m; ++j) {
                if (colors_[j] == 0) continue;
                next[i + static_cast<size_t>(j)] += prev[i] * colors_[j];
            }
        }
        rows_.push_back(std::move(next));
    }
}

Row Triangle::row(int k) const {
    if (k < 0) throw std::invalid_argument("triangle row index must be nonnegative");
    std::lock_guard<std::mutex> lock(mutex_);
    extend(k);
    return rows_[static_cast<size_t>(k)];
}

Rational Triangle::coeff(int k, long long n) const {
    if (k < 0) throw std::invalid_argument("triangle row index must be nonnegative");
    if (n < 0 || n > static_cast<long long>(colors_.degree()) * k) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    extend(k);
    return rows_[static_cast<size_t>(k)][static_cast<size_t>(n)];
}

namespace {

std::mutex g_cache_mutex;
std::map<std::vector<Rational>, std::shared_ptr<const Triangle>>& cache() {
    static auto* instance = new std::map<std::vector<Rational>, std::shared_ptr<const Triangle>>();
    return *instance;
}

}  // namespace

std::shared_ptr<const Triangle> triangle(const ColorVector& colors) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto& entry = cache()[colors.entries()];
    if (!entry) entry = std::make_shared<Triangle>(colors);
    return entry;
}

Rational poly_coeff(const ColorVector& colors, int k, long long n) {
    return triangle(colors)->coeff(k, n);
}

Row triangle_row(const ColorVector& colors, int k) { return triangle(colors)->row(k); }

std::vector<Rational> score_distribution(const ColorVector& colors, int k) {
    if (!colors.nonnegative())
        throw std::domain_error("score distribution: negative weight");
    const Rational total = colors.weight_sum();
    if (total == 0) throw std::domain_error("score distribution: weights sum to zero");
    Row row = triangle_row(colors, k);
    Rational norm = 1;
    for (int i = 0; i < k; ++i) norm *= total;
    for (Rational& p : row) p /= norm;
    return row;
}

}  // namespace polytri
