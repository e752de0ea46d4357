#include "polytri/color_vector.hpp"

#include <numeric>
#include <stdexcept>

namespace polytri {

namespace {

std::vector<Rational> trimmed(std::vector<Rational> entries) {
    while (!entries.empty() && entries.back() == 0) entries.pop_back();
    if (entries.empty()) throw std::invalid_argument("color vector: all entries are zero");
    return entries;
}

}  // namespace

ColorVector::ColorVector(std::vector<Rational> entries) : entries_(trimmed(std::move(entries))) {}

ColorVector::ColorVector(std::initializer_list<Rational> entries)
    : ColorVector(std::vector<Rational>(entries)) {}

ColorVector ColorVector::parse(std::string_view text) {
    std::vector<Rational> entries;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        entries.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return ColorVector(std::move(entries));
}

bool ColorVector::nonnegative() const {
    for (const Rational& a : entries_)
        if (a < 0) return false;
    return true;
}

bool ColorVector::palindromic() const {
    const int m = degree();
    for (int i = 0; 2 * i <= m; ++i)
        if ((*this)[i] != (*this)[m - i]) return false;
    return true;
}

bool ColorVector::aperiodic() const {
    long long g = 0;
    for (int i = 1; i <= degree(); ++i)
        if ((*this)[i] != 0) g = std::gcd(g, static_cast<long long>(i));
    return g == 1;
}

Rational ColorVector::weight_sum() const {
    Rational total = 0;
    for (const Rational& a : entries_) total += a;
    return total;
}

Rational ColorVector::mean_occupancy() const {
    const Rational total = weight_sum();
    if (total == 0) throw std::domain_error("mean occupancy: weights sum to zero");
    Rational first_moment = 0;
    for (int i = 0; i <= degree(); ++i) first_moment += i * (*this)[i];
    return first_moment / total;
}

ColorVector ColorVector::reversed() const {
    return ColorVector(std::vector<Rational>(entries_.rbegin(), entries_.rend()));
}

ColorVector ColorVector::tail(int p) const {
    if (p < 0 || p > degree()) throw std::out_of_range("color vector tail index");
    return ColorVector(std::vector<Rational>(entries_.begin() + p, entries_.end()));
}

int ColorVector::min_support() const {
    for (int i = 0; i <= degree(); ++i)
        if ((*this)[i] != 0) return i;
    return degree();  // unreachable: the all-zero vector is rejected
}

bool ColorVector::operator<(const ColorVector& other) const {
    return entries_ < other.entries_;
}

std::string ColorVector::str() const {
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        if (i) out += ',';
        out += to_string((*this)[i]);
    }
    return out;
}

}  // namespace polytri
