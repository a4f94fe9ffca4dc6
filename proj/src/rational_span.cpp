#include "weylpark/rational_span.hpp"

#include <algorithm>

namespace weylpark::linalg {

void canonicalize(IntVector& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        Key k = v[i].first;
        mpz_class c = std::move(v[i].second);
        for (++i; i < v.size() && v[i].first == k; ++i) c += v[i].second;
        if (c != 0) v[out++] = {k, std::move(c)};
    }
    v.resize(out);
}

void make_primitive(IntVector& v) {
    if (v.empty()) return;
    mpz_class g = 0;
    for (const auto& [k, c] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g == 1) return;
    for (auto& [k, c] : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntVector combine(const mpz_class& a, const IntVector& u, const mpz_class& b, const IntVector& w) {
    IntVector out;
    out.reserve(u.size() + w.size());
    std::size_t i = 0, j = 0;
    mpz_class t;
    while (i < u.size() || j < w.size()) {
        if (j == w.size() || (i < u.size() && u[i].first < w[j].first)) {
            out.emplace_back(u[i].first, a * u[i].second);
            ++i;
        } else if (i == u.size() || w[j].first < u[i].first) {
            out.emplace_back(w[j].first, -b * w[j].second);
            ++j;
        } else {
            t = a * u[i].second - b * w[j].second;
            if (t != 0) out.emplace_back(u[i].first, t);
            ++i, ++j;
        }
    }
    return out;
}

IntVector RationalSpan::reduce(IntVector v) const {
    std::size_t pos = 0;
    mpz_class g, a, b;
    while (pos < v.size()) {
        auto it = pivot_index_.find(v[pos].first);
        if (it == pivot_index_.end()) {
            ++pos;
            continue;
        }
        const IntVector& row = rows_[it->second];
        // row's pivot entry is its first one; everything else sits at larger keys,
        // so entries before pos are only rescaled.
        mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), v[pos].second.get_mpz_t());
        mpz_divexact(a.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), v[pos].second.get_mpz_t(), g.get_mpz_t());
        v = combine(a, v, b, row);
    }
    make_primitive(v);
    return v;
}

bool RationalSpan::insert(IntVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    pivot_index_.emplace(v.front().first, rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

std::vector<Key> RationalSpan::pivots() const {
    std::vector<Key> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row.front().first);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace weylpark::linalg
