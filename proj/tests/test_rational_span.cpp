#include "weylpark/rational_span.hpp"

#include <doctest.h>

#include <random>

using namespace weylpark::linalg;

namespace {

// Dense rank over Q by plain Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

IntVector sparse(const std::vector<int>& dense) {
    IntVector v;
    for (std::size_t k = 0; k < dense.size(); ++k)
        if (dense[k] != 0) v.emplace_back(k, dense[k]);
    return v;
}

}  // namespace

TEST_CASE("canonical form") {
    IntVector v{{5, 2}, {1, -4}, {5, -2}, {3, 6}};
    canonicalize(v);
    CHECK(v == IntVector{{1, -4}, {3, 6}});
    make_primitive(v);
    CHECK(v == IntVector{{1, 2}, {3, -3}});
    CHECK(combine(2, IntVector{{0, 1}, {1, 1}}, 1, IntVector{{0, 2}}) == IntVector{{1, 2}});
}

TEST_CASE("span basics") {
    RationalSpan s;
    CHECK(s.insert(sparse({1, 1, 0})));
    CHECK(s.insert(sparse({0, 1, 1})));
    CHECK_FALSE(s.insert(sparse({2, 4, 2})));
    CHECK(s.contains(sparse({1, 0, -1})));
    CHECK_FALSE(s.contains(sparse({0, 0, 1})));
    CHECK(s.dim() == 2);
    CHECK_FALSE(s.insert(IntVector{}));
    const auto piv = s.pivots();
    CHECK(piv.size() == 2);
}

TEST_CASE("rank matches dense elimination") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-3, 3), zero(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int cols = 3 + trial % 6;
        const int rows = 2 + trial % 9;
        std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
        for (auto& row : m)
            for (auto& x : row) x = zero(rng) ? 0 : entry(rng);
        // Plant dependencies.
        if (rows > 3)
            for (int c = 0; c < cols; ++c) m[rows - 1][c] = 2 * m[0][c] - 3 * m[1][c];
        RationalSpan s;
        std::vector<std::vector<mpq_class>> q;
        for (const auto& row : m) {
            s.insert(sparse(row));
            q.emplace_back(row.begin(), row.end());
        }
        CHECK(s.dim() == dense_rank(q));
        for (const auto& row : m) CHECK(s.contains(sparse(row)));
        for (const auto& row : s.rows()) {
            REQUIRE_FALSE(row.empty());
            CHECK(row.front().second > 0);
        }
    }
}
