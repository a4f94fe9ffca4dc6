#include "weylpark/combinatorics.hpp"
#include "weylpark/symfunc.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace weylpark;
using namespace weylpark::symfunc;
using combinatorics::compositions;
using combinatorics::partitions_of;

namespace {

// Semistandard tableaux of shape lambda with entries in 1..r, filled cell by cell.
template <class Visit>
void for_each_ssyt(const Partition& lambda, int r, Visit&& visit) {
    std::vector<std::vector<int>> t;
    for (int p : lambda.parts()) t.emplace_back(p, 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            visit(t);
            return;
        }
        const auto [i, j] = cells[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= r; ++v) {
            t[i][j] = v;
            rec(k + 1);
        }
    };
    rec(0);
}

long kostka_oracle(const Partition& lambda, const WeightVector& eta) {
    long count = 0;
    for_each_ssyt(lambda, eta.rank(), [&](const std::vector<std::vector<int>>& t) {
        std::vector<int> content(eta.rank(), 0);
        for (const auto& row : t)
            for (int v : row) ++content[v - 1];
        count += content == eta.coords();
    });
    return count;
}

// Coefficient of z^eta in e_{a_1}...e_{a_n}(z_1..z_r): 0/1 matrices with given margins.
long e_monomial_oracle(const std::vector<int>& a, const WeightVector& eta) {
    long count = 0;
    std::vector<int> left = eta.coords();
    std::function<void(std::size_t)> rec = [&](std::size_t row) {
        if (row == a.size()) {
            count += std::all_of(left.begin(), left.end(), [](int v) { return v == 0; });
            return;
        }
        const int r = static_cast<int>(left.size());
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            if (__builtin_popcount(mask) != a[row]) continue;
            bool ok = true;
            for (int j = 0; j < r; ++j)
                if ((mask >> j & 1) && left[j] == 0) ok = false;
            if (!ok) continue;
            for (int j = 0; j < r; ++j) left[j] -= mask >> j & 1;
            rec(row + 1);
            for (int j = 0; j < r; ++j) left[j] += mask >> j & 1;
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("dual Pieri examples") {
    const int a11[] = {1, 1};
    SchurExpansion e11 = e_product_to_schur(a11, 2);
    SchurExpansion expected = SchurExpansion::single(Partition{2});
    expected += SchurExpansion::single(Partition{1, 1});
    CHECK(e11 == expected);
    const int a2[] = {2};
    CHECK(e_product_to_schur(a2, 2) == SchurExpansion::single(Partition{1, 1}));
    CHECK(e_product_to_schur(a2, 1).empty());
}

TEST_CASE("e products against monomial counting") {
    std::vector<std::vector<int>> seqs = {{1, 1, 1}, {2, 1}, {2, 2}, {3, 1}, {1, 2, 1}, {2, 1, 1}, {3, 2}, {1, 1, 1, 1}};
    for (int r = 1; r <= 4; ++r)
        for (const auto& a : seqs) {
            const auto exp = e_product_to_schur(a, r);
            int n = 0;
            for (int v : a) n += v;
            KostkaTable table;
            for (const auto& eta : compositions(n, r)) {
                const XPoly m = weight_multiplicity(exp, eta, table);
                CHECK(m.at_one() == e_monomial_oracle(a, eta));
            }
        }
}

TEST_CASE("e products commute") {
    std::mt19937 rng(7);
    std::vector<int> a = {3, 1, 2, 1, 0, 2};
    const auto base = e_product_to_schur(a, 3);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(a.begin(), a.end(), rng);
        CHECK(e_product_to_schur(a, 3) == base);
    }
}

TEST_CASE("Kostka numbers") {
    CHECK(kostka(Partition{2, 1}, WeightVector{1, 1, 1}) == 2);
    CHECK(kostka(Partition{1, 1}, WeightVector{2, 0}) == 0);
    CHECK(kostka(Partition{3, 1}, WeightVector{3, 1}) == 1);
    CHECK(kostka(Partition{2}, WeightVector{-1, 3}) == 0);
    KostkaTable table;
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n, 3))
            for (const auto& eta : compositions(n, 3)) CHECK(table(lambda, eta) == kostka_oracle(lambda, eta));
    CHECK(table.cached() > 0);
}

TEST_CASE("gl_r dimensions") {
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 4; ++n)
            for (const auto& lambda : partitions_of(n, r)) {
                long count = 0;
                for_each_ssyt(lambda, r, [&](const auto&) { ++count; });
                CHECK(gl_dimension(lambda, r) == count);
            }
    CHECK(gl_dimension(Partition{1, 1, 1}, 2) == 0);
}

TEST_CASE("Frobenius character") {
    CHECK(frobenius_character(Partition{1}, 3) == SchurExpansion::single(Partition{1}));
    CHECK(frobenius_character(Partition{1, 1}, 2) == SchurExpansion::single(Partition{1, 1}));

    const auto f20 = frobenius_character(Partition{2}, 2);
    CHECK(total_dimension(f20, 2).at_one() == 5);
    CHECK(weight_multiplicity(f20, WeightVector{1, 1}).at_one() == 3);
    CHECK(weight_multiplicity(f20, WeightVector{3, -1}).is_zero());
    CHECK(f20.x_degree() == 1);
    CHECK(total_dimension(frobenius_character(Partition{3}, 3), 3).at_one() == 55);

    for (int r = 2; r <= 3; ++r)
        for (int n = 0; n <= 5; ++n)
            CHECK(total_dimension(frobenius_character(Partition{n}, r), r).at_one() ==
                  combinatorics::higher_catalan(r, n));

    const auto single = SchurExpansion::single(Partition{2, 1});
    CHECK(weight_multiplicity(single, WeightVector{2, 1, 0}) == XPoly(1));
}

TEST_CASE("expansion bookkeeping") {
    SchurExpansion e;
    CHECK(e.empty());
    CHECK(e.homogeneous_degree() == -1);
    e.add(Partition{2}, XPoly::monomial(3, 2));
    e.add(Partition{2}, XPoly::monomial(-3, 2));
    CHECK(e.empty());
    e.add(Partition{2}, XPoly(1));
    CHECK_THROWS(e.add(Partition{1}, XPoly(1)));
    e *= XPoly::monomial(1, 1);
    CHECK(e.coefficient(Partition{2}) == XPoly::monomial(1, 1));
    CHECK(e.x_degree() == 1);
}
