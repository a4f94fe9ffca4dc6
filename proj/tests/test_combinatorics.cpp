#include "weylpark/combinatorics.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace weylpark::combinatorics;

namespace {

// Column lengths by literally counting boxes.
Partition transpose_oracle(const Partition& p) {
    std::vector<int> cols;
    for (int c = 1; c <= p[0]; ++c) {
        int len = 0;
        for (int part : p.parts()) len += part >= c;
        cols.push_back(len);
    }
    return Partition(cols);
}

// Every map {1..n} -> {1..n}, filtered by the counting condition written out directly.
std::vector<std::vector<int>> parking_oracle(int n, const Partition& rho) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(n, 1);
    const int k = rho.length();
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            for (int s = 1; s <= k; ++s) {
                const int bound = rho[k - s];
                int hits = 0;
                for (int v : f) hits += v <= bound;
                if (hits < s) return;
            }
            out.push_back(f);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            f[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

mpz_class catalan_recursive(int n) {
    std::vector<mpz_class> c(n + 1);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    return c[n];
}

}  // namespace

TEST_CASE("partition normalization") {
    CHECK(Partition{2, 0} == Partition{2});
    CHECK(Partition{2, 0}.length() == 1);
    CHECK(Partition{3, 1}.size() == 4);
    CHECK(Partition{2, 1}.padded(4) == std::vector<int>{2, 1, 0, 0});
    CHECK_THROWS(Partition{1, 2});
    CHECK_THROWS(Partition{2, -1});
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{2, 0}) == Partition{1, 1});
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n, n)) {
            CHECK(transpose(p) == transpose_oracle(p));
            CHECK(transpose(transpose(p)) == p);
        }
}

TEST_CASE("rho of xi") {
    CHECK(rho_of_xi(Partition{2, 0}) == Partition{2, 1});
    CHECK(rho_of_xi(Partition{1, 1}) == Partition{1, 1});
    CHECK(rho_of_xi(Partition{4}) == Partition{4, 3, 2, 1});
    for (int n = 1; n <= 7; ++n)
        for (const auto& xi : partitions_of(n, n)) {
            const Partition rho = rho_of_xi(xi);
            CHECK(rho.length() == n);
            CHECK(rho[0] == xi[0]);
            int weighted = 0;
            const Partition t = transpose(xi);
            for (int i = 0; i < t.length(); ++i) weighted += (i + 1) * t[i];
            CHECK(rho.size() == weighted);
        }
}

TEST_CASE("A sequences") {
    CHECK(enumerate_A(2, Partition{2, 1}) == std::vector<std::vector<int>>{{1, 1}, {2, 0}});
    CHECK(enumerate_A(0, Partition{}) == std::vector<std::vector<int>>{{}});
    CHECK(enumerate_A(3, Partition{3, 2, 1}).size() == 5);

    // Orbit sums reproduce the brute-force parking count.
    for (int n = 1; n <= 5; ++n)
        for (const auto& xi : partitions_of(n, n)) {
            const Partition rho = rho_of_xi(xi);
            mpz_class sum = 0;
            for (const auto& a : enumerate_A(n, rho)) sum += multinomial(a);
            CHECK(sum == static_cast<unsigned long>(parking_oracle(n, rho).size()));
        }
}

TEST_CASE("parking functions") {
    CHECK(enumerate_parking(3, Partition{3, 2, 1}).size() == 16);
    const auto one = enumerate_parking(1, Partition{1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].values == std::vector<int>{1});

    const auto two = enumerate_parking(2, Partition{2, 1});
    REQUIRE(two.size() == 3);
    CHECK(two[0].values == std::vector<int>{1, 1});
    CHECK(two[1].values == std::vector<int>{1, 2});
    CHECK(two[2].values == std::vector<int>{2, 1});
    CHECK(parking_statistic(two[0]) == 1);
    CHECK(parking_statistic(two[2]) == 0);

    for (int n = 0; n <= 6; ++n) {
        std::vector<int> stair;
        for (int i = n; i >= 1; --i) stair.push_back(i);
        const auto pf = enumerate_parking(n, Partition(stair));
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), n + 1, n > 0 ? n - 1 : 0);
        CHECK(expected == static_cast<unsigned long>(pf.size()));
    }

    for (int n = 1; n <= 5; ++n)
        for (const auto& xi : partitions_of(n, n)) {
            const Partition rho = rho_of_xi(xi);
            const auto pf = enumerate_parking(n, rho);
            const auto oracle = parking_oracle(n, rho);
            REQUIRE(pf.size() == oracle.size());
            for (std::size_t i = 0; i < pf.size(); ++i) {
                CHECK(pf[i].values == oracle[i]);
                CHECK(is_parking_function(pf[i].values, rho));
                CHECK(parking_statistic(pf[i]) >= 0);
            }
        }
}

TEST_CASE("Q+ order") {
    CHECK(in_Q_plus(WeightVector{2, 0}, WeightVector{1, 1}));
    CHECK_FALSE(in_Q_plus(WeightVector{1, 1}, WeightVector{2, 0}));
    CHECK(in_Q_plus(WeightVector{3, 0, 0}, WeightVector{1, 1, 1}));
    CHECK_FALSE(in_Q_plus(WeightVector{3, 0, 0}, WeightVector{1, 1, 0}));
    CHECK(in_Q_plus(WeightVector{1, 1}, WeightVector{1, 1}));
}

TEST_CASE("higher Catalan numbers") {
    for (int n = 0; n <= 12; ++n) CHECK(higher_catalan(2, n) == catalan_recursive(n + 1));
    const int r3[] = {1, 3, 12, 55, 273, 1428};
    for (int n = 0; n < 6; ++n) CHECK(higher_catalan(3, n) == r3[n]);
    CHECK(higher_catalan(1, 5) == 1);
}

TEST_CASE("counting helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    const int parts[] = {2, 1, 1};
    CHECK(multinomial(parts) == 12);
    CHECK(partitions_of(5, 5).size() == 7);
    CHECK(partitions_of(5, 2).size() == 3);
    CHECK(partitions_of(0, 3).size() == 1);
    const auto comps = compositions(3, 3);
    CHECK(comps.size() == 10);
    CHECK(std::is_sorted(comps.begin(), comps.end()));
    CHECK(compositions(2, 1).size() == 1);
}
