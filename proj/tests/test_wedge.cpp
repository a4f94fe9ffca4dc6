#include "weylpark/combinatorics.hpp"
#include "weylpark/wedge.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace weylpark;
using namespace weylpark::wedge;

namespace {

// Wedge of u_col^exp factors, listed in canonical order.
using Factor = std::pair<int, int>;  // (exponent, column)

bool canonical_before(const Factor& a, const Factor& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
}

// Sorts the factors into canonical order; returns the sign, or 0 on a repeat.
int sort_with_sign(std::vector<Factor>& f) {
    int sign = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j + 1 < f.size() - i; ++j) {
            if (f[j] == f[j + 1]) return 0;
            if (canonical_before(f[j + 1], f[j])) {
                std::swap(f[j], f[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t j = 0; j + 1 < f.size(); ++j)
        if (f[j] == f[j + 1]) return 0;
    return sign;
}

Mask to_mask(const Context& ctx, const std::vector<Factor>& f) {
    Mask m = 0;
    for (const auto& [e, c] : f) m |= Mask{1} << ctx.bit(ctx.N - e, c);
    return m;
}

// E_ij X^k Y^l by the Leibniz rule on factors: u_j^s -> s^l u_i^{s+k}, zero past x^{N-1}.
std::map<Mask, long> act_oracle(const Context& ctx, const CurrentElement& g, Mask h) {
    std::vector<Factor> f;
    for (int b = 0; b < 64; ++b)
        if (h >> b & 1) f.emplace_back(ctx.exponent(ctx.row_of(b)), ctx.col_of(b));
    std::sort(f.begin(), f.end(), canonical_before);
    std::map<Mask, long> out;
    for (std::size_t p = 0; p < f.size(); ++p) {
        if (f[p].second != g.j) continue;
        const int s = f[p].first;
        if (s + g.k > ctx.N - 1) continue;
        long coeff = 1;
        for (int t = 0; t < g.l; ++t) coeff *= s;
        if (coeff == 0) continue;
        auto moved = f;
        moved[p] = {s + g.k, g.i};
        const int sign = sort_with_sign(moved);
        if (sign == 0) continue;
        out[to_mask(ctx, moved)] += sign * coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<Mask, long> as_map(const ModuleVector& v) {
    std::map<Mask, long> out;
    for (const auto& [m, c] : v.terms()) {
        REQUIRE(c.get_den() == 1);
        out[m] = c.get_num().get_si();
    }
    return out;
}

// Staircase condition checked on every subset of the window.
std::vector<Mask> admissible_oracle(const Partition& xi, const Context& ctx) {
    const Partition t = combinatorics::transpose(xi);
    const int cells = ctx.rows * ctx.r;
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << cells); ++m) {
        if (__builtin_popcountll(m) != xi.size()) continue;
        bool ok = true;
        int need = 0;
        for (int k = 1; k <= ctx.rows && ok; ++k) {
            need += t[k - 1];
            int have = 0;
            for (int b = 0; b < k * ctx.r; ++b) have += m >> b & 1;
            ok = have >= need;
        }
        if (ok) out.push_back(m);
    }
    return out;
}

ModuleVector apply(const CurrentElement& g, const ModuleVector& v) { return act(g, v); }

}  // namespace

TEST_CASE("cyclic monomial") {
    const Context ctx = context_for(Partition{2, 1}, 2, 5);
    const CellSet h = cyclic_monomial(Partition{2, 1}, ctx);
    CHECK(h == CellSet::from_cells(ctx, {{1, 1}, {2, 1}, {1, 2}}));
    CHECK(ctx.exponent(1) == 4);
    CHECK(cyclic_monomial(Partition{}, context_for(Partition{}, 2, 1)).bits == 0);
    const Context c3 = context_for(Partition{1, 1, 1}, 3, 1);
    CHECK(cyclic_monomial(Partition{1, 1, 1}, c3) == CellSet::from_cells(c3, {{1, 1}, {1, 2}, {1, 3}}));
}

TEST_CASE("admissible sets") {
    const Context ctx = context_for(Partition{2}, 2, 2);
    const auto sets = admissible_sets(Partition{2}, ctx);
    CHECK(sets.size() == 5);
    CHECK_FALSE(admissible(Partition{2}, CellSet::from_cells(ctx, {{2, 1}, {2, 2}}), ctx));
    CHECK(admissible(Partition{2}, CellSet::from_cells(ctx, {{1, 2}, {2, 1}}), ctx));
    CHECK(admissible_sets(Partition{1, 1}, context_for(Partition{1, 1}, 2, 1)).size() == 1);

    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 4; ++n)
            for (const auto& xi : combinatorics::partitions_of(n, r)) {
                const Context c = context_for(xi, r, std::max(xi[0], 1));
                std::vector<Mask> got;
                for (const auto& h : admissible_sets(xi, c)) {
                    got.push_back(h.bits);
                    CHECK(admissible(xi, h, c));
                }
                CHECK(got == admissible_oracle(xi, c));
                CHECK(admissible(xi, cyclic_monomial(xi, c), c));
            }
}

TEST_CASE("weight and degree") {
    const Partition xi{2};
    const Context ctx = context_for(xi, 2, 2);
    CHECK(weight_and_degree(cyclic_monomial(xi, ctx), xi, ctx) == std::pair{WeightVector{2, 0}, 0});
    CHECK(weight_and_degree(CellSet::from_cells(ctx, {{1, 2}, {2, 2}}), xi, ctx) == std::pair{WeightVector{0, 2}, 0});
    CHECK(weight_and_degree(CellSet::from_cells(ctx, {{1, 1}, {1, 2}}), xi, ctx) == std::pair{WeightVector{1, 1}, 1});
}

TEST_CASE("action examples") {
    const int N = 4;
    const Context one = context_for(Partition{1}, 2, N);
    const auto top = ModuleVector::monomial(one, CellSet::from_cells(one, {{1, 1}}));
    CHECK(apply({2, 1, 1, 0}, top).is_zero());
    CHECK(apply({1, 1, 0, 1}, top) == mpq_class(N - 1) * top);

    const Context two = context_for(Partition{2}, 2, N);
    const auto v = ModuleVector::monomial(two, CellSet::from_cells(two, {{1, 1}, {2, 1}}));
    const auto w = ModuleVector::monomial(two, CellSet::from_cells(two, {{1, 1}, {1, 2}}));
    CHECK(apply({2, 1, 1, 0}, v) == w);
}

TEST_CASE("action against factor-wise Leibniz") {
    std::mt19937 rng(3);
    for (int r = 1; r <= 3; ++r)
        for (int N = 1; N <= 4; ++N) {
            const Context ctx(r, N, 3);
            const int cells = ctx.rows * r;
            std::uniform_int_distribution<Mask> mask(0, (Mask{1} << cells) - 1);
            for (int trial = 0; trial < 40; ++trial) {
                const Mask h = mask(rng);
                std::uniform_int_distribution<int> col(1, r), k(0, 3), l(0, 3);
                const CurrentElement g{col(rng), col(rng), k(rng), l(rng)};
                const auto got = apply(g, ModuleVector::monomial(ctx, CellSet{h}));
                CHECK(as_map(got) == act_oracle(ctx, g, h));
            }
        }
}

TEST_CASE("integer action agrees with rational action") {
    const Context ctx(2, 3, 3);
    const CurrentElement g{1, 2, 1, 2};
    ModuleVector v = ModuleVector::monomial(ctx, CellSet{0b000111}, 3);
    v += ModuleVector::monomial(ctx, CellSet{0b010110}, -2);
    const auto lhs = act(ctx, g, v.to_integer());
    auto expected = act(g, v).to_integer();
    CHECK(lhs == expected);
}

TEST_CASE("bracket fidelity") {
    std::mt19937 rng(5);
    const Context ctx(2, 4, 3);
    std::uniform_int_distribution<Mask> mask(0, (Mask{1} << 6) - 1);
    std::uniform_int_distribution<int> col(1, 2), k(0, 2), l(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const CurrentElement a{col(rng), col(rng), k(rng), l(rng)};
        const CurrentElement b{col(rng), col(rng), k(rng), l(rng)};
        const auto v = ModuleVector::monomial(ctx, CellSet{mask(rng)});
        const auto lhs = apply(a, apply(b, v)) - apply(b, apply(a, v));
        ModuleVector rhs(ctx);
        for (const auto& [c, e] : bracket(a, b)) rhs += mpq_class(c) * apply(e, v);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cyclic closure dimensions") {
    CHECK(cyclic_closure(Partition{2}, 2, 2).dim() == 5);
    for (int r = 1; r <= 3; ++r) CHECK(cyclic_closure(Partition{1}, r, 3).dim() == static_cast<std::size_t>(r));
    CHECK(cyclic_closure(Partition{1, 1}, 2, 1).dim() == 1);
    CHECK(cyclic_closure(Partition{1, 1, 1}, 3, 2).dim() == 1);
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 3; ++n)
            for (const auto& xi : combinatorics::partitions_of(n, r))
                for (int N = std::max(xi[0], 1); N <= std::max(xi[0], 1) + 1; ++N) {
                    const Context ctx = context_for(xi, r, N);
                    CHECK(cyclic_closure(xi, r, N).dim() == admissible_sets(xi, ctx).size());
                }
}

TEST_CASE("context validation") {
    CHECK_THROWS(Context(9, 4, 8));
    CHECK_NOTHROW(Context(8, 4, 8));
}

TEST_CASE("small N uses negative exponents") {
    for (int N = 1; N <= 4; ++N) {
        CHECK(cyclic_closure(Partition{3}, 2, N).dim() == 14);
        CHECK(cyclic_closure(Partition{2, 1}, 2, N).dim() == admissible_sets(Partition{2, 1}, context_for(Partition{2, 1}, 2, N)).size());
    }
}
