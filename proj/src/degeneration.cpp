#include "weylpark/degeneration.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylpark::degeneration {

void BigradedCharacter::add(const WeightVector& eta, int x, int y, long long dim) {
    if (dim == 0) return;
    auto& slot = dims_[{eta, x, y}];
    slot += dim;
    if (slot == 0) dims_.erase({eta, x, y});
}

long long BigradedCharacter::dim(const WeightVector& eta, int x, int y) const {
    auto it = dims_.find({eta, x, y});
    return it == dims_.end() ? 0 : it->second;
}

long long BigradedCharacter::total() const {
    long long s = 0;
    for (const auto& [k, d] : dims_) s += d;
    return s;
}

int BigradedCharacter::max_x_degree() const {
    int m = -1;
    for (const auto& [k, d] : dims_) m = std::max(m, std::get<1>(k));
    return m;
}

int BigradedCharacter::max_y_degree() const {
    int m = -1;
    for (const auto& [k, d] : dims_) m = std::max(m, std::get<2>(k));
    return m;
}

std::map<std::pair<int, int>, long long> BigradedCharacter::specialize() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [k, d] : dims_) out[{std::get<1>(k), std::get<2>(k)}] += d;
    return out;
}

bool BigradedCharacter::symmetric_in_x_y() const {
    const auto sp = specialize();
    for (const auto& [xy, d] : sp) {
        auto it = sp.find({xy.second, xy.first});
        if (it == sp.end() || it->second != d) return false;
    }
    return true;
}

long long BigradedCharacter::x_graded(const WeightVector& eta, int x) const {
    long long s = 0;
    for (const auto& [k, d] : dims_)
        if (std::get<0>(k) == eta && std::get<1>(k) == x) s += d;
    return s;
}

long long BigradedCharacter::weight_dim(const WeightVector& eta) const {
    long long s = 0;
    for (const auto& [k, d] : dims_)
        if (std::get<0>(k) == eta) s += d;
    return s;
}

BigradedCharacter BigradedCharacter::shifted(const WeightVector& delta) const {
    BigradedCharacter out;
    for (const auto& [k, d] : dims_) out.add(std::get<0>(k) + delta, std::get<1>(k), std::get<2>(k), d);
    return out;
}

std::vector<std::size_t> Filtration::level_dims() const {
    std::vector<std::size_t> out;
    std::size_t acc = 0;
    for (const auto& level : delta) out.push_back(acc += level.size());
    return out;
}

std::size_t Filtration::dim() const {
    std::size_t s = 0;
    for (const auto& level : delta) s += level.size();
    return s;
}

linalg::RationalSpan Filtration::level_span(int j) const {
    linalg::RationalSpan span;
    for (int t = 0; t <= j && t < static_cast<int>(delta.size()); ++t)
        for (const auto& v : delta[t]) span.insert(v);
    return span;
}

Filtration filtration_levels(const Partition& xi, int r, int N) {
    Filtration f;
    f.ctx = wedge::context_for(xi, r, N);
    f.xi = xi;
    const int lmax = xi[0];
    const int kmax = f.ctx.rows;
    const auto g0 = wedge::generators(r, kmax, 0, 0);
    std::vector<std::vector<wedge::CurrentElement>> gl(lmax + 1);
    for (int l = 1; l <= lmax; ++l) gl[l] = wedge::generators(r, kmax, l, l);

    linalg::RationalSpan span;
    const wedge::CellSet v = wedge::cyclic_monomial(xi, f.ctx);
    f.delta.push_back(wedge::extend_closure(f.ctx, span, {linalg::IntVector{{v.bits, 1}}}, g0));

    // F^j = G_0-closure of F^{j-1} + sum_{l=1..j} G_l . (vectors new at level j-l).
    // Stop once lmax consecutive levels add nothing: no generator can reach further.
    int empty_run = 0;
    for (int j = 1; empty_run < std::max(lmax, 1); ++j) {
        std::vector<linalg::IntVector> seeds;
        for (int l = 1; l <= std::min(j, lmax); ++l)
            for (const auto& u : f.delta[j - l])
                for (const auto& g : gl[l]) {
                    auto w = wedge::act(f.ctx, g, u);
                    if (!w.empty()) seeds.push_back(std::move(w));
                }
        f.delta.push_back(wedge::extend_closure(f.ctx, span, std::move(seeds), g0));
        empty_run = f.delta.back().empty() ? empty_run + 1 : 0;
    }
    while (f.delta.size() > 1 && f.delta.back().empty()) f.delta.pop_back();

    for (int j = 0; j < static_cast<int>(f.delta.size()); ++j)
        for (const auto& u : f.delta[j]) {
            const wedge::CellSet lead{u.front().first};
            const auto [eta, d] = wedge::weight_and_degree(lead, xi, f.ctx);
            for (const auto& [m, c] : u) {
                const auto [eta2, d2] = wedge::weight_and_degree(wedge::CellSet{m}, xi, f.ctx);
                if (eta2 != eta || d2 != d)
                    throw std::logic_error("filtration produced a non-homogeneous vector");
            }
            f.character.add(eta, d, j, 1);
        }
    return f;
}

BigradedCharacter bigraded_character(const Partition& xi, int r, int N) {
    return filtration_levels(xi, r, N).character;
}

BigradedCharacter bigraded_character(const Partition& xi, int r) {
    return bigraded_character(xi, r, std::max(xi[0], 1));
}

int degree_formula(const Partition& xi, int r) {
    int top = 0;
    for (int part : xi.parts()) top += part * (part + 1) / 2;
    for (int i = 1; i <= xi.size(); ++i) top -= (i + r - 1) / r;
    return top;
}

AlphaReport alpha_map(int n, int s, int r, int N) {
    if (n < 0 || s < 0 || r < 1) throw std::invalid_argument("alpha_map: need n >= 0, s >= 0, r >= 1");
    AlphaReport rep;
    rep.n = n, rep.s = s, rep.r = r, rep.N = N;
    // (n+r)eps_1 + (s-1)tau; for s = 0 use the tau-shifted module (same submodule lattice).
    const int base = std::max(s - 1, 0);
    std::vector<int> parts(r, base);
    parts[0] += n + r;
    rep.source = Partition(parts);

    const wedge::Context ctx = wedge::context_for(rep.source, r, N);
    wedge::ModuleVector w = wedge::ModuleVector::monomial(ctx, wedge::cyclic_monomial(rep.source, ctx));
    for (int t = 2; t <= r; ++t) w = wedge::act({t, 1, n + r + 1 - t, 0}, w);
    rep.image = w;
    rep.image_zero = w.is_zero();

    if (!rep.image_zero) {
        const auto gens = wedge::generators(r, ctx.rows, 0, rep.source[0]);
        rep.generated_dim = wedge::closure_of(ctx, {w.to_integer()}, gens).dim();
    }
    std::vector<int> target(r, s);
    target[0] += n;
    const Partition tp(target);
    rep.expected_dim = wedge::cyclic_closure(tp, r, std::max(tp[0], 1)).dim();
    return rep;
}

}  // namespace weylpark::degeneration
