#include "weylpark/wedge.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace weylpark::wedge {

Context::Context(int r_, int N_, int rows_) : r(r_), N(N_), rows(rows_) {
    if (r < 1) throw std::invalid_argument("wedge context: r must be positive");
    if (rows < 1) throw std::invalid_argument("wedge context: need at least one row");
    if (rows * r > 64)
        throw std::invalid_argument("wedge context: rows*r = " + std::to_string(rows * r) +
                                    " exceeds the 64-cell window");
}

Context context_for(const Partition& xi, int r, int N) {
    if (xi.length() > r) throw std::invalid_argument("xi " + xi.to_string() + " has more than r parts");
    return Context(r, N, std::max(xi[0], 1));
}

CellSet CellSet::from_cells(const Context& ctx, const std::vector<Cell>& cells) {
    CellSet h;
    for (const auto& c : cells) {
        if (c.row < 1 || c.row > ctx.rows || c.col < 1 || c.col > ctx.r)
            throw std::invalid_argument("cell outside the window");
        const Mask b = Mask{1} << ctx.bit(c.row, c.col);
        if (h.bits & b) throw std::invalid_argument("repeated cell");
        h.bits |= b;
    }
    return h;
}

std::vector<Cell> CellSet::cells(const Context& ctx) const {
    std::vector<Cell> out;
    for (Mask m = bits; m; m &= m - 1) {
        const int b = __builtin_ctzll(m);
        out.push_back({ctx.row_of(b), ctx.col_of(b)});
    }
    return out;
}

WeightVector CellSet::weight(const Context& ctx) const {
    WeightVector w = WeightVector::zero(ctx.r);
    for (Mask m = bits; m; m &= m - 1) ++w[ctx.col_of(__builtin_ctzll(m)) - 1];
    return w;
}

int CellSet::row_sum(const Context& ctx) const {
    int s = 0;
    for (Mask m = bits; m; m &= m - 1) s += ctx.row_of(__builtin_ctzll(m));
    return s;
}

std::string CurrentElement::to_string() const {
    std::ostringstream os;
    os << 'E' << i << j << "*X^" << k << "Y^" << l;
    return os.str();
}

// ---- ModuleVector ----

ModuleVector ModuleVector::monomial(const Context& ctx, CellSet h, const mpq_class& c) {
    ModuleVector v(ctx);
    if (c != 0) v.terms_.emplace_back(h.bits, c);
    return v;
}

mpq_class ModuleVector::coefficient(CellSet h) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), h.bits,
                               [](const auto& t, Mask m) { return t.first < m; });
    return (it != terms_.end() && it->first == h.bits) ? it->second : mpq_class(0);
}

ModuleVector ModuleVector::from_terms(const Context& ctx, std::vector<std::pair<Mask, mpq_class>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ModuleVector v(ctx);
    for (auto& [m, c] : terms) {
        if (!v.terms_.empty() && v.terms_.back().first == m) {
            v.terms_.back().second += c;
            if (v.terms_.back().second == 0) v.terms_.pop_back();
        } else if (c != 0) {
            v.terms_.emplace_back(m, std::move(c));
        }
    }
    return v;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    if (is_zero()) ctx_ = o.ctx_;
    auto merged = terms_;
    merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
    *this = from_terms(ctx_, std::move(merged));
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    ModuleVector neg = o;
    neg *= -1;
    return *this += neg;
}

ModuleVector& ModuleVector::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

ModuleVector ModuleVector::component(const WeightVector& eta) const {
    ModuleVector out(ctx_);
    for (const auto& t : terms_)
        if (CellSet{t.first}.weight(ctx_) == eta) out.terms_.push_back(t);
    return out;
}

linalg::IntVector ModuleVector::to_integer() const {
    mpz_class l = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    linalg::IntVector out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, c.get_num() * (l / c.get_den()));
    linalg::make_primitive(out);
    return out;
}

ModuleVector ModuleVector::from_integer(const Context& ctx, const linalg::IntVector& v) {
    ModuleVector out(ctx);
    for (const auto& [m, c] : v) out.terms_.emplace_back(m, mpq_class(c));
    return out;
}

std::string ModuleVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        os << (first ? "" : " + ") << c << '*';
        bool f2 = true;
        for (const auto& cell : CellSet{m}.cells(ctx_)) {
            os << (f2 ? "" : "^") << "u" << cell.col << "[" << ctx_.exponent(cell.row) << "]";
            f2 = false;
        }
        if (f2) os << "1";
        first = false;
    }
    return os.str();
}

// ---- cells and statistics ----

CellSet cyclic_monomial(const Partition& xi, const Context& ctx) {
    if (xi.length() > ctx.r) throw std::invalid_argument("xi has more than r parts");
    if (xi[0] > ctx.rows) throw std::invalid_argument("xi_1 exceeds the window height");
    CellSet h;
    for (int j = 1; j <= xi.length(); ++j)
        for (int i = 1; i <= xi[j - 1]; ++i) h.bits |= Mask{1} << ctx.bit(i, j);
    return h;
}

int degree_statistic(const CellSet& h, const Partition& xi, const Context& ctx) {
    int top = 0;
    for (int part : xi.parts()) top += part * (part + 1) / 2;
    return top - h.row_sum(ctx);
}

std::pair<WeightVector, int> weight_and_degree(const CellSet& h, const Partition& xi, const Context& ctx) {
    return {h.weight(ctx), degree_statistic(h, xi, ctx)};
}

namespace {

std::vector<int> prefix_bounds(const Partition& xi, int rows) {
    const Partition t = combinatorics::transpose(xi);
    std::vector<int> need(rows + 1, 0);
    for (int k = 1; k <= rows; ++k) need[k] = need[k - 1] + t[k - 1];
    return need;
}

Mask row_mask(const Context& ctx, int row) {
    const Mask full = ctx.r == 64 ? ~Mask{0} : ((Mask{1} << ctx.r) - 1);
    return full << ((row - 1) * ctx.r);
}

}  // namespace

bool admissible(const Partition& xi, const CellSet& h, const Context& ctx) {
    if (h.size() != xi.size()) return false;
    const auto need = prefix_bounds(xi, std::max(ctx.rows, xi[0]));
    int count = 0;
    for (int k = 1; k < static_cast<int>(need.size()); ++k) {
        if (k <= ctx.rows) count += __builtin_popcountll(h.bits & row_mask(ctx, k));
        if (count < need[k]) return false;
    }
    return true;
}

std::vector<CellSet> admissible_sets(const Partition& xi, const Context& ctx) {
    std::vector<CellSet> out;
    if (xi[0] > ctx.rows) return out;
    const int n = xi.size();
    const auto need = prefix_bounds(xi, ctx.rows);
    // Row by row: choose the subset of columns occupied in that row.
    auto rec = [&](auto&& self, int row, int count, Mask acc) -> void {
        if (row > ctx.rows) {
            if (count == n) out.push_back({acc});
            return;
        }
        for (Mask sub = 0; sub < (Mask{1} << ctx.r); ++sub) {
            const int c = count + __builtin_popcountll(sub);
            if (c > n || c < need[row]) continue;
            self(self, row + 1, c, acc | (sub << ((row - 1) * ctx.r)));
        }
    };
    rec(rec, 1, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- action ----

namespace {

long long ipow(long long b, int e) {
    long long out = 1;
    while (e-- > 0) out *= b;
    return out;
}

}  // namespace

void act_monomial(const Context& ctx, const CurrentElement& g, Mask h,
                  std::vector<std::pair<Mask, long long>>& out) {
    for (Mask m = h; m; m &= m - 1) {
        const int b = __builtin_ctzll(m);
        if (ctx.col_of(b) != g.j) continue;
        const int row = ctx.row_of(b);
        const int target_row = row - g.k;
        if (target_row < 1) continue;  // exponent reaches N: truncated
        const int s = ctx.exponent(row);
        const long long coeff = ipow(s, g.l);
        if (coeff == 0) continue;
        const int tb = ctx.bit(target_row, g.i);
        if (tb == b) {
            out.emplace_back(h, coeff);
            continue;
        }
        if (h & (Mask{1} << tb)) continue;
        const int lo = std::min(b, tb), hi = std::max(b, tb);
        const Mask between = h & (((Mask{1} << hi) - 1) & ~((Mask{2} << lo) - 1));
        const long long sign = (__builtin_popcountll(between) & 1) ? -1 : 1;
        out.emplace_back((h & ~(Mask{1} << b)) | (Mask{1} << tb), sign * coeff);
    }
}

ModuleVector act(const CurrentElement& g, const ModuleVector& v) {
    std::vector<std::pair<Mask, long long>> buf;
    std::vector<std::pair<Mask, mpq_class>> terms;
    for (const auto& [h, c] : v.terms()) {
        buf.clear();
        act_monomial(v.context(), g, h, buf);
        for (const auto& [m, k] : buf) terms.emplace_back(m, c * mpq_class(mpz_class(static_cast<long>(k))));
    }
    return ModuleVector::from_terms(v.context(), std::move(terms));
}

linalg::IntVector act(const Context& ctx, const CurrentElement& g, const linalg::IntVector& v) {
    std::vector<std::pair<Mask, long long>> buf;
    linalg::IntVector out;
    for (const auto& [h, c] : v) {
        buf.clear();
        act_monomial(ctx, g, h, buf);
        for (const auto& [m, k] : buf) {
            mpz_class t = c;
            t *= static_cast<long>(k);
            out.emplace_back(m, std::move(t));
        }
    }
    linalg::canonicalize(out);
    return out;
}

std::vector<CurrentElement> generators(int r, int kmax, int lmin, int lmax) {
    std::vector<CurrentElement> out;
    for (int l = lmin; l <= lmax; ++l)
        for (int k = 0; k < kmax; ++k)
            for (int i = 1; i <= r; ++i)
                for (int j = 1; j <= r; ++j) out.push_back({i, j, k, l});
    return out;
}

namespace {

struct VecHash {
    std::size_t operator()(const linalg::IntVector& v) const {
        std::size_t h = v.size();
        for (const auto& [k, c] : v) {
            h ^= std::hash<std::uint64_t>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= std::hash<long>{}(mpz_get_si(c.get_mpz_t())) + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace

std::vector<linalg::IntVector> extend_closure(const Context& ctx, linalg::RationalSpan& span,
                                              std::vector<linalg::IntVector> seeds,
                                              const std::vector<CurrentElement>& gens) {
    std::vector<linalg::IntVector> added;
    std::deque<linalg::IntVector> queue;
    std::unordered_set<linalg::IntVector, VecHash> seen;
    auto offer = [&](linalg::IntVector& w) {
        linalg::make_primitive(w);
        if (!seen.insert(w).second) return;
        if (span.insert(w)) {
            added.push_back(w);
            queue.push_back(std::move(w));
        }
    };
    for (auto& v : seeds) {
        linalg::canonicalize(v);
        if (!v.empty()) offer(v);
    }
    while (!queue.empty()) {
        linalg::IntVector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            linalg::IntVector w = act(ctx, g, v);
            if (!w.empty()) offer(w);
        }
    }
    return added;
}

Closure closure_of(const Context& ctx, const std::vector<linalg::IntVector>& start,
                   const std::vector<CurrentElement>& gens) {
    Closure out{ctx, {}};
    extend_closure(ctx, out.span, start, gens);
    return out;
}

Closure cyclic_closure(const Partition& xi, int r, int N) {
    const Context ctx = context_for(xi, r, N);
    const CellSet v = cyclic_monomial(xi, ctx);
    const auto gens = generators(r, ctx.rows, 0, xi[0]);
    return closure_of(ctx, {linalg::IntVector{{v.bits, 1}}}, gens);
}

// ---- brackets ----

namespace {

mpz_class binom(int n, int k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// X^a Y^b * X^c Y^d = sum_m C(b,m) c^{b-m} X^{a+c} Y^{m+d}
void multiply_xy(int a, int b, int c, int d, const mpz_class& coeff, int row, int col, int sign,
                 std::vector<std::pair<mpz_class, CurrentElement>>& out) {
    for (int m = 0; m <= b; ++m) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), c, b - m);
        t *= binom(b, m) * coeff * sign;
        if (t != 0) out.push_back({t, {row, col, a + c, m + d}});
    }
}

}  // namespace

std::vector<std::pair<mpz_class, CurrentElement>> bracket(const CurrentElement& a, const CurrentElement& b) {
    std::vector<std::pair<mpz_class, CurrentElement>> raw;
    if (a.j == b.i) multiply_xy(a.k, a.l, b.k, b.l, 1, a.i, b.j, +1, raw);
    if (b.j == a.i) multiply_xy(b.k, b.l, a.k, a.l, 1, b.i, a.j, -1, raw);
    // merge equal elements
    std::vector<std::pair<mpz_class, CurrentElement>> out;
    for (auto& [c, e] : raw) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) {
            return p.second.i == e.i && p.second.j == e.j && p.second.k == e.k && p.second.l == e.l;
        });
        if (it == out.end()) out.push_back({c, e});
        else it->second = e, it->first += c;
    }
    std::erase_if(out, [](const auto& p) { return p.first == 0; });
    return out;
}

}  // namespace weylpark::wedge
