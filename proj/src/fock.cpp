#include "weylpark/fock.hpp"

#include "weylpark/degeneration.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylpark::fock {

// ---- monomials ----

bool FockMonomial::occupied(long long m) const {
    const bool flipped = std::binary_search(flips.begin(), flips.end(), m);
    return (m >= 0) != flipped;
}

int FockMonomial::charge() const {
    int c = 0;
    for (long long m : flips) c += m < 0 ? 1 : -1;
    return c;
}

WeightVector FockMonomial::weight(int r) const {
    WeightVector w = WeightVector::zero(r);
    for (long long m : flips) w[column_of(r, m) - 1] += m < 0 ? 1 : -1;
    return w;
}

long long FockMonomial::global_degree(int r) const {
    long long d = 0;
    for (long long m : flips) d += m < 0 ? -exponent_of(r, m) : exponent_of(r, m);
    return d;
}

std::string FockMonomial::to_string(int r) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (long long m : flips) {
        os << (first ? "" : ",") << (m < 0 ? '+' : '-') << "u" << column_of(r, m) << "[" << exponent_of(r, m) << "]";
        first = false;
    }
    os << '}';
    return os.str();
}

FockVector FockVector::monomial(const FockMonomial& f, const mpq_class& c) {
    FockVector v;
    v.add(f, c);
    return v;
}

mpq_class FockVector::coefficient(const FockMonomial& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void FockVector::add(const FockMonomial& f, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [f, c] : o.terms_) add(f, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [f, c] : o.terms_) add(f, -c);
    return *this;
}

FockVector& FockVector::operator*=(const mpq_class& c) {
    if (c == 0) terms_.clear();
    for (auto& [f, x] : terms_) x *= c;
    return *this;
}

std::string FockVector::to_string(int r) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : terms_) {
        os << (first ? "" : " + ") << c << '*' << f.to_string(r);
        first = false;
    }
    return os.str();
}

// ---- matrices and differential operators ----

Matrix Matrix::unit(int r, int i, int j) {
    Matrix m = zero(r);
    m(i, j) = 1;
    return m;
}

Matrix Matrix::identity(int r) {
    Matrix m = zero(r);
    for (int i = 1; i <= r; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const mpq_class& x) { return x == 0; });
}

mpq_class Matrix::trace() const {
    mpq_class t = 0;
    for (int i = 1; i <= r; ++i) t += (*this)(i, i);
    return t;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.r != y.r) throw std::invalid_argument("matrix size mismatch");
    Matrix out = Matrix::zero(x.r);
    for (int i = 1; i <= x.r; ++i)
        for (int k = 1; k <= x.r; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 1; j <= x.r; ++j) out(i, j) += x(i, k) * y(k, j);
        }
    return out;
}

mpz_class falling(long long s, int a) {
    mpz_class out = 1;
    for (int k = 0; k < a; ++k) out *= static_cast<long>(s - k);
    return out;
}

namespace {

mpz_class stirling2(int n, int k) {
    // S(n, k) by the triangle recurrence.
    std::vector<std::vector<mpz_class>> S(n + 1, std::vector<mpz_class>(n + 1, 0));
    S[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) S[i][j] = j * S[i - 1][j] + S[i - 1][j - 1];
    return (k >= 0 && k <= n) ? S[n][k] : mpz_class(0);
}

mpz_class binom(int n, int k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

void DiffOp::add_term(DiffOpTerm t) {
    if (t.g.r != r_) throw std::invalid_argument("DiffOp: matrix size mismatch");
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (it->i == t.i && it->a == t.a) {
            for (std::size_t k = 0; k < t.g.a.size(); ++k) it->g.a[k] += t.g.a[k];
            if (it->g.is_zero()) terms_.erase(it);
            return;
        }
    if (!t.g.is_zero()) terms_.push_back(std::move(t));
}

DiffOp DiffOp::term(const Matrix& g, int i, int a) {
    if (a < 0) throw std::invalid_argument("DiffOp: negative power of D");
    DiffOp op(g.r);
    op.add_term({g, i, a});
    return op;
}

DiffOp DiffOp::unit(int r, int p, int q, int i, int a, const mpq_class& c) {
    Matrix g = Matrix::zero(r);
    g(p, q) = c;
    return term(g, i, a);
}

DiffOp DiffOp::central(int r, const mpq_class& c) {
    DiffOp op(r);
    op.central_ = c;
    return op;
}

DiffOp DiffOp::from_current(int r, const wedge::CurrentElement& g) {
    DiffOp op(r);
    for (int m = 0; m <= g.l; ++m) {
        const mpz_class s = stirling2(g.l, m);
        if (s != 0) op += unit(r, g.i, g.j, g.k + m, m, mpq_class(s));
    }
    return op;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    if (o.r_ != r_) throw std::invalid_argument("DiffOp: rank mismatch");
    for (const auto& t : o.terms_) add_term(t);
    central_ += o.central_;
    return *this;
}

DiffOp& DiffOp::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        central_ = 0;
        return *this;
    }
    for (auto& t : terms_)
        for (auto& x : t.g.a) x *= c;
    central_ *= c;
    return *this;
}

std::string DiffOp::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        os << (first ? "" : " + ") << '[';
        for (int i = 1; i <= r_; ++i)
            for (int j = 1; j <= r_; ++j) os << (i + j > 2 ? " " : "") << t.g(i, j);
        os << "]x^" << t.i << "D^" << t.a;
        first = false;
    }
    if (central_ != 0) os << (first ? "" : " + ") << central_ << "K";
    else if (first) os << '0';
    return os.str();
}

// x^i D^a * x^j D^b = sum_k C(a,k) falling(j,k) x^{i+j-k} D^{a+b-k}
DiffOp compose(const DiffOp& A, const DiffOp& B) {
    DiffOp out(A.r());
    for (const auto& s : A.terms())
        for (const auto& t : B.terms()) {
            const Matrix g = s.g * t.g;
            if (g.is_zero()) continue;
            for (int k = 0; k <= s.a; ++k) {
                const mpz_class c = binom(s.a, k) * falling(t.i, k);
                if (c == 0) continue;
                DiffOp piece = DiffOp::term(g, s.i + t.i - k, s.a + t.a - k);
                out += mpq_class(c) * piece;
            }
        }
    return out;
}

DiffOp commutator(const DiffOp& A, const DiffOp& B) { return compose(A, B) - compose(B, A); }

mpq_class cocycle_formula(const DiffOpTerm& A, const DiffOpTerm& B) {
    if (A.i + B.i - A.a - B.a != 0) return 0;
    const mpq_class tr = (A.g * B.g).trace();
    if (tr == 0) return 0;
    mpz_class prod = 1;
    for (int k = 0; k <= A.a + B.a; ++k) prod *= A.i - k;
    mpq_class ratio(combinatorics::factorial(A.a) * combinatorics::factorial(B.a) * prod,
                    combinatorics::factorial(A.a + B.a + 1));
    ratio.canonicalize();
    const mpq_class out = tr * ratio;
    return (A.a % 2) ? mpq_class(-out) : out;
}

mpq_class cocycle_formula(const DiffOp& A, const DiffOp& B) {
    mpq_class s = 0;
    for (const auto& t : A.terms())
        for (const auto& u : B.terms()) s += cocycle_formula(t, u);
    return s;
}

// ---- action ----

namespace {

// Occupied indices strictly between lo and hi (lo < hi).
long long occupied_between(const FockMonomial& f, long long lo, long long hi) {
    if (hi - lo <= 1) return 0;
    const long long a = lo + 1, b = hi - 1;  // inclusive range
    long long base = 0;                       // count of vacuum-occupied (>= 0) in [a, b]
    if (b >= 0) base = b - std::max(a, 0LL) + 1;
    auto first = std::lower_bound(f.flips.begin(), f.flips.end(), a);
    auto last = std::upper_bound(f.flips.begin(), f.flips.end(), b);
    for (auto it = first; it != last; ++it) base += *it < 0 ? 1 : -1;
    return base;
}

FockMonomial toggled(const FockMonomial& f, long long m1, long long m2) {
    FockMonomial out = f;
    for (long long m : {m1, m2}) {
        auto it = std::lower_bound(out.flips.begin(), out.flips.end(), m);
        if (it != out.flips.end() && *it == m) out.flips.erase(it);
        else out.flips.insert(it, m);
    }
    return out;
}

void act_term(int r, const DiffOpTerm& t, const FockMonomial& f, const mpq_class& coeff, FockVector& out) {
    const int shift = t.i - t.a;  // exponent shift

    // diagonal (normal-ordered) part
    if (shift == 0) {
        mpq_class eig = 0;
        for (long long m : f.flips) {
            const int b = column_of(r, m);
            const mpq_class& gbb = t.g(b, b);
            if (gbb == 0) continue;
            const mpq_class val = gbb * mpq_class(falling(exponent_of(r, m), t.a));
            if (m < 0) eig += val;
            else eig -= val;
        }
        if (eig != 0) out.add(f, coeff * eig);
    }

    const long long lo = std::min(f.flips.empty() ? 0LL : f.flips.front(), 0LL);
    const long long hi = std::max(f.flips.empty() ? -1LL : f.flips.back(), -1LL);
    const long long reach = static_cast<long long>(r) * (std::llabs(shift) + 1);
    for (long long m = lo - reach; m <= hi + reach; ++m) {
        if (!f.occupied(m)) continue;
        const int b = column_of(r, m);
        const long long s = exponent_of(r, m);
        mpz_class fall;
        bool fall_ready = false;
        for (int ap = 1; ap <= r; ++ap) {
            const mpq_class& gab = t.g(ap, b);
            if (gab == 0) continue;
            if (shift == 0 && ap == b) continue;
            const long long target = index_of(r, s + shift, ap);
            if (f.occupied(target)) continue;
            if (!fall_ready) {
                fall = falling(s, t.a);
                fall_ready = true;
            }
            if (fall == 0) break;
            const long long between = occupied_between(f, std::min(m, target), std::max(m, target));
            mpq_class c = coeff * gab * mpq_class(fall);
            if (between & 1) c = -c;
            out.add(toggled(f, m, target), c);
        }
    }
}

}  // namespace

FockVector act_fock(const DiffOp& A, const FockVector& v) {
    FockVector out;
    for (const auto& [f, c] : v.terms()) {
        for (const auto& t : A.terms()) act_term(A.r(), t, f, c, out);
        if (A.central_charge() != 0) out.add(f, c * A.central_charge());
    }
    return out;
}

// ---- highest weights and sectors ----

WeightVector xi_of_charge(int n, int r) {
    int s = n >= 0 ? n / r : -((-n + r - 1) / r);
    const int t = n - s * r;
    WeightVector xi = s * WeightVector::tau(r);
    for (int i = 0; i < t; ++i) xi[i] += 1;
    return xi;
}

FockMonomial highest_weight_monomial(const WeightVector& xi) {
    const int r = xi.rank();
    FockMonomial f;
    for (int j = 1; j <= r; ++j) {
        // column j occupied from exponent -xi_j upwards
        if (xi[j - 1] > 0)
            for (int p = -xi[j - 1]; p < 0; ++p) f.flips.push_back(index_of(r, p, j));
        else
            for (int p = 0; p < -xi[j - 1]; ++p) f.flips.push_back(index_of(r, p, j));
    }
    std::sort(f.flips.begin(), f.flips.end());
    return f;
}

FockMonomial highest_weight_monomial(int n, int r) { return highest_weight_monomial(xi_of_charge(n, r)); }

long long sector_degree(const FockMonomial& f, int r) {
    return f.global_degree(r) - highest_weight_monomial(f.charge(), r).global_degree(r);
}

namespace {

long long column_degree(int q) { return static_cast<long long>(q) * (q + 1) / 2; }

// Column with charge q and partition lambda: particles at -q + (k-1) - lambda_k.
void column_flips(int r, int j, int q, const Partition& lambda, std::vector<long long>& flips) {
    const int len = lambda.length();
    // particles k = 1..K cover every deviation from the vacuum
    const int K = std::max(len, 0) + std::abs(q) + 1;
    std::set<long long> occ;
    for (int k = 1; k <= K; ++k) occ.insert(-q + (k - 1) - lambda[k - 1]);
    const long long tail = -q + K;  // occupied from here upwards
    const long long lo = std::min<long long>(*occ.begin(), 0);
    for (long long p = lo; p < std::max<long long>(tail, 0); ++p) {
        const bool o = p >= tail || occ.count(p);
        if ((p < 0 && o) || (p >= 0 && !o)) flips.push_back(index_of(r, p, j));
    }
}

}  // namespace

std::vector<FockMonomial> sector_monomials(int n, int r, int depth) {
    const long long base = highest_weight_monomial(n, r).global_degree(r);
    const long long budget = base + depth;
    std::vector<FockMonomial> out;
    const int B = std::abs(n) + depth + 2;
    std::vector<int> q(r);
    std::vector<Partition> lambdas(r);

    auto fill_partitions = [&](auto&& self, int col, long long left) -> void {
        if (col == r) {
            FockMonomial f;
            for (int j = 1; j <= r; ++j) column_flips(r, j, q[j - 1], lambdas[j - 1], f.flips);
            std::sort(f.flips.begin(), f.flips.end());
            out.push_back(std::move(f));
            return;
        }
        for (int size = 0; size <= left; ++size)
            for (const auto& lam : combinatorics::partitions_of(size, size)) {
                lambdas[col] = lam;
                self(self, col + 1, left - size);
            }
    };
    auto choose_charges = [&](auto&& self, int col, int sum, long long deg) -> void {
        if (col == r - 1) {
            q[col] = n - sum;
            const long long d = deg + column_degree(q[col]);
            if (d <= budget) fill_partitions(fill_partitions, 0, budget - d);
            return;
        }
        for (int c = -B; c <= B; ++c) {
            const long long d = deg + column_degree(c);
            if (d > budget) continue;
            q[col] = c;
            self(self, col + 1, sum + c, d);
        }
    };
    choose_charges(choose_charges, 0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- cocycle and lemma checks ----

CocycleCheck verify_cocycle(const DiffOp& A, const DiffOp& B, const std::vector<FockMonomial>& samples) {
    CocycleCheck res;
    res.expected = cocycle_formula(A, B);
    const DiffOp AB = commutator(A, B);
    bool have = false;
    for (const auto& f : samples) {
        const FockVector v = FockVector::monomial(f);
        FockVector defect = act_fock(A, act_fock(B, v)) - act_fock(B, act_fock(A, v)) - act_fock(AB, v);
        const mpq_class lambda = defect.coefficient(f);
        defect.add(f, -lambda);
        if (!defect.is_zero()) res.scalar = false;
        if (have && lambda != res.value) res.consistent = false;
        if (!have) res.value = lambda, have = true;
    }
    return res;
}

FockVector lemma_operator(int r, int j, int m, const FockVector& v) {
    long long lo = 0, hi = -1;
    for (const auto& [f, c] : v.terms())
        if (!f.flips.empty()) {
            lo = std::min(lo, exponent_of(r, f.flips.front()));
            hi = std::max(hi, exponent_of(r, f.flips.back()));
        }
    // e_i kills v once i >= width; the i < 0 sum needs m - i < width.
    const long long width = hi - lo + 1;

    auto e = [&](long long i) { return DiffOp::unit(r, j, j, static_cast<int>(i), 0); };
    FockVector out = act_fock(DiffOp::unit(r, j, j, m + 1, 1), v);
    FockVector sq;
    for (long long i = m - width; i < 0; ++i) sq += act_fock(e(i), act_fock(e(m - i), v));
    for (long long i = 0; i < width; ++i) sq += act_fock(e(m - i), act_fock(e(i), v));
    out += mpq_class(1, 2) * sq;
    out += mpq_class(m + 1, 2) * act_fock(e(m), v);
    return out;
}

bool lemma_cur_check(int r, int j, int m, const std::vector<FockMonomial>& samples) {
    for (const auto& f : samples)
        if (!lemma_operator(r, j, m, FockVector::monomial(f)).is_zero()) return false;
    return true;
}

// ---- translations ----

FockMonomial translate(const WeightVector& eta, const FockMonomial& f) {
    const int r = eta.rank();
    long long lo = 0, hi = 0;
    if (!f.flips.empty()) {
        lo = std::min(lo, exponent_of(r, f.flips.front()));
        hi = std::max(hi, exponent_of(r, f.flips.back()));
    }
    FockMonomial out;
    for (int j = 1; j <= r; ++j) {
        const long long e = eta[j - 1];
        for (long long p = lo - std::llabs(e) - 1; p <= hi + std::llabs(e) + 1; ++p) {
            const bool o = f.occupied(index_of(r, p + e, j));
            if ((p < 0 && o) || (p >= 0 && !o)) out.flips.push_back(index_of(r, p, j));
        }
    }
    std::sort(out.flips.begin(), out.flips.end());
    return out;
}

FockVector translate(const WeightVector& eta, const FockVector& v) {
    FockVector out;
    for (const auto& [f, c] : v.terms()) out.add(translate(eta, f), c);
    return out;
}

// ---- embedding of V(xi, N) ----

FockMonomial embed_monomial(const wedge::Context& ctx, wedge::Mask h, int& sign) {
    const int r = ctx.r;
    std::vector<int> per_row(ctx.rows + 1, 0);
    std::set<long long> occ;
    long long lo = 0;
    for (const auto& cell : wedge::CellSet{h}.cells(ctx)) {
        ++per_row[cell.row];
        const long long p = ctx.exponent(cell.row);
        occ.insert(index_of(r, p, cell.col));
        lo = std::min(lo, p);
    }
    // reorder exponent-descending to ascending: pairs with distinct exponents swap
    const long long n = occ.size();
    long long swaps = n * (n - 1) / 2;
    for (int c : per_row) swaps -= static_cast<long long>(c) * (c - 1) / 2;
    sign = (swaps & 1) ? -1 : 1;

    FockMonomial f;
    const long long start = std::min<long long>({lo, ctx.N, 0});
    for (long long p = start; p < std::max(ctx.N, 0); ++p)
        for (int j = 1; j <= r; ++j) {
            const long long m = index_of(r, p, j);
            const bool o = p >= ctx.N || occ.count(m);
            if ((p < 0 && o) || (p >= 0 && !o)) f.flips.push_back(m);
        }
    std::sort(f.flips.begin(), f.flips.end());
    return f;
}

FockVector embed(const wedge::ModuleVector& v) {
    FockVector out;
    for (const auto& [h, c] : v.terms()) {
        int sign = 1;
        const FockMonomial f = embed_monomial(v.context(), h, sign);
        out.add(f, sign > 0 ? c : mpq_class(-c));
    }
    return out;
}

mpq_class det_twist(const wedge::CurrentElement& g, int N) {
    if (g.i != g.j || g.k != 0) return 0;
    auto pw = [&](long long s) {
        mpz_class out = 1;
        for (int t = 0; t < g.l; ++t) out *= static_cast<long>(s);
        return out;
    };
    mpz_class s = 0;
    for (long long p = 0; p < N; ++p) s -= pw(p);   // vacuum cells missing from the tail
    for (long long p = N; p < 0; ++p) s += pw(p);   // tail cells below the vacuum
    return mpq_class(s);
}

std::optional<wedge::CellSet> embedding_preimage(const FockMonomial& f, const Partition& xi, int r, int N) {
    const wedge::Context ctx = wedge::context_for(xi, r, N);
    // every exponent >= N must be occupied
    for (long long m : f.flips)
        if (m >= 0 && exponent_of(r, m) >= N) return std::nullopt;
    long long lo = std::min<long long>(0, N);
    if (!f.flips.empty()) lo = std::min(lo, exponent_of(r, f.flips.front()));
    std::vector<wedge::Cell> cells;
    for (long long p = lo; p < N; ++p)
        for (int j = 1; j <= r; ++j)
            if (f.occupied(index_of(r, p, j))) {
                const long long row = N - p;
                if (row > ctx.rows) return std::nullopt;
                cells.push_back({static_cast<int>(row), j});
            }
    const wedge::CellSet h = wedge::CellSet::from_cells(ctx, cells);
    if (!wedge::admissible(xi, h, ctx)) return std::nullopt;
    return h;
}

// ---- limit characters ----

namespace {

// coefficients [x][y] of prod_{i=1}^{D} 1 / ((1 - x^i y)(1 - x^i)^{r-1})
std::vector<std::vector<mpz_class>> denominator_series(int r, int D) {
    std::vector<std::vector<mpz_class>> c(D + 1, std::vector<mpz_class>(D + 1, 0));
    c[0][0] = 1;
    for (int i = 1; i <= D; ++i) {
        for (int x = i; x <= D; ++x)
            for (int y = 1; y <= D; ++y) c[x][y] += c[x - i][y - 1];
        for (int rep = 0; rep < r - 1; ++rep)
            for (int x = i; x <= D; ++x)
                for (int y = 0; y <= D; ++y) c[x][y] += c[x - i][y];
    }
    return c;
}

}  // namespace

Series limit_character_rhs(int n, int r, int D) {
    if (D < 0) throw std::invalid_argument("limit_character_rhs: D must be non-negative");
    const auto den = denominator_series(r, D);
    const long long base = xi_of_charge(n, r).norm2();
    Series out;
    const int B = std::abs(n) + 2 * D + 2;
    std::vector<int> xi(r);
    auto rec = [&](auto&& self, int col, int sum) -> void {
        if (col == r - 1) {
            xi[col] = n - sum;
            const WeightVector w(xi);
            const long long e2 = w.norm2() - base;
            if (e2 % 2 != 0 || e2 < 0) throw std::logic_error("limit_character_rhs: odd exponent");
            const long long e = e2 / 2;
            if (e > D) return;
            for (int x = 0; x + e <= D; ++x)
                for (int y = 0; y <= D; ++y)
                    if (den[x][y] != 0) out[{w, static_cast<int>(x + e), y}] += den[x][y];
            return;
        }
        for (int c = -B; c <= B; ++c) {
            xi[col] = c;
            self(self, col + 1, sum + c);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Series limit_character_lhs(int n, int r, int N, int D, int* max_x) {
    const int M = n + N * r;
    if (M < 0) throw std::invalid_argument("limit_character_lhs: n + N r must be non-negative");
    const Partition xi = M > 0 ? Partition{M} : Partition{};
    const auto ch = degeneration::bigraded_character(xi, r).shifted((-N) * WeightVector::tau(r));
    const int top = ch.max_x_degree();
    if (max_x) *max_x = top;
    Series out;
    for (const auto& [key, d] : ch.entries()) {
        const int x = top - std::get<1>(key);
        if (x <= D) out[{std::get<0>(key), x, std::get<2>(key)}] += static_cast<long>(d);
    }
    return out;
}

Series sector_character(int n, int r, int D) {
    Series out;
    for (const auto& f : sector_monomials(n, r, D)) out[{f.weight(r), static_cast<int>(sector_degree(f, r)), 0}] += 1;
    return out;
}

Series collapse_y(const Series& s) {
    Series out;
    for (const auto& [k, c] : s) {
        auto& slot = out[{std::get<0>(k), std::get<1>(k), 0}];
        slot += c;
    }
    std::erase_if(out, [](const auto& p) { return p.second == 0; });
    return out;
}

Series x_slice(const Series& s, int i) {
    Series out;
    for (const auto& [k, c] : s)
        if (std::get<1>(k) == i) out.emplace(k, c);
    return out;
}

}  // namespace weylpark::fock
