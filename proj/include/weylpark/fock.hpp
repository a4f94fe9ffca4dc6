#pragma once

#include "weylpark/combinatorics.hpp"
#include "weylpark/wedge.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace weylpark::fock {

using combinatorics::Partition;
using combinatorics::WeightVector;

// u_j (x) x^p  <->  gl_inf index m = r*p + (j-1). The vacuum is the wedge of
// all u_m with m >= 0, i.e. every column filled from exponent 0 upwards.
inline long long index_of(int r, long long p, int j) { return r * p + (j - 1); }
inline long long exponent_of(int r, long long m) { return m >= 0 ? m / r : -((-m + r - 1) / r); }
inline int column_of(int r, long long m) { return static_cast<int>(m - r * exponent_of(r, m)) + 1; }

// Semi-infinite monomial stored as its symmetric difference with the vacuum:
// flips < 0 are added cells, flips >= 0 are removed ones. Ascending order of
// m is the wedge order.
struct FockMonomial {
    std::vector<long long> flips;

    static FockMonomial vacuum() { return {}; }
    bool occupied(long long m) const;
    int charge() const;
    WeightVector weight(int r) const;    // per-column charges
    long long global_degree(int r) const;  // sum_removed p - sum_added p

    std::string to_string(int r) const;
    friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
};

class FockVector {
public:
    FockVector() = default;
    static FockVector monomial(const FockMonomial& f, const mpq_class& c = 1);

    const std::map<FockMonomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coefficient(const FockMonomial& f) const;
    void add(const FockMonomial& f, const mpq_class& c);

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const mpq_class& c);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const mpq_class& c, FockVector a) { return a *= c; }
    friend bool operator==(const FockVector&, const FockVector&) = default;

    std::string to_string(int r) const;

private:
    std::map<FockMonomial, mpq_class> terms_;
};

// r x r matrix, row-major.
struct Matrix {
    int r = 0;
    std::vector<mpq_class> a;

    static Matrix zero(int r) { return {r, std::vector<mpq_class>(r * r)}; }
    static Matrix unit(int r, int i, int j);  // E_ij, 1-based
    static Matrix identity(int r);
    mpq_class& operator()(int i, int j) { return a[(i - 1) * r + (j - 1)]; }
    const mpq_class& operator()(int i, int j) const { return a[(i - 1) * r + (j - 1)]; }
    bool is_zero() const;
    mpq_class trace() const;
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

// g (x) x^i D^a
struct DiffOpTerm {
    Matrix g;
    int i = 0;
    int a = 0;
};

// Element of gl_r (x) C[x, x^{-1}, D] + C K.
class DiffOp {
public:
    explicit DiffOp(int r = 1) : r_(r) {}
    static DiffOp term(const Matrix& g, int i, int a);
    static DiffOp unit(int r, int p, int q, int i, int a, const mpq_class& c = 1);  // c E_pq x^i D^a
    static DiffOp central(int r, const mpq_class& c);
    // E_ij X^k Y^l with X -> x, Y -> xD:  (xD)^l = sum_m S(l,m) x^m D^m.
    static DiffOp from_current(int r, const wedge::CurrentElement& g);

    int r() const { return r_; }
    const std::vector<DiffOpTerm>& terms() const { return terms_; }
    const mpq_class& central_charge() const { return central_; }

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator*=(const mpq_class& c);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, DiffOp b) { return a += (b *= -1); }
    friend DiffOp operator*(const mpq_class& c, DiffOp a) { return a *= c; }

    std::string to_string() const;

private:
    void add_term(DiffOpTerm t);
    int r_;
    std::vector<DiffOpTerm> terms_;  // distinct (i, a), non-zero g
    mpq_class central_ = 0;
};

// Product in the algebra of matrix differential operators (central part dropped).
DiffOp compose(const DiffOp& A, const DiffOp& B);
DiffOp commutator(const DiffOp& A, const DiffOp& B);

mpz_class falling(long long s, int a);

// delta_{i+j-a-b} Tr(g1 g2) (-1)^a a! b! / (a+b+1)! prod_{k=0}^{a+b} (i-k), extended bilinearly.
mpq_class cocycle_formula(const DiffOpTerm& A, const DiffOpTerm& B);
mpq_class cocycle_formula(const DiffOp& A, const DiffOp& B);

FockVector act_fock(const DiffOp& A, const FockVector& v);

// n = s r + t, 0 <= t < r: xi(n) = s tau + eps_1 + ... + eps_t.
WeightVector xi_of_charge(int n, int r);
// v^{inf/2}_xi: column j filled from exponent -xi_j upwards.
FockMonomial highest_weight_monomial(const WeightVector& xi);
FockMonomial highest_weight_monomial(int n, int r);

// Sector-relative degree: global degree minus that of v_{xi(n)}, n = charge.
long long sector_degree(const FockMonomial& f, int r);

// All charge-n monomials with sector-relative degree <= depth, ascending.
std::vector<FockMonomial> sector_monomials(int n, int r, int depth);

struct CocycleCheck {
    bool scalar = true;     // defect is a multiple of the identity on every sample
    bool consistent = true; // same scalar on every sample
    mpq_class value = 0;    // measured scalar
    mpq_class expected = 0; // closed form
    bool ok() const { return scalar && consistent && value == expected; }
};

// [act A, act B] - act [A, B] on each sample, compared with cocycle_formula.
CocycleCheck verify_cocycle(const DiffOp& A, const DiffOp& B, const std::vector<FockMonomial>& samples);

// z^{-m-2} coefficient of E_jj(D;z) + 1/2 :E_jj(1;z)^2: - 1/2 dE_jj(1;z) applied to v.
FockVector lemma_operator(int r, int j, int m, const FockVector& v);
bool lemma_cur_check(int r, int j, int m, const std::vector<FockMonomial>& samples);

// T_eta: a column-j cell at exponent p moves to p - eta_j.
FockMonomial translate(const WeightVector& eta, const FockMonomial& f);
FockVector translate(const WeightVector& eta, const FockVector& v);

// V(xi, N) -> L: cell (i, j) becomes u_j^{N-i}, wedged with all exponents >= N.
FockMonomial embed_monomial(const wedge::Context& ctx, wedge::Mask h, int& sign);
FockVector embed(const wedge::ModuleVector& v);

// Scalar by which the Fock action of E_ij X^k Y^l differs from the wedge action
// on embedded vectors (the Det(-N) twist): nonzero only for diagonal, k = 0.
mpq_class det_twist(const wedge::CurrentElement& g, int N);

// H with embed(u_H) = +-f inside the window of V(xi, N), if one exists and is admissible.
std::optional<wedge::CellSet> embedding_preimage(const FockMonomial& f, const Partition& xi, int r, int N);

// Truncated series: (weight, x, y) -> coefficient.
using SeriesKey = std::tuple<WeightVector, int, int>;
using Series = std::map<SeriesKey, mpz_class>;

Series limit_character_rhs(int n, int r, int D);
// Rec_x of ch_{x,y} V((n+Nr)eps_1) twisted by Det^{-N}, truncated at x^D.
// max_x receives d((n+Nr)eps_1), the top x-degree before reversal.
Series limit_character_lhs(int n, int r, int N, int D, int* max_x = nullptr);

// Counts of sector monomials by (weight, sector-relative degree); y = 0.
Series sector_character(int n, int r, int D);

// Sum over y (the y -> 1 specialization).
Series collapse_y(const Series& s);
// Coefficients of x^i only.
Series x_slice(const Series& s, int i);

}  // namespace weylpark::fock
