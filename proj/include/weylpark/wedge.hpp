#pragma once

#include "weylpark/combinatorics.hpp"
#include "weylpark/rational_span.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace weylpark::wedge {

using combinatorics::Partition;
using combinatorics::WeightVector;
using Mask = std::uint64_t;

// Ambient space of V(xi, N): wedges of u_j^{N-i} with rows i in 1..rows.
// Cell (i, j) is bit (i-1)*r + (j-1); ascending bit order is the canonical
// wedge order (exponent descending, then column ascending).
struct Context {
    int r = 1;
    int N = 1;
    int rows = 1;

    Context() = default;
    Context(int r_, int N_, int rows_);

    int bit(int row, int col) const { return (row - 1) * r + (col - 1); }
    int row_of(int bit) const { return bit / r + 1; }
    int col_of(int bit) const { return bit % r + 1; }
    int exponent(int row) const { return N - row; }

    friend bool operator==(const Context&, const Context&) = default;
};

// Context for V(xi, N) with xi padded to r parts; rows = max(xi_1, 1).
Context context_for(const Partition& xi, int r, int N);

struct Cell {
    int row;
    int col;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A set of cells, i.e. the wedge monomial u_H.
struct CellSet {
    Mask bits = 0;

    static CellSet from_cells(const Context& ctx, const std::vector<Cell>& cells);
    std::vector<Cell> cells(const Context& ctx) const;  // canonical order
    int size() const { return __builtin_popcountll(bits); }
    WeightVector weight(const Context& ctx) const;
    int row_sum(const Context& ctx) const;

    friend auto operator<=>(const CellSet&, const CellSet&) = default;
};

// E_ij (x) X^k Y^l.
struct CurrentElement {
    int i, j, k, l;
    std::string to_string() const;
};

// Sparse exact-rational combination of wedge monomials, keys ascending.
class ModuleVector {
public:
    ModuleVector() = default;
    explicit ModuleVector(Context ctx) : ctx_(ctx) {}
    static ModuleVector monomial(const Context& ctx, CellSet h, const mpq_class& c = 1);

    const Context& context() const { return ctx_; }
    const std::vector<std::pair<Mask, mpq_class>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coefficient(CellSet h) const;

    // Unsorted input is fine; duplicates are merged and zeros dropped.
    static ModuleVector from_terms(const Context& ctx, std::vector<std::pair<Mask, mpq_class>> terms);

    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    ModuleVector& operator*=(const mpq_class& c);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const mpq_class& c, ModuleVector a) { return a *= c; }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    // Part of weight eta.
    ModuleVector component(const WeightVector& eta) const;

    linalg::IntVector to_integer() const;  // denominators cleared, primitive
    static ModuleVector from_integer(const Context& ctx, const linalg::IntVector& v);

    std::string to_string() const;

private:
    Context ctx_;
    std::vector<std::pair<Mask, mpq_class>> terms_;
};

CellSet cyclic_monomial(const Partition& xi, const Context& ctx);

// sum_i i xi^t_i - sum_{(i,j) in H} i
int degree_statistic(const CellSet& h, const Partition& xi, const Context& ctx);
std::pair<WeightVector, int> weight_and_degree(const CellSet& h, const Partition& xi, const Context& ctx);

bool admissible(const Partition& xi, const CellSet& h, const Context& ctx);

// All admissible H in the window of ctx, ascending by mask.
std::vector<CellSet> admissible_sets(const Partition& xi, const Context& ctx);

// Image of one monomial: list of (monomial, integer coefficient), unsorted,
// possibly with repeats.
void act_monomial(const Context& ctx, const CurrentElement& g, Mask h,
                  std::vector<std::pair<Mask, long long>>& out);

ModuleVector act(const CurrentElement& g, const ModuleVector& v);
linalg::IntVector act(const Context& ctx, const CurrentElement& g, const linalg::IntVector& v);

// E_ij X^k Y^l with k < kmax, l <= lmax (k >= rows kills everything).
std::vector<CurrentElement> generators(int r, int kmax, int lmin, int lmax);

struct Closure {
    Context ctx;
    linalg::RationalSpan span;
    std::size_t dim() const { return span.dim(); }
};

// Closes span + seeds under gens, in place. Returns the raw vectors that
// enlarged the span; their span is the newly added part.
std::vector<linalg::IntVector> extend_closure(const Context& ctx, linalg::RationalSpan& span,
                                              std::vector<linalg::IntVector> seeds,
                                              const std::vector<CurrentElement>& gens);

// Closure of span(start) under the given generators.
Closure closure_of(const Context& ctx, const std::vector<linalg::IntVector>& start,
                   const std::vector<CurrentElement>& gens);

// V(xi, N) = U(gl_r (x) C<X,Y>) v_xi. Uses k <= xi_1 - 1 and l <= xi_1.
Closure cyclic_closure(const Partition& xi, int r, int N);

// Lie bracket [A, B] of two current elements, expanded with YX - XY = X.
// Result is a list of (coefficient, element).
std::vector<std::pair<mpz_class, CurrentElement>> bracket(const CurrentElement& a, const CurrentElement& b);

}  // namespace weylpark::wedge
