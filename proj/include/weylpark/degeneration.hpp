#pragma once

#include "weylpark/combinatorics.hpp"
#include "weylpark/wedge.hpp"

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <vector>

namespace weylpark::degeneration {

using combinatorics::Partition;
using combinatorics::WeightVector;

// (weight, x-degree, y-degree)
using BigradedKey = std::tuple<WeightVector, int, int>;

class BigradedCharacter {
public:
    void add(const WeightVector& eta, int x, int y, long long dim);

    const std::map<BigradedKey, long long>& entries() const { return dims_; }
    long long dim(const WeightVector& eta, int x, int y) const;
    long long total() const;
    int max_x_degree() const;  // -1 when empty
    int max_y_degree() const;

    // e^eta -> 1: coefficient table (x, y) -> dim
    std::map<std::pair<int, int>, long long> specialize() const;
    bool symmetric_in_x_y() const;

    // Sum over y for fixed (eta, x).
    long long x_graded(const WeightVector& eta, int x) const;
    // Sum over y and x for fixed eta.
    long long weight_dim(const WeightVector& eta) const;

    BigradedCharacter shifted(const WeightVector& delta) const;

    friend bool operator==(const BigradedCharacter&, const BigradedCharacter&) = default;

private:
    std::map<BigradedKey, long long> dims_;
};

// F^0 ⊆ F^1 ⊆ ... of V(xi, N), F^j = U^{<=j} v. delta[j] holds the vectors
// added at level j (homogeneous in weight and x-degree).
struct Filtration {
    wedge::Context ctx;
    Partition xi;
    std::vector<std::vector<linalg::IntVector>> delta;
    BigradedCharacter character;

    std::vector<std::size_t> level_dims() const;  // dim F^j
    std::size_t dim() const;
    // Span of F^j, rebuilt from delta[0..j].
    linalg::RationalSpan level_span(int j) const;
};

Filtration filtration_levels(const Partition& xi, int r, int N);

// Computed at N = max(xi_1, 1).
BigradedCharacter bigraded_character(const Partition& xi, int r);
BigradedCharacter bigraded_character(const Partition& xi, int r, int N);

// sum_i i xi^t_i - sum_{i=1}^{|xi|} floor((i + r - 1) / r)
int degree_formula(const Partition& xi, int r);

struct AlphaReport {
    int n = 0, s = 0, r = 0, N = 0;
    Partition source;             // partition whose cyclic module contains the image
    wedge::ModuleVector image;
    bool image_zero = false;
    std::size_t generated_dim = 0;
    std::size_t expected_dim = 0;  // dim V(n eps_1 + s tau)
    bool matches() const { return !image_zero && generated_dim == expected_dim; }
};

// E_{r1}X^{n+1} ... E_{21}X^{n+r-1} applied to the cyclic vector of
// V((n+r)eps_1 + (s-1)tau, N) (shifted by tau when s = 0, which only changes
// the module by a Det twist), and the dimension of the submodule it generates.
AlphaReport alpha_map(int n, int s, int r, int N);

}  // namespace weylpark::degeneration
