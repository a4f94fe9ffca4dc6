#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace weylpark::linalg {

using Key = std::uint64_t;

// Sparse vector with integer entries, keys strictly ascending, no zeros.
// Spans over Q are tracked with primitive integer representatives
// (content 1, positive leading entry), so rank decisions stay exact.
using IntVector = std::vector<std::pair<Key, mpz_class>>;

// Sorts, merges duplicate keys and drops zeros.
void canonicalize(IntVector& v);

// Divides by the gcd of the entries and makes the leading entry positive.
void make_primitive(IntVector& v);

// a*u - b*w, both inputs canonical.
IntVector combine(const mpz_class& a, const IntVector& u, const mpz_class& b, const IntVector& w);

// Semi-echelon basis of a subspace of Q^(keys). Every stored row has a
// distinct pivot, which is its smallest key; rows are primitive.
class RationalSpan {
public:
    // Reduces v against the stored rows; returns the (primitive) remainder.
    IntVector reduce(IntVector v) const;

    // Adds v to the span. Returns true iff the dimension grew.
    bool insert(IntVector v);

    bool contains(const IntVector& v) const { return reduce(v).empty(); }

    std::size_t dim() const { return rows_.size(); }
    const std::vector<IntVector>& rows() const { return rows_; }
    std::vector<Key> pivots() const;

private:
    std::vector<IntVector> rows_;
    std::unordered_map<Key, std::size_t> pivot_index_;
};

}  // namespace weylpark::linalg
