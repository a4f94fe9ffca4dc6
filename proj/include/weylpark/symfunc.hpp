#pragma once

#include "weylpark/combinatorics.hpp"
#include "weylpark/xpoly.hpp"

#include <map>
#include <span>
#include <utility>

namespace weylpark::symfunc {

using combinatorics::Partition;
using combinatorics::WeightVector;

// Finite sum  sum_lambda c_lambda(x) s_lambda  with c_lambda in Z[x].
// All partitions in one expansion have the same size; zero coefficients are
// never stored.
class SchurExpansion {
public:
    SchurExpansion() = default;

    static SchurExpansion single(const Partition& lambda, const XPoly& coeff = XPoly(1));

    void add(const Partition& lambda, const XPoly& coeff);
    SchurExpansion& operator+=(const SchurExpansion& o);

    // Multiplies every coefficient by c(x).
    SchurExpansion& operator*=(const XPoly& c);

    XPoly coefficient(const Partition& lambda) const;
    const std::map<Partition, XPoly>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int homogeneous_degree() const { return degree_; }  // -1 when empty

    // Largest power of x appearing in any coefficient (-1 when empty).
    int x_degree() const;

    std::string to_string() const;

    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Partition, XPoly> terms_;
    int degree_ = -1;
};

// s_lambda * e_k via the dual Pieri rule, keeping only partitions with <= r rows.
SchurExpansion multiply_by_e(const SchurExpansion& f, int k, int r);

// e_{a_1} ... e_{a_n} expanded in Schur functions, truncated to <= r rows.
SchurExpansion e_product_to_schur(std::span<const int> a, int r);

// sum over A_n(rho(xi)) of x^{|rho| - sum_i i a_i} e_{a_1}...e_{a_n}.
SchurExpansion frobenius_character(const Partition& xi, int r);

// Memoized Kostka numbers K(lambda, eta). Not thread-safe; keep one table per
// computation.
class KostkaTable {
public:
    mpz_class operator()(const Partition& lambda, const WeightVector& eta);
    std::size_t cached() const { return memo_.size(); }

private:
    mpz_class compute(const Partition& lambda, std::span<const int> content);
    std::map<std::pair<Partition, std::vector<int>>, mpz_class> memo_;
};

mpz_class kostka(const Partition& lambda, const WeightVector& eta);

XPoly weight_multiplicity(const SchurExpansion& exp, const WeightVector& eta, KostkaTable& table);
XPoly weight_multiplicity(const SchurExpansion& exp, const WeightVector& eta);

// Dimension of the irreducible gl_r-module with highest weight lambda.
mpz_class gl_dimension(const Partition& lambda, int r);

XPoly total_dimension(const SchurExpansion& exp, int r);

}  // namespace weylpark::symfunc
