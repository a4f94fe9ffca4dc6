#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace weylpark {

// Univariate polynomial in x with arbitrary-precision integer coefficients.
// Coefficients are stored densely from x^0 upwards, with no trailing zeros.
class XPoly {
public:
    XPoly() = default;
    XPoly(long c) { if (c != 0) coeffs_.push_back(c); }  // NOLINT: implicit constant
    static XPoly monomial(const mpz_class& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    mpz_class coefficient(int k) const;
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    mpz_class at_one() const;
    mpz_class evaluate(const mpz_class& x) const;

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const mpz_class& c);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(XPoly a, const mpz_class& c) { return a *= c; }

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

}  // namespace weylpark
