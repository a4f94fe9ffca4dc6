#include "weylpark/xpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace weylpark {

XPoly XPoly::monomial(const mpz_class& c, int degree) {
    if (degree < 0) throw std::invalid_argument("XPoly::monomial: negative degree");
    XPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(degree + 1, mpz_class(0));
    p.coeffs_[degree] = c;
    return p;
}

mpz_class XPoly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

mpz_class XPoly::at_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

mpz_class XPoly::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator*=(const mpz_class& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.trim();
    return out;
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string XPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << '-';
        mpz_class mag = abs(c);
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

}  // namespace weylpark
