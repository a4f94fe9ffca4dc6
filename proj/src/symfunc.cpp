#include "weylpark/symfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace weylpark::symfunc {

SchurExpansion SchurExpansion::single(const Partition& lambda, const XPoly& coeff) {
    SchurExpansion e;
    e.add(lambda, coeff);
    return e;
}

void SchurExpansion::add(const Partition& lambda, const XPoly& coeff) {
    if (coeff.is_zero()) return;
    if (degree_ >= 0 && lambda.size() != degree_)
        throw std::invalid_argument("SchurExpansion: mixing degrees " + std::to_string(degree_) + " and " +
                                    std::to_string(lambda.size()));
    if (degree_ < 0) degree_ = lambda.size();
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.empty()) degree_ = -1;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
    for (const auto& [lambda, c] : o.terms_) add(lambda, c);
    return *this;
}

SchurExpansion& SchurExpansion::operator*=(const XPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        degree_ = -1;
        return *this;
    }
    for (auto& [lambda, coeff] : terms_) coeff = coeff * c;
    return *this;
}

XPoly SchurExpansion::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? XPoly() : it->second;
}

int SchurExpansion::x_degree() const {
    int d = -1;
    for (const auto& [lambda, c] : terms_) d = std::max(d, c.degree());
    return d;
}

std::string SchurExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        if (!first) os << " + ";
        os << '(' << c.to_string() << ")*s" << lambda.to_string();
        first = false;
    }
    return os.str();
}

namespace {

// Adds a vertical strip of size k to lambda (rows 0..r-1), recursing row by row.
void vertical_strips(const std::vector<int>& lambda, int k, int row, std::vector<int>& mu,
                     std::vector<Partition>& out) {
    const int r = static_cast<int>(lambda.size());
    if (k == 0) {
        std::vector<int> rest(mu);
        for (int i = row; i < r; ++i) rest.push_back(lambda[i]);
        out.emplace_back(std::move(rest));
        return;
    }
    if (row == r || r - row < k) return;
    for (int b = 1; b >= 0; --b) {
        if (b > k) continue;
        const int value = lambda[row] + b;
        if (row > 0 && value > mu[row - 1]) continue;
        mu.push_back(value);
        vertical_strips(lambda, k - b, row + 1, mu, out);
        mu.pop_back();
    }
}

}  // namespace

SchurExpansion multiply_by_e(const SchurExpansion& f, int k, int r) {
    SchurExpansion out;
    if (k < 0 || k > r) return out;
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.length() > r) continue;
        std::vector<Partition> grown;
        std::vector<int> mu;
        vertical_strips(lambda.padded(r), k, 0, mu, grown);
        for (const auto& g : grown) out.add(g, c);
    }
    return out;
}

SchurExpansion e_product_to_schur(std::span<const int> a, int r) {
    SchurExpansion acc = SchurExpansion::single(Partition{});
    for (int k : a) {
        acc = multiply_by_e(acc, k, r);
        if (acc.empty()) break;
    }
    return acc;
}

SchurExpansion frobenius_character(const Partition& xi, int r) {
    if (xi.length() > r) throw std::invalid_argument("frobenius_character: xi has more than r parts");
    const int n = xi.size();
    const Partition rho = combinatorics::rho_of_xi(xi);
    SchurExpansion out;
    for (const auto& a : combinatorics::enumerate_A(n, rho)) {
        int weighted = 0;
        for (int i = 0; i < n; ++i) weighted += (i + 1) * a[i];
        const int m = rho.size() - weighted;
        SchurExpansion term = e_product_to_schur(a, r);
        term *= XPoly::monomial(1, m);
        out += term;
    }
    return out;
}

mpz_class KostkaTable::operator()(const Partition& lambda, const WeightVector& eta) {
    if (!eta.non_negative()) return 0;
    if (lambda.size() != eta.total()) return 0;
    return compute(lambda, eta.coords());
}

// Entries equal to the last letter form a horizontal strip lambda/mu.
mpz_class KostkaTable::compute(const Partition& lambda, std::span<const int> content) {
    while (!content.empty() && content.back() == 0) content = content.first(content.size() - 1);
    if (content.empty()) return lambda.empty() ? 1 : 0;
    if (lambda.length() > static_cast<int>(content.size())) return 0;

    auto key = std::make_pair(lambda, std::vector<int>(content.begin(), content.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int strip = content.back();
    const auto rest = content.first(content.size() - 1);
    const auto& parts = lambda.parts();
    const int len = lambda.length();
    mpz_class total = 0;

    // mu_i in [lambda_{i+1}, lambda_i], sum(lambda_i - mu_i) = strip.
    std::vector<int> mu(len);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == len) {
            if (left == 0) total += compute(Partition(mu), rest);
            return;
        }
        const int lo = i + 1 < len ? parts[i + 1] : 0;
        for (int v = parts[i]; v >= lo; --v) {
            const int removed = parts[i] - v;
            if (removed > left) break;
            mu[i] = v;
            self(self, i + 1, left - removed);
        }
    };
    rec(rec, 0, strip);

    memo_.emplace(std::move(key), total);
    return total;
}

mpz_class kostka(const Partition& lambda, const WeightVector& eta) {
    KostkaTable table;
    return table(lambda, eta);
}

XPoly weight_multiplicity(const SchurExpansion& exp, const WeightVector& eta, KostkaTable& table) {
    XPoly out;
    if (!eta.non_negative()) return out;
    if (!exp.empty() && eta.total() != exp.homogeneous_degree())
        throw std::invalid_argument("weight_multiplicity: |eta| differs from the expansion degree");
    for (const auto& [lambda, c] : exp.terms()) {
        const mpz_class k = table(lambda, eta);
        if (k != 0) out += c * k;
    }
    return out;
}

XPoly weight_multiplicity(const SchurExpansion& exp, const WeightVector& eta) {
    KostkaTable table;
    return weight_multiplicity(exp, eta, table);
}

mpz_class gl_dimension(const Partition& lambda, int r) {
    if (lambda.length() > r) return 0;
    mpz_class num = 1, den = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            num *= lambda[i] - lambda[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

XPoly total_dimension(const SchurExpansion& exp, int r) {
    XPoly out;
    for (const auto& [lambda, c] : exp.terms()) {
        if (lambda.length() > r)
            throw std::invalid_argument("total_dimension: partition with more than r rows");
        out += c * gl_dimension(lambda, r);
    }
    return out;
}

}  // namespace weylpark::symfunc
