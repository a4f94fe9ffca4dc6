#include "weylpark/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylpark::combinatorics {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition has a negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_multiplicities(std::span<const int> multiplicities) {
    std::vector<int> parts;
    for (int j = static_cast<int>(multiplicities.size()); j >= 1; --j) {
        if (multiplicities[j - 1] < 0)
            throw std::invalid_argument("negative multiplicity");
        parts.insert(parts.end(), multiplicities[j - 1], j);
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int r) const {
    if (length() > r) throw std::invalid_argument("partition " + to_string() + " has more than r parts");
    std::vector<int> out(parts_);
    out.resize(r, 0);
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

WeightVector WeightVector::epsilon(int i, int r) {
    WeightVector w = zero(r);
    w.coords_.at(i - 1) = 1;
    return w;
}

int WeightVector::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

long long WeightVector::norm2() const {
    long long s = 0;
    for (int c : coords_) s += static_cast<long long>(c) * c;
    return s;
}

bool WeightVector::non_negative() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

bool WeightVector::is_dominant() const {
    return std::is_sorted(coords_.rbegin(), coords_.rend());
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
    if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
    if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

WeightVector operator*(int k, WeightVector a) {
    for (int& c : a.coords_) c *= k;
    return a;
}

std::string WeightVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ')';
    return os.str();
}

Partition transpose(const Partition& p) {
    std::vector<int> t(p.empty() ? 0 : p[0], 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i) ++t[i];
    return Partition(std::move(t));
}

Partition rho_of_xi(const Partition& xi) {
    const Partition t = transpose(xi);
    return Partition::from_multiplicities(t.parts());
}

namespace {

// Prefix bounds: requirement[m] = minimal value of a_1 + ... + a_m.
std::vector<int> prefix_requirements(int n, const Partition& rho) {
    std::vector<int> need(n + 1, 0);
    const int k = rho.length();
    for (int s = 1; s <= k; ++s) {
        const int upto = std::min(rho[k - s], n);
        need[upto] = std::max(need[upto], s);
    }
    // A requirement at a shorter prefix implies the same lower bound later on.
    for (int m = 1; m <= n; ++m) need[m] = std::max(need[m], need[m - 1]);
    return need;
}

void extend_A(int n, const std::vector<int>& need, std::vector<int>& current, int sum,
              std::vector<std::vector<int>>& out) {
    const int pos = static_cast<int>(current.size());
    if (pos == n) {
        if (sum == n) out.push_back(current);
        return;
    }
    for (int a = 0; sum + a <= n; ++a) {
        if (sum + a < need[pos + 1]) continue;
        current.push_back(a);
        extend_A(n, need, current, sum + a, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_A(int n, const Partition& rho) {
    if (n < 0) throw std::invalid_argument("enumerate_A: n must be non-negative");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    const auto need = prefix_requirements(n, rho);
    if (need[0] > 0) return out;  // unreachable for partitions without zero parts
    extend_A(n, need, current, 0, out);
    return out;
}

bool is_parking_function(std::span<const int> values, const Partition& rho) {
    const int n = static_cast<int>(values.size());
    std::vector<int> count(n + 1, 0);
    for (int v : values) {
        if (v < 1 || v > n) return false;
        ++count[v];
    }
    std::partial_sum(count.begin(), count.end(), count.begin());
    const int k = rho.length();
    for (int s = 1; s <= k; ++s) {
        const int upto = std::min(rho[k - s], n);
        if (count[upto] < s) return false;
    }
    return true;
}

std::vector<ParkingFunction> enumerate_parking(int n, const Partition& rho) {
    if (n < 0) throw std::invalid_argument("enumerate_parking: n must be non-negative");
    std::vector<ParkingFunction> out;
    std::vector<int> f(n, 1);
    while (true) {
        if (is_parking_function(f, rho)) out.push_back({f, rho});
        int pos = n - 1;
        while (pos >= 0 && f[pos] == n) f[pos--] = 1;
        if (pos < 0) break;
        ++f[pos];
    }
    return out;
}

int parking_statistic(const ParkingFunction& f) {
    return f.rho.size() - std::accumulate(f.values.begin(), f.values.end(), 0);
}

bool in_Q_plus(const WeightVector& a, const WeightVector& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("in_Q_plus: rank mismatch");
    long long partial = 0;
    for (int i = 0; i < a.rank(); ++i) {
        partial += a[i] - b[i];
        if (partial < 0) return false;
    }
    return partial == 0;
}

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

mpz_class multinomial(std::span<const int> parts) {
    int total = 0;
    mpz_class denom = 1;
    for (int p : parts) {
        total += p;
        denom *= factorial(p);
    }
    return factorial(total) / denom;
}

mpz_class higher_catalan(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("higher_catalan: need r >= 1, n >= 0");
    return factorial(r * (n + 1)) / (factorial(n + 1) * factorial((r - 1) * (n + 1) + 1));
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, current, out);
        current.pop_back();
    }
}

void compositions_rec(int remaining, int slots, std::vector<int>& current,
                      std::vector<WeightVector>& out) {
    if (slots == 1) {
        current.push_back(remaining);
        out.emplace_back(current);
        current.pop_back();
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        current.push_back(v);
        compositions_rec(remaining - v, slots - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(n, n, max_parts, current, out);
    return out;
}

std::vector<WeightVector> compositions(int n, int r) {
    std::vector<WeightVector> out;
    if (r == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> current;
    compositions_rec(n, r, current, out);
    return out;
}

}  // namespace weylpark::combinatorics
