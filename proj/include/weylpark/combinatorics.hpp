#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace weylpark::combinatorics {

// Weakly decreasing list of non-negative integers. Trailing zeros are
// dropped on construction, so (2,0) and (2) compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // The partition (1^{m_1} 2^{m_2} ...) in which j appears m_j times.
    static Partition from_multiplicities(std::span<const int> multiplicities);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    // 0-based; zero past the last part.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    // Parts padded with zeros to length r.
    std::vector<int> padded(int r) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Integer vector in Z^r; used for gl_r weights.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> coords) : coords_(std::move(coords)) {}
    WeightVector(std::initializer_list<int> coords) : coords_(coords) {}

    static WeightVector zero(int r) { return WeightVector(std::vector<int>(r, 0)); }
    static WeightVector epsilon(int i, int r);  // 1-based i
    static WeightVector tau(int r) { return WeightVector(std::vector<int>(r, 1)); }
    static WeightVector of(const Partition& p, int r) { return WeightVector(p.padded(r)); }

    int rank() const { return static_cast<int>(coords_.size()); }
    const std::vector<int>& coords() const { return coords_; }
    int operator[](std::size_t i) const { return coords_[i]; }
    int& operator[](std::size_t i) { return coords_[i]; }

    int total() const;          // |eta|
    long long norm2() const;    // (eta, eta)
    bool non_negative() const;
    bool is_dominant() const;   // weakly decreasing

    WeightVector& operator+=(const WeightVector& o);
    WeightVector& operator-=(const WeightVector& o);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend WeightVector operator*(int k, WeightVector a);

    std::string to_string() const;

    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<int> coords_;
};

struct ParkingFunction {
    std::vector<int> values;  // f(1), ..., f(n)
    Partition rho;
};

Partition transpose(const Partition& p);

// rho = (1^{xi^t_1} 2^{xi^t_2} ...); |rho| = sum_i i xi^t_i.
Partition rho_of_xi(const Partition& xi);

// Sequences (a_1..a_n), a_i >= 0, sum = n, with
// a_1 + ... + a_{rho_{k-s+1}} >= s for s = 1..k. Lexicographic order.
std::vector<std::vector<int>> enumerate_A(int n, const Partition& rho);

bool is_parking_function(std::span<const int> values, const Partition& rho);

// All rho-parking functions f: {1..n} -> {1..n}, lexicographic in (f(1),...,f(n)).
std::vector<ParkingFunction> enumerate_parking(int n, const Partition& rho);

// |rho| - sum_i f(i)
int parking_statistic(const ParkingFunction& f);

// a - b is a non-negative integer combination of eps_i - eps_{i+1}.
bool in_Q_plus(const WeightVector& a, const WeightVector& b);

mpz_class factorial(int n);
mpz_class multinomial(std::span<const int> parts);

// (r(n+1))! / ((n+1)! ((r-1)(n+1)+1)!)
mpz_class higher_catalan(int r, int n);

// Partitions of n with at most max_parts parts, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n, int max_parts);

// Vectors eta in Z_{>=0}^r with |eta| = n, lexicographic order.
std::vector<WeightVector> compositions(int n, int r);

}  // namespace weylpark::combinatorics
