#pragma once

#include "young/poly.hpp"
#include "young/rational.hpp"

#include <unordered_map>
#include <vector>

namespace young {

/// The k-subsets of [n] in lexicographic order of their sorted index lists.
class Slice {
public:
    /// Shared, lazily built instance. Requires 0 <= k <= n/2.
    static const Slice& get(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return points_.size(); }
    Monomial point(std::size_t i) const { return points_[i]; }
    const std::vector<Monomial>& points() const { return points_; }
    /// Position of a k-subset; throws InvalidInput if it is not one.
    std::size_t index_of(Monomial subset) const;

private:
    Slice(int n, int k);

    int n_;
    int k_;
    std::vector<Monomial> points_;
    std::unordered_map<Monomial, std::size_t> index_;
};

void check_slice_parameters(int n, int k);

/// Exact-valued function on the (n,k) slice; values follow Slice::points().
class SliceFunction {
public:
    SliceFunction(int n, int k);
    SliceFunction(int n, int k, std::vector<Rational> values);

    static SliceFunction constant(int n, int k, const Rational& c);
    /// Restriction of a polynomial in n variables to the slice.
    static SliceFunction restrict(const MultilinearPolynomial& p, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const Slice& domain() const { return Slice::get(n_, k_); }
    std::size_t size() const { return values_.size(); }
    const std::vector<Rational>& values() const { return values_; }

    const Rational& operator[](std::size_t i) const { return values_[i]; }
    Rational& operator[](std::size_t i) { return values_[i]; }
    const Rational& at(Monomial subset) const { return values_[domain().index_of(subset)]; }

    bool is_boolean() const;
    bool same_domain(const SliceFunction& other) const {
        return n_ == other.n_ && k_ == other.k_;
    }

    SliceFunction& operator+=(const SliceFunction& other);
    SliceFunction& operator-=(const SliceFunction& other);
    SliceFunction& operator*=(const Rational& c);
    friend SliceFunction operator+(SliceFunction a, const SliceFunction& b) { return a += b; }
    friend SliceFunction operator-(SliceFunction a, const SliceFunction& b) { return a -= b; }
    friend SliceFunction operator*(SliceFunction a, const Rational& c) { return a *= c; }
    friend bool operator==(const SliceFunction&, const SliceFunction&) = default;

private:
    void check_domain(const SliceFunction& other) const;

    int n_;
    int k_;
    std::vector<Rational> values_;
};

/// Swaps the membership of coordinates i and j in a subset.
Monomial swap_coordinates(Monomial subset, int i, int j);

}  // namespace young
