#pragma once

// Brute-force reference computations. These only share data types with the
// library; every quantity is recomputed from definitions.

#include "young/expansion.hpp"
#include "young/slice.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using young::Integer;
using young::Rational;
using Mask = std::uint64_t;

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool in(Mask s, int i) { return (s >> (i - 1)) & 1U; }

inline std::vector<Mask> k_subsets(int n, int k) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        if (std::popcount(s) == k)
            out.push_back(s);
    return out;
}

inline Mask swap_in(Mask s, int i, int j) {
    const bool a = in(s, i), b = in(s, j);
    s &= ~((Mask{1} << (i - 1)) | (Mask{1} << (j - 1)));
    if (a)
        s |= Mask{1} << (j - 1);
    if (b)
        s |= Mask{1} << (i - 1);
    return s;
}

/// Every ordered tuple A of distinct entries outside B with a_i < b_i, found by
/// scanning all of [n]^d.
inline std::vector<std::vector<int>> sequences_below(const std::vector<int>& b, int n) {
    const std::size_t d = b.size();
    std::vector<std::vector<int>> out;
    std::vector<int> a(d, 1);
    if (d == 0)
        return {{}};
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i) {
            if (a[i] >= b[i] || std::find(b.begin(), b.end(), a[i]) != b.end())
                ok = false;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (a[j] == a[i])
                    ok = false;
        }
        if (ok)
            out.push_back(a);
        std::size_t pos = 0;
        while (pos < d && a[pos] == n)
            a[pos++] = 1;
        if (pos == d)
            break;
        ++a[pos];
    }
    return out;
}

/// A disjoint A < B exists.
inline bool has_smaller_sequence(const std::vector<int>& b, int n) {
    if (2 * b.size() > static_cast<std::size_t>(n))
        return false;  // A and B are disjoint
    return !sequences_below(b, n).empty();
}

/// chi_B at a real point x (x[0] unused).
inline Rational chi_at(const std::vector<int>& b, int n, const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& a : sequences_below(b, n)) {
        Rational term = 1;
        for (std::size_t i = 0; i < b.size(); ++i)
            term *= x[static_cast<std::size_t>(a[i])] - x[static_cast<std::size_t>(b[i])];
        total += term;
    }
    return total;
}

inline std::vector<Rational> indicator_point(Mask s, int n) {
    std::vector<Rational> x(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        if (in(s, i))
            x[static_cast<std::size_t>(i)] = 1;
    return x;
}

inline Rational chi_at_subset(const std::vector<int>& b, int n, Mask s) {
    return chi_at(b, n, indicator_point(s, n));
}

using PointFunction = std::function<Rational(const std::vector<Rational>&)>;

/// E over independent coordinates taking `hi` with probability p and `lo` otherwise.
inline Rational product_expectation(int n, const Rational& p, const Rational& lo,
                                    const Rational& hi, const PointFunction& g) {
    Rational total = 0;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        std::vector<Rational> x(static_cast<std::size_t>(n) + 1, 0);
        Rational weight = 1;
        for (int i = 1; i <= n; ++i) {
            x[static_cast<std::size_t>(i)] = in(s, i) ? hi : lo;
            weight *= in(s, i) ? p : Rational(1 - p);
        }
        total += weight * g(x);
    }
    return total;
}

inline Rational mu_expectation(int n, const Rational& p, const PointFunction& g) {
    return product_expectation(n, p, 0, 1, g);
}

inline Rational nu_expectation(int n, const Rational& p, const PointFunction& g) {
    return product_expectation(n, p, -p, Rational(1 - p), g);
}

inline Rational slice_expectation(int n, int k, const PointFunction& g) {
    Rational total = 0;
    const auto subsets = k_subsets(n, k);
    for (Mask s : subsets)
        total += g(indicator_point(s, n));
    return total / Rational(static_cast<long>(subsets.size()));
}

/// Average of f over every permutation of the coordinates 1..m.
inline young::SliceFunction permutation_average(const young::SliceFunction& f, int m) {
    const int n = f.n(), k = f.k();
    young::SliceFunction out(n, k);
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        ++count;
        for (Mask s : k_subsets(n, k)) {
            Mask image = s & ~((Mask{1} << m) - 1);
            for (int i = 1; i <= m; ++i)
                if (in(s, i))
                    image |= Mask{1} << (perm[static_cast<std::size_t>(i - 1)] - 1);
            out[f.domain().index_of(s)] += f.at(image);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] /= Rational(count);
    return out;
}

inline Rational influence(const young::SliceFunction& f, int i, int j) {
    Rational total = 0;
    const auto subsets = k_subsets(f.n(), f.k());
    for (Mask s : subsets) {
        const Rational diff = f.at(swap_in(s, i, j)) - f.at(s);
        total += diff * diff;
    }
    return total / Rational(2 * static_cast<long>(subsets.size()));
}

/// Dimension of the pure-degree-d harmonic multilinear polynomials in n
/// variables: kernel of the defect map, by floating-point rank.
inline long harmonic_kernel_dimension(int n, int d) {
    const auto cols = k_subsets(n, d);
    if (d == 0)
        return 1;
    const auto rows = k_subsets(n, d - 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                              static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows.size(); ++r)
            if ((rows[r] & cols[c]) == rows[r])
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    return static_cast<long>(cols.size()) - static_cast<long>(lu.rank());
}

/// Matrix on the slice indexed in the library's point order.
inline Eigen::MatrixXd profile_matrix(int n, int k, const std::vector<double>& w) {
    const auto& slice = young::Slice::get(n, k);
    const auto size = static_cast<Eigen::Index>(slice.size());
    Eigen::MatrixXd m(size, size);
    for (Eigen::Index a = 0; a < size; ++a)
        for (Eigen::Index b = 0; b < size; ++b)
            m(a, b) = w[static_cast<std::size_t>(std::popcount(
                slice.point(static_cast<std::size_t>(a)) & slice.point(static_cast<std::size_t>(b))))];
    return m;
}

/// L = I - (1/C(n,2)) sum_{i<j} P_ij in the library's point order.
inline Eigen::MatrixXd laplacian_matrix(int n, int k) {
    const auto& slice = young::Slice::get(n, k);
    const auto size = static_cast<Eigen::Index>(slice.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(size, size);
    const double pairs = n * (n - 1) / 2.0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (Eigen::Index a = 0; a < size; ++a) {
                const Mask t = swap_in(slice.point(static_cast<std::size_t>(a)), i, j);
                m(a, static_cast<Eigen::Index>(slice.index_of(t))) -= 1.0 / pairs;
            }
    return m;
}

inline Eigen::VectorXd to_vector(const young::SliceFunction& f) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = f[i].get_d();
    return v;
}

class Random {
public:
    explicit Random(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational() { return q(integer(-6, 6), integer(1, 4)); }

    young::SliceFunction function(int n, int k) {
        young::SliceFunction f(n, k);
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = rational();
        return f;
    }

    young::SliceFunction boolean(int n, int k) {
        young::SliceFunction f(n, k);
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = integer(0, 1);
        return f;
    }

    young::YoungExpansion expansion(int n, int k) {
        young::YoungExpansion e(n, k);
        for (const auto& b : young::SliceBasis::get(n, k).top_sets())
            e.set(b, rational());
        return e;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace oracle
