#pragma once

#include "young/combinatorics.hpp"
#include "young/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace young {

/// Squarefree monomial as a bitmask: bit (i-1) set iff x_i divides it.
using Monomial = std::uint64_t;

inline constexpr int kMaxVariables = 64;

Monomial monomial_of(std::span<const int> indices);
std::vector<int> indices_of(Monomial m);
int degree_of(Monomial m);

/// Sparse polynomial with squarefree monomials over x_1..x_n and exact rational
/// coefficients. Zero coefficients are never stored.
class MultilinearPolynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit MultilinearPolynomial(int n = 0);
    static MultilinearPolynomial constant(int n, const Rational& c);
    static MultilinearPolynomial variable(int n, int index);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Monomial m) const;

    /// Adds c * m, pruning the term if it cancels.
    void add_term(Monomial m, const Rational& c);

    /// Maximal monomial degree; -1 for the zero polynomial.
    int degree() const;
    bool is_pure_degree(int d) const;

    /// Value at the 0/1 point whose support is `point`.
    Rational evaluate_at(Monomial point) const;
    Rational evaluate(std::span<const Rational> x) const;

    MultilinearPolynomial& operator+=(const MultilinearPolynomial& other);
    MultilinearPolynomial& operator-=(const MultilinearPolynomial& other);
    MultilinearPolynomial& operator*=(const Rational& c);

    friend MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial& b) {
        return a += b;
    }
    friend MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial& b) {
        return a -= b;
    }
    friend MultilinearPolynomial operator*(MultilinearPolynomial a, const Rational& c) {
        return a *= c;
    }
    friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;

    /// Product reduced with x_i^2 = x_i, i.e. restricted to the Boolean cube.
    MultilinearPolynomial boolean_product(const MultilinearPolynomial& other) const;

    std::string to_string() const;

private:
    void check_compatible(const MultilinearPolynomial& other) const;

    int n_;
    Terms terms_;
};

inline MultilinearPolynomial add(const MultilinearPolynomial& p, const MultilinearPolynomial& q) {
    return p + q;
}
inline MultilinearPolynomial scale(const MultilinearPolynomial& p, const Rational& c) {
    return p * c;
}

/// Index -> positive exponent. Products of multilinear polynomials live here.
class ExponentMonomial {
public:
    ExponentMonomial() = default;
    explicit ExponentMonomial(std::map<int, int> exponents);
    /// Product of two squarefree monomials.
    static ExponentMonomial product(Monomial a, Monomial b);

    const std::map<int, int>& exponents() const { return exponents_; }
    int distinct_count() const { return static_cast<int>(exponents_.size()); }
    int total_degree() const;

    /// Exponents sorted decreasingly and placed on x_1, x_2, ...; equal moments
    /// under every exchangeable measure.
    ExponentMonomial canonical() const;

    friend auto operator<=>(const ExponentMonomial&, const ExponentMonomial&) = default;

private:
    std::map<int, int> exponents_;
};

using ExponentPolynomial = std::map<ExponentMonomial, Rational>;

/// Formal product with no reduction of squares.
ExponentPolynomial multiply_to_exponents(const MultilinearPolynomial& p,
                                         const MultilinearPolynomial& q);

/// sum_i dP/dx_i.
MultilinearPolynomial harmonic_defect(const MultilinearPolynomial& p);
bool is_harmonic(const MultilinearPolynomial& p);

/// prod_i (x_{a_i} - x_{b_i}) expanded.
MultilinearPolynomial chi_pair(const Sequence& a, const Sequence& b);

/// Young basis element: sum over A < B of chi_pair(A, B). Memoized per (n, B).
const MultilinearPolynomial& chi_top(const TopSet& b);

/// prod_{i<=d} (x_{2i-1} - x_{2i}) over n variables.
MultilinearPolynomial chi_d(int d, int n);

/// chi_pair(companion_sequence(B), B) for every B in B_{n,d}.
std::vector<MultilinearPolynomial> frankl_graham_basis(int n, int d);

/// Pure degree-d polynomial whose harmonic defect is exactly x_1 ... x_{d-1}.
MultilinearPolynomial harmonicity_witness(int n, int d);

struct HarmonicDimension {
    Integer up_to_degree;  ///< dim of harmonic polynomials of degree <= d
    Integer pure_degree;   ///< dim of harmonic polynomials of pure degree d
};

HarmonicDimension dimension(int n, int d);

/// Rank over the rationals of the coefficient vectors of `polys`.
int polynomial_rank(const std::vector<MultilinearPolynomial>& polys);

/// Exact rank by Gaussian elimination over the rationals.
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace young
