#pragma once

#include "young/combinatorics.hpp"
#include "young/measures.hpp"
#include "young/poly.hpp"
#include "young/slice.hpp"

#include <map>
#include <vector>

namespace young {

/// Young basis restricted to the (n,k) slice: the chi_B with |B| <= k, their
/// values at every slice point and their squared norms. Built once per slice.
class SliceBasis {
public:
    static const SliceBasis& get(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<TopSet>& top_sets() const { return top_sets_; }
    /// Values of chi_B at Slice::points(), for B = top_sets()[i].
    const std::vector<Rational>& values(std::size_t i) const { return values_[i]; }
    const Rational& norm_sq(std::size_t i) const { return norms_[i]; }
    std::size_t position(const TopSet& b) const;

private:
    SliceBasis(int n, int k);

    int n_;
    int k_;
    std::vector<TopSet> top_sets_;
    std::vector<std::vector<Rational>> values_;
    std::vector<Rational> norms_;
};

/// Coordinates f^(B) of a slice function in the Young basis. Only nonzero
/// coefficients are stored and every key satisfies |B| <= k.
class YoungExpansion {
public:
    using Coefficients = std::map<TopSet, Rational>;

    YoungExpansion(int n, int k);
    YoungExpansion(int n, int k, Coefficients coefficients);

    static YoungExpansion unit(const TopSet& b, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const Coefficients& coefficients() const { return coefficients_; }
    Rational coefficient(const TopSet& b) const;
    void set(const TopSet& b, const Rational& value);

    /// Largest |B| with a nonzero coefficient; 0 for the zero expansion.
    int degree() const;

    friend bool operator==(const YoungExpansion&, const YoungExpansion&) = default;

private:
    void check_key(const TopSet& b) const;

    int n_;
    int k_;
    Coefficients coefficients_;
};

YoungExpansion expand(const SliceFunction& f);
SliceFunction synthesize(const YoungExpansion& e);

struct Moments {
    Rational mean;
    Rational variance;
    Rational l2;
};

/// Spectral moments: mean f^(empty), variance and E[f^2] from sum f^(B)^2 ||chi_B||^2.
Moments moments(const YoungExpansion& e);

/// Average over all permutations of the first m coordinates: keeps exactly
/// the coefficients with B ∩ [m] empty.
YoungExpansion average_first_m(const YoungExpansion& e, int m);

/// Coordinates of a harmonic multilinear polynomial in the Young basis, via
/// <P, chi_B> / ||chi_B||^2 under `measure`. Throws InvalidInput, quoting the
/// harmonic defect, when P is not harmonic.
std::map<TopSet, Rational> expand_polynomial(
    const MultilinearPolynomial& p,
    const ExchangeableMeasure& measure = ExchangeableMeasure(ProductMu{Rational(1, 2)}));

}  // namespace young
