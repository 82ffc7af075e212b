#pragma once

#include "young/combinatorics.hpp"
#include "young/poly.hpp"
#include "young/slice.hpp"

#include <string>
#include <variant>

namespace young {

/// Uniform distribution on the k-subsets of [n], as 0/1 vectors.
struct UniformSlice {
    int n;
    int k;
};

/// Independent x_i with Pr[x_i = 1] = p, Pr[x_i = 0] = 1 - p.
struct ProductMu {
    Rational p;
};

/// Independent x_i with Pr[x_i = 1 - p] = p, Pr[x_i = -p] = 1 - p.
struct ProductNu {
    Rational p;
};

/// Permutation-invariant distribution over x_1..x_n, exposed only through its
/// moments. Every expectation of a polynomial reduces to monomial moments.
class ExchangeableMeasure {
public:
    using Variant = std::variant<UniformSlice, ProductMu, ProductNu>;

    ExchangeableMeasure(UniformSlice s);
    ExchangeableMeasure(ProductMu m);
    ExchangeableMeasure(ProductNu m);

    const Variant& variant() const { return variant_; }
    bool is_slice() const { return std::holds_alternative<UniformSlice>(variant_); }
    /// Slice parameters; throws InvalidInput for the product families.
    const UniformSlice& slice() const;

    Rational monomial_moment(const ExponentMonomial& m) const;
    /// E[x_1^2 ... x_twice^2 x_{twice+1} ... x_{twice+once}].
    Rational profile_moment(int twice, int once) const;

    std::string name() const;

private:
    Variant variant_;
};

/// Expectation of a formal polynomial, term by term.
Rational expectation(const ExponentPolynomial& p, const ExchangeableMeasure& measure);

/// E[P Q] through multiply_to_exponents and monomial moments.
Rational inner_product(const MultilinearPolynomial& p, const MultilinearPolynomial& q,
                       const ExchangeableMeasure& measure);

/// E[f g] under the uniform measure on the slice, by direct summation.
Rational inner_product(const SliceFunction& f, const SliceFunction& g);
Rational inner_product(const SliceFunction& f, const SliceFunction& g,
                       const ExchangeableMeasure& measure);

Rational norm_sq(const SliceFunction& f);

/// ||chi_d||^2 in closed form.
Rational chi_d_norm_sq(int d, const ExchangeableMeasure& measure);

/// c_B ||chi_{|B|}||^2.
Rational chi_norm_sq(const TopSet& b, const ExchangeableMeasure& measure);

}  // namespace young
