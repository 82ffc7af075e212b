#include "young/measures.hpp"

#include <bit>
#include <map>

namespace young {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_probability(const Rational& p) {
    if (p < 0 || p > 1)
        throw InvalidInput("product measure parameter must lie in [0,1]");
}

Rational power(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

}  // namespace

ExchangeableMeasure::ExchangeableMeasure(UniformSlice s) : variant_(s) {
    check_slice_parameters(s.n, s.k);
}

ExchangeableMeasure::ExchangeableMeasure(ProductMu m) : variant_(m) { check_probability(m.p); }

ExchangeableMeasure::ExchangeableMeasure(ProductNu m) : variant_(m) { check_probability(m.p); }

const UniformSlice& ExchangeableMeasure::slice() const {
    if (const auto* s = std::get_if<UniformSlice>(&variant_))
        return *s;
    throw InvalidInput("measure " + name() + " is not a slice measure");
}

Rational ExchangeableMeasure::monomial_moment(const ExponentMonomial& m) const {
    return std::visit(
        overloaded{
            [&](const UniformSlice& s) -> Rational {
                for (const auto& [i, e] : m.exponents())
                    if (i > s.n)
                        throw InvalidInput("monomial index beyond the slice dimension");
                // x_i in {0,1}: exponents collapse, only the support size matters.
                const int r = m.distinct_count();
                return ratio(falling(s.k, r), falling(s.n, r));
            },
            [&](const ProductMu& mu) -> Rational { return power(mu.p, m.distinct_count()); },
            [&](const ProductNu& nu) -> Rational {
                const Rational q = 1 - nu.p;
                Rational out = 1;
                for (const auto& [i, e] : m.exponents())
                    out *= q * power(-nu.p, e) + nu.p * power(q, e);
                return out;
            },
        },
        variant_);
}

Rational ExchangeableMeasure::profile_moment(int twice, int once) const {
    std::map<int, int> e;
    for (int i = 1; i <= twice; ++i)
        e[i] = 2;
    for (int i = twice + 1; i <= twice + once; ++i)
        e[i] = 1;
    return monomial_moment(ExponentMonomial(std::move(e)));
}

std::string ExchangeableMeasure::name() const {
    return std::visit(
        overloaded{
            [](const UniformSlice& s) {
                return "slice(" + std::to_string(s.n) + "," + std::to_string(s.k) + ")";
            },
            [](const ProductMu& m) { return "mu(" + format_rational(m.p) + ")"; },
            [](const ProductNu& m) { return "nu(" + format_rational(m.p) + ")"; },
        },
        variant_);
}

Rational expectation(const ExponentPolynomial& p, const ExchangeableMeasure& measure) {
    // Exchangeability: the moment depends only on the exponent multiset.
    std::map<ExponentMonomial, Rational> grouped;
    for (const auto& [m, c] : p)
        grouped[m.canonical()] += c;
    Rational total = 0;
    for (const auto& [m, c] : grouped)
        if (c != 0)
            total += c * measure.monomial_moment(m);
    return total;
}

Rational inner_product(const MultilinearPolynomial& p, const MultilinearPolynomial& q,
                       const ExchangeableMeasure& measure) {
    if (p.n() != q.n())
        throw InvalidInput("inner product of polynomials over different numbers of variables");
    if (measure.is_slice() && measure.slice().n != p.n())
        throw InvalidInput("polynomial dimension does not match " + measure.name());

    // Same grouping as expectation(multiply_to_exponents(p, q)), keyed directly
    // by (#squared variables, #linear variables) to avoid building the product.
    std::map<std::pair<int, int>, Rational> grouped;
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms())
            grouped[{std::popcount(a & b), std::popcount(a ^ b)}] += ca * cb;
    Rational total = 0;
    for (const auto& [profile, c] : grouped)
        if (c != 0)
            total += c * measure.profile_moment(profile.first, profile.second);
    return total;
}

Rational inner_product(const SliceFunction& f, const SliceFunction& g) {
    if (!f.same_domain(g))
        throw InvalidInput("inner product of functions on different slices");
    Rational sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        sum += f[i] * g[i];
    return sum / static_cast<unsigned long>(f.size());
}

Rational inner_product(const SliceFunction& f, const SliceFunction& g,
                       const ExchangeableMeasure& measure) {
    const auto& s = measure.slice();
    if (s.n != f.n() || s.k != f.k())
        throw InvalidInput("slice function domain does not match " + measure.name());
    return inner_product(f, g);
}

Rational norm_sq(const SliceFunction& f) { return inner_product(f, f); }

Rational chi_d_norm_sq(int d, const ExchangeableMeasure& measure) {
    if (d < 0)
        throw InvalidInput("degree must be non-negative");
    return std::visit(
        overloaded{
            [&](const UniformSlice& s) -> Rational {
                if (2 * d > s.n)
                    throw InvalidInput("chi_d needs 2d <= n");
                const Integer two_d = Integer(1) << d;
                return ratio(two_d * falling(s.k, d) * falling(s.n - s.k, d), falling(s.n, 2 * d));
            },
            [&](const ProductMu& m) -> Rational { return power(2 * m.p * (1 - m.p), d); },
            [&](const ProductNu& m) -> Rational { return power(2 * m.p * (1 - m.p), d); },
        },
        measure.variant());
}

Rational chi_norm_sq(const TopSet& b, const ExchangeableMeasure& measure) {
    if (measure.is_slice() && measure.slice().n != b.n())
        throw InvalidInput("top set ambient size does not match " + measure.name());
    return Rational(c_coefficient(b)) * chi_d_norm_sq(b.size(), measure);
}

}  // namespace young
