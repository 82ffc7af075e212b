#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "young/measures.hpp"

#include <random>

using namespace young;
using oracle::q;

namespace {

ExponentMonomial em(std::map<int, int> e) { return ExponentMonomial(std::move(e)); }

oracle::PointFunction product_of(const TopSet& a, const TopSet& b) {
    const int n = a.n();
    return [a, b, n](const std::vector<Rational>& x) -> Rational {
        return oracle::chi_at(a.entries(), n, x) * oracle::chi_at(b.entries(), n, x);
    };
}

}  // namespace

TEST_CASE("monomial moments") {
    const ExchangeableMeasure slice = UniformSlice{4, 2};
    CHECK(slice.monomial_moment(em({{1, 1}})) == q(1, 2));
    CHECK(slice.monomial_moment(em({{1, 2}, {3, 1}})) == q(1, 6));
    CHECK_THROWS_AS(slice.monomial_moment(em({{5, 1}})), InvalidInput);
    for (const auto& p : {q(1, 3), q(1, 2), q(2, 5)}) {
        const ExchangeableMeasure nu = ProductNu{p};
        CHECK(nu.monomial_moment(em({{1, 1}})) == 0);
        CHECK(nu.monomial_moment(em({{1, 2}})) == p * (1 - p));
        const ExchangeableMeasure mu = ProductMu{p};
        CHECK(mu.monomial_moment(em({{2, 2}, {7, 1}})) == p * p);
    }
    CHECK(ExchangeableMeasure(ProductNu{q(1, 2)}).monomial_moment(em({{1, 2}})) ==
          q(1, 4));
    CHECK(ExchangeableMeasure(ProductNu{q(1, 3)}).monomial_moment(em({{1, 3}})) ==
          q(2, 27));
}

TEST_CASE("monomial moments match brute-force summation") {
    const std::vector<ExponentMonomial> samples{
        em({{1, 1}}), em({{2, 2}}),
        em({{1, 1}, {4, 2}}), em({{1, 2}, {2, 2}, {3, 1}}),
        em({{2, 3}, {5, 1}})};
    const int n = 5;
    for (const auto& m : samples) {
        auto eval = [&m](const std::vector<Rational>& x) {
            Rational v = 1;
            for (const auto& [i, e] : m.exponents())
                for (int t = 0; t < e; ++t)
                    v *= x[static_cast<std::size_t>(i)];
            return v;
        };
        for (int k = 0; 2 * k <= n; ++k)
            CHECK(ExchangeableMeasure(UniformSlice{n, k}).monomial_moment(m) ==
                  oracle::slice_expectation(n, k, eval));
        for (const auto& p : {q(1, 3), q(2, 5)}) {
            CHECK(ExchangeableMeasure(ProductMu{p}).monomial_moment(m) == oracle::mu_expectation(n, p, eval));
            CHECK(ExchangeableMeasure(ProductNu{p}).monomial_moment(m) == oracle::nu_expectation(n, p, eval));
        }
    }
}

TEST_CASE("moments are exchangeable") {
    std::mt19937 rng(7);
    const std::vector<ExchangeableMeasure> measures{UniformSlice{6, 3}, ProductMu{q(1, 3)},
                                                    ProductNu{q(2, 5)}};
    for (int trial = 0; trial < 50; ++trial) {
        std::map<int, int> e;
        for (int i = 1; i <= 6; ++i)
            if (rng() % 2)
                e[i] = static_cast<int>(rng() % 3) + 1;
        std::vector<int> perm{1, 2, 3, 4, 5, 6};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::map<int, int> moved;
        for (const auto& [i, x] : e)
            moved[perm[static_cast<std::size_t>(i - 1)]] = x;
        for (const auto& mu : measures)
            CHECK(mu.monomial_moment(ExponentMonomial(e)) == mu.monomial_moment(ExponentMonomial(moved)));
    }
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(ExchangeableMeasure(UniformSlice{4, 3}), InvalidInput);
    CHECK_THROWS_AS(ExchangeableMeasure(ProductMu{q(3, 2)}), InvalidInput);
    CHECK_THROWS_AS(ExchangeableMeasure(ProductNu{q(-1, 2)}), InvalidInput);
    CHECK_THROWS_AS(ExchangeableMeasure(ProductMu{q(1, 2)}).slice(), InvalidInput);
    CHECK(ExchangeableMeasure(UniformSlice{4, 2}).name() == "slice(4,2)");
    CHECK(ExchangeableMeasure(ProductMu{q(1, 2)}).name() == "mu(1/2)");
    CHECK(ExchangeableMeasure(ProductNu{q(1, 3)}).name() == "nu(1/3)");
}

TEST_CASE("inner product examples") {
    const ExchangeableMeasure slice = UniformSlice{4, 2};
    CHECK(inner_product(chi_top(TopSet({2, 4}, 4)), chi_top(TopSet({3, 4}, 4)), slice) == 0);
    CHECK(inner_product(chi_top(TopSet({3}, 4)), chi_top(TopSet({3}, 4)), slice) == 2);
    const auto one = MultilinearPolynomial::constant(4, 1);
    for (const auto& mu : {slice, ExchangeableMeasure(ProductMu{q(1, 3)}),
                           ExchangeableMeasure(ProductNu{q(2, 5)})})
        CHECK(inner_product(one, one, mu) == 1);

    const auto f = SliceFunction::restrict(chi_top(TopSet({3}, 4)), 2);
    CHECK(inner_product(f, f) == 2);
    CHECK(inner_product(f, f, slice) == 2);
    CHECK_THROWS_AS(inner_product(f, f, ExchangeableMeasure(UniformSlice{4, 1})), InvalidInput);
    CHECK_THROWS_AS(inner_product(f, SliceFunction(5, 2)), InvalidInput);
}

TEST_CASE("chi_norm_sq examples") {
    const ExchangeableMeasure slice = UniformSlice{4, 2};
    CHECK(chi_norm_sq(TopSet({2}, 4), slice) == q(2, 3));
    CHECK(chi_norm_sq(TopSet({3, 4}, 4), slice) == 2);
    for (const auto& mu : {slice, ExchangeableMeasure(ProductMu{q(1, 3)}),
                           ExchangeableMeasure(ProductNu{q(2, 5)})})
        CHECK(chi_norm_sq(TopSet({}, 4), mu) == 1);
    CHECK(chi_d_norm_sq(2, ExchangeableMeasure(ProductMu{q(1, 3)})) == q(16, 81));
}

TEST_CASE("polynomial route agrees with brute-force expectations") {
    for (int n = 2; n <= 6; ++n) {
        const auto sets = enumerate_top_sets_up_to(n, n / 2);
        for (const auto& a : sets)
            for (const auto& b : sets) {
                if (b < a)
                    continue;
                const auto g = product_of(a, b);
                for (int k = 0; 2 * k <= n; ++k)
                    CHECK(inner_product(chi_top(a), chi_top(b), UniformSlice{n, k}) ==
                          oracle::slice_expectation(n, k, g));
                const auto p = q(2, 5);
                CHECK(inner_product(chi_top(a), chi_top(b), ProductMu{p}) == oracle::mu_expectation(n, p, g));
                CHECK(inner_product(chi_top(a), chi_top(b), ProductNu{p}) == oracle::nu_expectation(n, p, g));
            }
    }
}

TEST_CASE("polynomial route and point summation agree on the slice") {
    oracle::Random rnd(11);
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            for (int trial = 0; trial < 3; ++trial) {
                MultilinearPolynomial p(n), r(n);
                for (int t = 0; t < 6; ++t) {
                    p.add_term(static_cast<Monomial>(rnd.integer(0, (1L << n) - 1)), rnd.rational());
                    r.add_term(static_cast<Monomial>(rnd.integer(0, (1L << n) - 1)), rnd.rational());
                }
                CHECK(inner_product(p, r, UniformSlice{n, k}) ==
                      inner_product(SliceFunction::restrict(p, k), SliceFunction::restrict(r, k)));
            }
}

TEST_CASE("slice norms vanish exactly above degree k") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            for (const auto& b : enumerate_top_sets_up_to(n, n / 2)) {
                const ExchangeableMeasure mu = UniformSlice{n, k};
                CHECK((chi_norm_sq(b, mu) == 0) == (b.size() > k));
            }
}

TEST_CASE("expectation of formal polynomials") {
    const auto sq = multiply_to_exponents(chi_d(1, 3), chi_d(1, 3));
    CHECK(expectation(sq, ProductMu{q(1, 3)}) == q(4, 9));
    CHECK(expectation(sq, UniformSlice{3, 1}) == q(2, 3));
}
