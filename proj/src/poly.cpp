#include "young/poly.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace young {

Monomial monomial_of(std::span<const int> indices) {
    Monomial m = 0;
    for (int i : indices) {
        if (i < 1 || i > kMaxVariables)
            throw InvalidInput("variable index out of range");
        m |= Monomial{1} << (i - 1);
    }
    return m;
}

std::vector<int> indices_of(Monomial m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

int degree_of(Monomial m) { return std::popcount(m); }

MultilinearPolynomial::MultilinearPolynomial(int n) : n_(n) {
    if (n < 0 || n > kMaxVariables)
        throw InvalidInput("polynomial ambient size out of range");
}

MultilinearPolynomial MultilinearPolynomial::constant(int n, const Rational& c) {
    MultilinearPolynomial p(n);
    p.add_term(0, c);
    return p;
}

MultilinearPolynomial MultilinearPolynomial::variable(int n, int index) {
    if (index < 1 || index > n)
        throw InvalidInput("variable index outside [1,n]");
    MultilinearPolynomial p(n);
    p.add_term(Monomial{1} << (index - 1), 1);
    return p;
}

Rational MultilinearPolynomial::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultilinearPolynomial::add_term(Monomial m, const Rational& c) {
    if (n_ < kMaxVariables && (m >> n_) != 0)
        throw InvalidInput("monomial uses a variable beyond x_n");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int MultilinearPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, degree_of(m));
    return d;
}

bool MultilinearPolynomial::is_pure_degree(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return degree_of(t.first) == d; });
}

Rational MultilinearPolynomial::evaluate_at(Monomial point) const {
    Rational v = 0;
    for (const auto& [m, c] : terms_)
        if ((m & ~point) == 0)
            v += c;
    return v;
}

Rational MultilinearPolynomial::evaluate(std::span<const Rational> x) const {
    if (static_cast<int>(x.size()) != n_)
        throw InvalidInput("evaluation point has wrong dimension");
    Rational v = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i : indices_of(m))
            t *= x[static_cast<std::size_t>(i - 1)];
        v += t;
    }
    return v;
}

void MultilinearPolynomial::check_compatible(const MultilinearPolynomial& other) const {
    if (n_ != other.n_)
        throw InvalidInput("polynomials over different numbers of variables");
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator-=(const MultilinearPolynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

MultilinearPolynomial MultilinearPolynomial::boolean_product(
    const MultilinearPolynomial& other) const {
    check_compatible(other);
    MultilinearPolynomial out(n_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_)
            out.add_term(a | b, ca * cb);
    return out;
}

std::string MultilinearPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<std::pair<std::vector<int>, Rational>> sorted;
    for (const auto& [m, c] : terms_)
        sorted.emplace_back(indices_of(m), c);
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size())
            return x.first.size() > y.first.size();
        return x.first < y.first;
    });
    std::string s;
    for (const auto& [idx, c] : sorted) {
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        std::string mono;
        for (int i : idx)
            mono += (mono.empty() ? "x" : "*x") + std::to_string(i);
        if (mono.empty())
            s += format_rational(mag);
        else if (mag == 1)
            s += mono;
        else
            s += format_rational(mag) + "*" + mono;
    }
    return s;
}

ExponentMonomial::ExponentMonomial(std::map<int, int> exponents)
    : exponents_(std::move(exponents)) {
    for (const auto& [i, e] : exponents_)
        if (i < 1 || e < 1)
            throw InvalidInput("exponent monomial needs indices >= 1 and exponents >= 1");
}

ExponentMonomial ExponentMonomial::product(Monomial a, Monomial b) {
    std::map<int, int> e;
    for (int i : indices_of(a))
        ++e[i];
    for (int i : indices_of(b))
        ++e[i];
    ExponentMonomial out;
    out.exponents_ = std::move(e);
    return out;
}

int ExponentMonomial::total_degree() const {
    int t = 0;
    for (const auto& [i, e] : exponents_)
        t += e;
    return t;
}

ExponentMonomial ExponentMonomial::canonical() const {
    std::vector<int> es;
    for (const auto& [i, e] : exponents_)
        es.push_back(e);
    std::sort(es.begin(), es.end(), std::greater<>());
    ExponentMonomial out;
    for (std::size_t i = 0; i < es.size(); ++i)
        out.exponents_[static_cast<int>(i) + 1] = es[i];
    return out;
}

ExponentPolynomial multiply_to_exponents(const MultilinearPolynomial& p,
                                         const MultilinearPolynomial& q) {
    if (p.n() != q.n())
        throw InvalidInput("polynomials over different numbers of variables");
    ExponentPolynomial out;
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) {
            auto [it, inserted] = out.try_emplace(ExponentMonomial::product(a, b), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    return out;
}

MultilinearPolynomial harmonic_defect(const MultilinearPolynomial& p) {
    MultilinearPolynomial out(p.n());
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        while (rest) {
            const Monomial bit = rest & (~rest + 1);
            out.add_term(m & ~bit, c);
            rest &= rest - 1;
        }
    }
    return out;
}

bool is_harmonic(const MultilinearPolynomial& p) { return harmonic_defect(p).is_zero(); }

MultilinearPolynomial chi_pair(const Sequence& a, const Sequence& b) {
    if (a.size() != b.size())
        throw InvalidInput("chi_pair needs sequences of equal length");
    if (a.n() != b.n())
        throw InvalidInput("chi_pair needs sequences over the same [n]");
    if (!a.disjoint_from(b))
        throw InvalidInput("chi_pair needs disjoint sequences");

    MultilinearPolynomial out = MultilinearPolynomial::constant(a.n(), 1);
    for (int i = 0; i < a.size(); ++i) {
        const Monomial xa = Monomial{1} << (a[i] - 1);
        const Monomial xb = Monomial{1} << (b[i] - 1);
        MultilinearPolynomial next(a.n());
        // Every factor introduces a fresh pair of variables, so no squares arise.
        for (const auto& [m, c] : out.terms()) {
            next.add_term(m | xa, c);
            next.add_term(m | xb, -c);
        }
        out = std::move(next);
    }
    return out;
}

const MultilinearPolynomial& chi_top(const TopSet& b) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<int>>, MultilinearPolynomial> cache;

    const auto key = std::make_pair(b.n(), b.entries());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    MultilinearPolynomial sum(b.n());
    const Sequence bs = b.as_sequence();
    for (const auto& a : smaller_sequences(b))
        sum += chi_pair(a, bs);

    std::lock_guard lock(mutex);
    // std::map never invalidates references to existing nodes.
    return cache.try_emplace(key, std::move(sum)).first->second;
}

MultilinearPolynomial chi_d(int d, int n) {
    if (d < 0 || 2 * d > n)
        throw InvalidInput("chi_d needs 0 <= 2d <= n");
    std::vector<int> odd, even;
    for (int i = 1; i <= d; ++i) {
        odd.push_back(2 * i - 1);
        even.push_back(2 * i);
    }
    return chi_pair(Sequence(odd, n), Sequence(even, n));
}

std::vector<MultilinearPolynomial> frankl_graham_basis(int n, int d) {
    std::vector<MultilinearPolynomial> out;
    for (const auto& b : enumerate_top_sets(n, d))
        out.push_back(chi_pair(companion_sequence(b), b.as_sequence()));
    return out;
}

namespace {

void for_each_subset(const std::vector<int>& pool, int size, std::size_t start,
                     Monomial acc, const auto& visit) {
    if (size == 0) {
        visit(acc);
        return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(size) <= pool.size(); ++i)
        for_each_subset(pool, size - 1, i + 1, acc | (Monomial{1} << (pool[i] - 1)), visit);
}

}  // namespace

MultilinearPolynomial harmonicity_witness(int n, int d) {
    if (d < 1 || 2 * d > n)
        throw InvalidInput("harmonicity_witness needs 1 <= d <= n/2");
    std::vector<int> head, tail;
    for (int i = 1; i <= d - 1; ++i)
        head.push_back(i);
    for (int i = d; i <= n; ++i)
        tail.push_back(i);

    MultilinearPolynomial p(n);
    for (int t = 1; t <= d; ++t) {
        const Integer pairs = binomial(d - 1, d - t) * binomial(n - d + 1, t);
        Rational weight = ratio(binomial(d, t), pairs * d);
        if (t % 2 == 0)
            weight = -weight;
        for_each_subset(head, d - t, 0, 0, [&](Monomial a) {
            for_each_subset(tail, t, 0, a, [&](Monomial ab) { p.add_term(ab, weight); });
        });
    }
    return p;
}

HarmonicDimension dimension(int n, int d) {
    if (d < 0 || 2 * d > n)
        throw InvalidInput("dimension needs 0 <= d <= n/2");
    return {binomial(n, d), binomial(n, d) - binomial(n, d - 1)};
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                  [col](const auto& r) { return r[col] != 0; });
        if (pivot == rows.end())
            continue;
        std::iter_swap(rows.begin() + rank, pivot);
        const auto& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0)
                continue;
            const Rational factor = rows[r][col] / p[col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= factor * p[c];
        }
        ++rank;
    }
    return rank;
}

int polynomial_rank(const std::vector<MultilinearPolynomial>& polys) {
    std::map<Monomial, std::size_t> column;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms())
            column.try_emplace(m, column.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : polys) {
        std::vector<Rational> row(column.size());
        for (const auto& [m, c] : p.terms())
            row[column[m]] = c;
        rows.push_back(std::move(row));
    }
    return rational_rank(std::move(rows));
}

}  // namespace young
