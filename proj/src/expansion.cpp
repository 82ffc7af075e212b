#include "young/expansion.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace young {

SliceBasis::SliceBasis(int n, int k) : n_(n), k_(k) {
    const Slice& slice = Slice::get(n, k);
    const ExchangeableMeasure measure(UniformSlice{n, k});
    top_sets_ = enumerate_top_sets_up_to(n, k);
    for (const auto& b : top_sets_) {
        const MultilinearPolynomial& chi = chi_top(b);
        std::vector<Rational> column(slice.size());
        for (std::size_t i = 0; i < slice.size(); ++i)
            column[i] = chi.evaluate_at(slice.point(i));
        values_.push_back(std::move(column));
        norms_.push_back(chi_norm_sq(b, measure));
    }
}

const SliceBasis& SliceBasis::get(int n, int k) {
    check_slice_parameters(n, k);
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<SliceBasis>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({n, k}); it != cache.end())
            return *it->second;
    }
    std::unique_ptr<SliceBasis> built(new SliceBasis(n, k));
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, k}];
    if (!slot)
        slot = std::move(built);
    return *slot;
}

std::size_t SliceBasis::position(const TopSet& b) const {
    auto it = std::lower_bound(top_sets_.begin(), top_sets_.end(), b);
    if (it == top_sets_.end() || *it != b)
        throw InvalidInput("top set " + b.to_string() + " is not part of the slice basis");
    return static_cast<std::size_t>(it - top_sets_.begin());
}

YoungExpansion::YoungExpansion(int n, int k) : n_(n), k_(k) { check_slice_parameters(n, k); }

YoungExpansion::YoungExpansion(int n, int k, Coefficients coefficients) : YoungExpansion(n, k) {
    for (const auto& [b, c] : coefficients)
        set(b, c);
}

YoungExpansion YoungExpansion::unit(const TopSet& b, int k) {
    YoungExpansion e(b.n(), k);
    e.set(b, 1);
    return e;
}

void YoungExpansion::check_key(const TopSet& b) const {
    if (b.n() != n_)
        throw InvalidInput("top set " + b.to_string() + " has the wrong ambient size");
    if (b.size() > k_)
        throw InvalidInput("top set " + b.to_string() + " exceeds the degree cap k = " +
                           std::to_string(k_));
}

Rational YoungExpansion::coefficient(const TopSet& b) const {
    auto it = coefficients_.find(b);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

void YoungExpansion::set(const TopSet& b, const Rational& value) {
    check_key(b);
    if (value == 0)
        coefficients_.erase(b);
    else
        coefficients_[b] = value;
}

int YoungExpansion::degree() const {
    int d = 0;
    for (const auto& [b, c] : coefficients_)
        d = std::max(d, b.size());
    return d;
}

YoungExpansion expand(const SliceFunction& f) {
    const SliceBasis& basis = SliceBasis::get(f.n(), f.k());
    YoungExpansion e(f.n(), f.k());
    const auto points = static_cast<unsigned long>(f.size());
    for (std::size_t i = 0; i < basis.top_sets().size(); ++i) {
        const auto& chi = basis.values(i);
        Rational dot = 0;
        for (std::size_t s = 0; s < chi.size(); ++s)
            if (chi[s] != 0 && f[s] != 0)
                dot += chi[s] * f[s];
        e.set(basis.top_sets()[i], dot / points / basis.norm_sq(i));
    }
    return e;
}

SliceFunction synthesize(const YoungExpansion& e) {
    const SliceBasis& basis = SliceBasis::get(e.n(), e.k());
    SliceFunction f(e.n(), e.k());
    for (const auto& [b, c] : e.coefficients()) {
        const auto& chi = basis.values(basis.position(b));
        for (std::size_t s = 0; s < chi.size(); ++s)
            if (chi[s] != 0)
                f[s] += c * chi[s];
    }
    return f;
}

Moments moments(const YoungExpansion& e) {
    const ExchangeableMeasure measure(UniformSlice{e.n(), e.k()});
    Moments out{e.coefficient(TopSet({}, e.n())), 0, 0};
    for (const auto& [b, c] : e.coefficients()) {
        const Rational weight = c * c * chi_norm_sq(b, measure);
        out.l2 += weight;
        if (!b.empty())
            out.variance += weight;
    }
    return out;
}

YoungExpansion average_first_m(const YoungExpansion& e, int m) {
    if (m < 1 || m > e.n())
        throw InvalidInput("averaging needs 1 <= m <= n");
    YoungExpansion out(e.n(), e.k());
    for (const auto& [b, c] : e.coefficients())
        if (b.count_at_most(m) == 0)
            out.set(b, c);
    return out;
}

std::map<TopSet, Rational> expand_polynomial(const MultilinearPolynomial& p,
                                             const ExchangeableMeasure& measure) {
    if (auto defect = harmonic_defect(p); !defect.is_zero())
        throw InvalidInput("polynomial is not harmonic; defect = " + defect.to_string());
    std::map<TopSet, Rational> out;
    for (const auto& b : enumerate_top_sets_up_to(p.n(), std::max(p.degree(), 0))) {
        const Rational norm = chi_norm_sq(b, measure);
        if (norm == 0)
            throw InvalidInput("measure " + measure.name() + " annihilates chi_" + b.to_string());
        Rational c = inner_product(p, chi_top(b), measure) / norm;
        if (c != 0)
            out.emplace(b, c);
    }
    return out;
}

}  // namespace young
