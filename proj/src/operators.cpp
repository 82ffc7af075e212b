#include "young/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace young {

namespace {

void check_coordinate(int i, int n) {
    if (i < 1 || i > n)
        throw InvalidInput("coordinate " + std::to_string(i) + " outside [1," +
                           std::to_string(n) + "]");
}

void check_m(int m, int lo, int hi, const char* what) {
    if (m < lo || m > hi)
        throw InvalidInput(std::string(what) + ": m = " + std::to_string(m) + " outside [" +
                           std::to_string(lo) + "," + std::to_string(hi) + "]");
}

/// B with m and m+1 exchanged; the entries stay increasing.
std::vector<int> swapped_entries(const TopSet& b, int m) {
    std::vector<int> out = b.entries();
    for (int& x : out) {
        if (x == m)
            x = m + 1;
        else if (x == m + 1)
            x = m;
    }
    return out;
}

}  // namespace

SliceFunction apply_transposition(const SliceFunction& f, int i, int j) {
    check_coordinate(i, f.n());
    check_coordinate(j, f.n());
    if (i == j)
        throw InvalidInput("transposition needs two distinct coordinates");
    const Slice& slice = f.domain();
    SliceFunction out(f.n(), f.k());
    for (std::size_t s = 0; s < slice.size(); ++s)
        out[s] = f.at(swap_coordinates(slice.point(s), i, j));
    return out;
}

Rational influence_pair(const SliceFunction& f, int i, int j) {
    const SliceFunction diff = apply_transposition(f, i, j) - f;
    return norm_sq(diff) / 2;
}

Rational total_influence_m(const SliceFunction& f, int m) {
    check_m(m, 2, f.n(), "total influence");
    Rational sum = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            sum += influence_pair(f, i, j);
    return sum / m;
}

Rational total_influence(const SliceFunction& f) { return total_influence_m(f, f.n()); }

Rational influence_spectral(const YoungExpansion& e, int m) {
    check_m(m, 2, e.n(), "spectral influence");
    const ExchangeableMeasure measure(UniformSlice{e.n(), e.k()});
    Rational sum = 0;
    for (const auto& [b, c] : e.coefficients()) {
        const int inside = b.count_at_most(m);
        if (inside == 0)
            continue;
        sum += ratio(inside * (m + 1 - inside), m) * c * c * chi_norm_sq(b, measure);
    }
    return sum;
}

int lambda_coefficient(const TopSet& b, int m) {
    check_m(m, 1, b.n(), "lambda");
    const int d = b.size();
    // Find the 1-based position i with b_i = m, or with b_{i-1} < m < b_i.
    for (int i = 1; i <= d; ++i) {
        if (b[i - 1] == m)
            return i - 2;
        if (b[i - 1] > m)
            return m - i;
    }
    return m - (d + 1);
}

SliceFunction transposition_sum(const SliceFunction& f, int m) {
    check_m(m, 1, f.n(), "transposition sum");
    SliceFunction out(f.n(), f.k());
    for (int i = 1; i < m; ++i)
        out += apply_transposition(f, i, m);
    return out;
}

YoungExpansion adjacent_transposition_expansion(const YoungExpansion& e, int m) {
    check_m(m, 1, e.n() - 1, "adjacent transposition");
    YoungExpansion out(e.n(), e.k());
    for (const auto& b : enumerate_top_sets_up_to(e.n(), e.k())) {
        const bool has_m = b.contains(m);
        const bool has_next = b.contains(m + 1);
        if (has_m == has_next) {
            out.set(b, e.coefficient(b));
            continue;
        }
        // Zero-based position of m or m+1 in B equals the number of entries below m.
        const int i = b.count_at_most(m - 1);
        const std::vector<int> partner_entries = swapped_entries(b, m);
        const Rational partner =
            is_top_set(partner_entries, e.n()) ? e.coefficient(TopSet(partner_entries, e.n()))
                                               : Rational(0);
        const int gap = m - 2 * i;
        Rational value;
        if (has_m)
            value = ratio(1, gap) * e.coefficient(b) + ratio(gap + 1, gap) * partner;
        else
            value = ratio(-1, gap) * e.coefficient(b) + ratio(gap - 1, gap) * partner;
        out.set(b, value);
    }
    return out;
}

int tau_coefficient(const TopSet& b, int m) {
    check_m(m, 2, b.n(), "tau");
    const int inside = b.count_at_most(m);
    return m * (m - 1) / 2 - inside * (m + 1 - inside);
}

Rational laplacian_eigenvalue(int degree, int n) {
    if (n < 2)
        throw InvalidInput("the Laplacian needs n >= 2");
    return ratio(2 * degree * (n + 1 - degree), n * (n - 1));
}

YoungExpansion laplacian(const YoungExpansion& e) {
    YoungExpansion out(e.n(), e.k());
    for (const auto& [b, c] : e.coefficients())
        out.set(b, c * laplacian_eigenvalue(b.size(), e.n()));
    return out;
}

RealExpansion to_real(const YoungExpansion& e) {
    RealExpansion out{e.n(), e.k(), {}};
    for (const auto& [b, c] : e.coefficients())
        out.coefficients.emplace(b, c.get_d());
    return out;
}

RealExpansion noise(const RealExpansion& e, double t) {
    if (!(t >= 0))
        throw InvalidInput("noise rate t must be non-negative");
    RealExpansion out{e.n, e.k, {}};
    for (const auto& [b, c] : e.coefficients) {
        const double rate = laplacian_eigenvalue(b.size(), e.n).get_d();
        out.coefficients.emplace(b, std::exp(-t * rate) * c);
    }
    return out;
}

RealExpansion noise(const YoungExpansion& e, double t) { return noise(to_real(e), t); }

std::vector<double> synthesize(const RealExpansion& e) {
    const SliceBasis& basis = SliceBasis::get(e.n, e.k);
    std::vector<double> out(Slice::get(e.n, e.k).size(), 0.0);
    for (const auto& [b, c] : e.coefficients) {
        const auto& chi = basis.values(basis.position(b));
        for (std::size_t s = 0; s < chi.size(); ++s)
            out[s] += c * chi[s].get_d();
    }
    return out;
}

IntersectionProfile::IntersectionProfile(int n_, int k_, std::vector<Rational> weights_)
    : n(n_), k(k_), weights(std::move(weights_)) {
    check_slice_parameters(n, k);
    if (static_cast<int>(weights.size()) != k + 1)
        throw InvalidInput("intersection profile needs k+1 = " + std::to_string(k + 1) +
                           " weights, got " + std::to_string(weights.size()));
}

IntersectionProfile IntersectionProfile::johnson(int n, int k) {
    std::vector<Rational> w(static_cast<std::size_t>(k) + 1, 0);
    if (k >= 1)
        w[static_cast<std::size_t>(k) - 1] = 1;
    return {n, k, std::move(w)};
}

IntersectionProfile IntersectionProfile::kneser(int n, int k) {
    std::vector<Rational> w(static_cast<std::size_t>(k) + 1, 0);
    w[0] = 1;
    return {n, k, std::move(w)};
}

IntersectionProfile IntersectionProfile::identity(int n, int k) {
    std::vector<Rational> w(static_cast<std::size_t>(k) + 1, 0);
    w[static_cast<std::size_t>(k)] = 1;
    return {n, k, std::move(w)};
}

SliceFunction scheme_apply(const IntersectionProfile& profile, const SliceFunction& f) {
    if (f.n() != profile.n || f.k() != profile.k)
        throw InvalidInput("profile and function live on different slices");
    const Slice& slice = f.domain();
    SliceFunction out(f.n(), f.k());
    for (std::size_t s = 0; s < slice.size(); ++s) {
        std::vector<Rational> by_overlap(profile.weights.size());
        for (std::size_t t = 0; t < slice.size(); ++t)
            by_overlap[static_cast<std::size_t>(
                std::popcount(slice.point(s) & slice.point(t)))] += f[t];
        for (std::size_t j = 0; j < by_overlap.size(); ++j)
            out[s] += profile.weights[j] * by_overlap[j];
    }
    return out;
}

namespace {

Rational eigenvalue_of(const IntersectionProfile& profile, const std::vector<Rational>& chi) {
    const SliceFunction f(profile.n, profile.k, chi);
    const SliceFunction image = scheme_apply(profile, f);
    auto nonzero = std::find_if(chi.begin(), chi.end(), [](const Rational& v) { return v != 0; });
    // Degree <= k keeps chi_B nonzero on the slice.
    if (nonzero == chi.end())
        throw std::logic_error("basis function vanishes on the slice");
    const auto s = static_cast<std::size_t>(nonzero - chi.begin());
    const Rational theta = image[s] / chi[s];
    if (image != f * theta)
        throw std::logic_error("basis function is not an eigenvector of the profile");
    return theta;
}

}  // namespace

std::vector<Rational> scheme_eigenvalues(const IntersectionProfile& profile,
                                         bool check_all_top_sets) {
    const SliceBasis& basis = SliceBasis::get(profile.n, profile.k);
    std::vector<Rational> thetas;
    for (int d = 0; d <= profile.k; ++d) {
        const TopSet rep = standard_top_set(d, profile.n);
        thetas.push_back(eigenvalue_of(profile, basis.values(basis.position(rep))));
    }
    if (check_all_top_sets) {
        for (std::size_t i = 0; i < basis.top_sets().size(); ++i) {
            const int d = basis.top_sets()[i].size();
            if (eigenvalue_of(profile, basis.values(i)) != thetas[static_cast<std::size_t>(d)])
                throw std::logic_error("eigenvalue differs across chi_B of degree " +
                                       std::to_string(d));
        }
    }
    return thetas;
}

bool triangle_check(const SliceFunction& f, int i, int j, int k) {
    if (i == j || j == k || i == k)
        throw InvalidInput("triangle check needs three distinct coordinates");
    return influence_pair(f, i, j) <=
           ratio(9, 2) * (influence_pair(f, i, k) + influence_pair(f, j, k));
}

PoincareBounds poincare_bounds(const YoungExpansion& e) {
    PoincareBounds out;
    out.degree = e.degree();
    out.variance = moments(e).variance;
    out.total_influence = e.n() >= 2 ? influence_spectral(e, e.n()) : Rational(0);
    out.degree_times_variance = out.variance * out.degree;
    return out;
}

}  // namespace young
