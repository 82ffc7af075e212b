#include "young/verify.hpp"

#include "young/friedgut.hpp"
#include "young/operators.hpp"

#include <random>
#include <sstream>

namespace young {

namespace {

std::string slice_name(int n, int k) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::vector<ExchangeableMeasure> measures_for(int n) {
    std::vector<ExchangeableMeasure> out;
    for (int k = 0; 2 * k <= n; ++k)
        out.emplace_back(UniformSlice{n, k});
    for (const Rational& p : {ratio(1, 3), ratio(1, 2), ratio(2, 5)}) {
        out.emplace_back(ProductMu{p});
        out.emplace_back(ProductNu{p});
    }
    return out;
}

void orthogonality(int max_n, std::vector<CheckRow>& rows) {
    for (int n = 2; n <= max_n; ++n) {
        const auto sets = enumerate_top_sets_up_to(n, n / 2);
        for (const auto& mu : measures_for(n)) {
            std::size_t failures = 0, pairs = 0;
            for (std::size_t a = 0; a < sets.size(); ++a)
                for (std::size_t b = a + 1; b < sets.size(); ++b) {
                    ++pairs;
                    if (inner_product(chi_top(sets[a]), chi_top(sets[b]), mu) != 0)
                        ++failures;
                }
            rows.push_back({"orthogonality", "<chi_A,chi_B> = 0",
                            "n=" + std::to_string(n) + " " + mu.name(), failures == 0,
                            std::to_string(pairs - failures) + "/" + std::to_string(pairs)});
        }
    }
}

void norms(int max_n, std::vector<CheckRow>& rows) {
    for (int n = 2; n <= max_n; ++n) {
        for (int d = 0; 2 * d <= n; ++d) {
            const bool ok = Integer(static_cast<long>(enumerate_top_sets(n, d).size())) ==
                            count_top_sets(n, d);
            rows.push_back({"norms", "top set count", "n=" + std::to_string(n) +
                            " d=" + std::to_string(d), ok, ""});
        }
        const auto sets = enumerate_top_sets_up_to(n, n / 2);
        for (const auto& mu : measures_for(n)) {
            std::size_t failures = 0;
            for (const auto& b : sets)
                if (inner_product(chi_top(b), chi_top(b), mu) != chi_norm_sq(b, mu))
                    ++failures;
            rows.push_back({"norms", "||chi_B||^2 = c_B ||chi_d||^2",
                            "n=" + std::to_string(n) + " " + mu.name(), failures == 0,
                            std::to_string(sets.size() - failures) + "/" +
                                std::to_string(sets.size())});
        }
    }
}

void eigen(int max_n, std::vector<CheckRow>& rows) {
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const SliceBasis& basis = SliceBasis::get(n, k);
            std::size_t failures = 0, total = 0;
            for (const auto& b : basis.top_sets()) {
                const SliceFunction f = synthesize(YoungExpansion::unit(b, k));
                for (int m = 1; m <= n; ++m) {
                    ++total;
                    SliceFunction expected = f;
                    expected *= Rational(lambda_coefficient(b, m));
                    if (transposition_sum(f, m) != expected)
                        ++failures;
                }
            }
            rows.push_back({"eigen", "sum_{i<m} (i m) chi_B = lambda chi_B", slice_name(n, k),
                            failures == 0,
                            std::to_string(total - failures) + "/" + std::to_string(total)});

            const std::pair<const char*, IntersectionProfile> schemes[] = {
                {"johnson eigenvectors", IntersectionProfile::johnson(n, k)},
                {"kneser eigenvectors", IntersectionProfile::kneser(n, k)}};
            for (const auto& [label, profile] : schemes) {
                bool ok = true;
                std::string detail;
                try {
                    const auto theta = scheme_eigenvalues(profile, true);
                    for (const auto& t : theta)
                        detail += (detail.empty() ? "" : ",") + format_rational(t);
                } catch (const std::logic_error& e) {
                    ok = false;
                    detail = e.what();
                }
                rows.push_back({"eigen", label, slice_name(n, k), ok, detail});
            }
        }
}

void junta(int max_n, std::vector<CheckRow>& rows) {
    std::mt19937 rng(20240611);
    for (int n = 4; n <= max_n; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const Slice& slice = Slice::get(n, k);
            // Planted junta on the last two coordinates plus a random function.
            SliceFunction planted(n, k), noisy(n, k);
            for (std::size_t s = 0; s < slice.size(); ++s) {
                const Monomial p = slice.point(s);
                const bool a = (p >> (n - 1)) & 1, b = (p >> (n - 2)) & 1;
                planted[s] = (a || b) ? 1 : 0;
                noisy[s] = static_cast<int>(rng() & 1);
            }
            for (const auto* f : {&planted, &noisy}) {
                const bool is_planted = f == &planted;
                const Rational tau = is_planted ? Rational(ratio(1, 100)) : Rational(ratio(1, 8));
                const JuntaReport r = junta_approximate(*f, tau);
                const bool depends = depends_only_on(r.junta, r.important_set);
                const bool bounded = r.distance <= r.rounding_bound;
                const bool exact = !is_planted || r.distance == 0;
                std::ostringstream detail;
                detail << "J=" << r.coordinate_count << " dist=" << format_rational(r.distance)
                       << " bound=" << format_rational(r.rounding_bound);
                rows.push_back({"junta", is_planted ? "planted junta recovered"
                                                    : "rounding bound on random function",
                                slice_name(n, k), depends && bounded && exact, detail.str()});
            }
        }
}

}  // namespace

std::vector<CheckRow> run_checks(const std::string& suite, int max_n) {
    if (max_n < 2)
        throw InvalidInput("max-n must be at least 2");
    if (max_n > 12)
        throw InvalidInput("max-n above 12 is not supported");
    std::vector<CheckRow> rows;
    const bool all = suite == "all";
    if (!all && suite != "orthogonality" && suite != "norms" && suite != "eigen" &&
        suite != "junta")
        throw InvalidInput("unknown suite: " + suite);
    if (all || suite == "orthogonality")
        orthogonality(max_n, rows);
    if (all || suite == "norms")
        norms(max_n, rows);
    if (all || suite == "eigen")
        eigen(max_n, rows);
    if (all || suite == "junta")
        junta(max_n, rows);
    return rows;
}

std::string format_checks(const std::vector<CheckRow>& rows) {
    std::ostringstream out;
    out << "suite\tproperty\tinstance\tresult\tdetail\n";
    for (const auto& r : rows)
        out << r.suite << '\t' << r.property << '\t' << r.instance << '\t'
            << (r.passed ? "PASS" : "FAIL") << '\t' << r.detail << '\n';
    return out.str();
}

}  // namespace young
