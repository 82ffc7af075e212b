#include "young/friedgut.hpp"

#include "young/operators.hpp"

#include <algorithm>
#include <optional>

namespace young {

namespace {

using InfluenceTable = std::vector<std::vector<Rational>>;

InfluenceTable influence_table(const SliceFunction& f) {
    const auto n = static_cast<std::size_t>(f.n());
    InfluenceTable table(n + 1, std::vector<Rational>(n + 1));
    for (int i = 1; i <= f.n(); ++i)
        for (int j = i + 1; j <= f.n(); ++j) {
            const Rational inf = influence_pair(f, i, j);
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = inf;
            table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = inf;
        }
    return table;
}

std::vector<std::pair<int, int>> greedy_matching(const InfluenceTable& table, int n,
                                                 const Rational& tau) {
    std::vector<bool> matched(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (matched[static_cast<std::size_t>(i)] || matched[static_cast<std::size_t>(j)])
                continue;
            if (table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= tau) {
                matched[static_cast<std::size_t>(i)] = matched[static_cast<std::size_t>(j)] = true;
                edges.emplace_back(i, j);
            }
        }
    return edges;
}

std::vector<int> endpoints(const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> out;
    for (const auto& [i, j] : edges) {
        out.push_back(i);
        out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_tau(const Rational& tau) {
    if (tau <= 0)
        throw InvalidInput("tau must be positive");
}

JuntaReport approximate_with(const SliceFunction& f, const InfluenceTable& table,
                             const Rational& tau) {
    const int n = f.n();
    JuntaReport report{.important_set = {},
                       .matching = greedy_matching(table, n, tau),
                       .tau = tau,
                       .permutation = {},
                       .averaged = SliceFunction(n, f.k()),
                       .junta = SliceFunction(n, f.k()),
                       .distance = 0,
                       .rounding_bound = 0,
                       .coordinate_count = 0};
    report.important_set = endpoints(report.matching);
    report.coordinate_count = static_cast<int>(report.important_set.size());

    // Complement first, important coordinates last.
    std::vector<int> order;
    for (int c = 1; c <= n; ++c)
        if (!std::binary_search(report.important_set.begin(), report.important_set.end(), c))
            order.push_back(c);
    const int free_count = static_cast<int>(order.size());
    order.insert(order.end(), report.important_set.begin(), report.important_set.end());

    std::vector<int> sigma(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> inverse(static_cast<std::size_t>(n) + 1, 0);
    for (int pos = 1; pos <= n; ++pos) {
        sigma[static_cast<std::size_t>(order[static_cast<std::size_t>(pos - 1)])] = pos;
        inverse[static_cast<std::size_t>(pos)] = order[static_cast<std::size_t>(pos - 1)];
    }
    report.permutation = sigma;

    const SliceFunction moved = relabel(f, sigma);
    SliceFunction averaged = moved;
    if (free_count >= 2)
        averaged = synthesize(average_first_m(expand(moved), free_count));
    report.averaged = relabel(averaged, inverse);

    const Rational half(1, 2);
    std::size_t disagreements = 0;
    for (std::size_t s = 0; s < f.size(); ++s) {
        report.junta[s] = report.averaged[s] >= half ? 1 : 0;
        if (report.junta[s] != f[s])
            ++disagreements;
    }
    report.distance = ratio(static_cast<unsigned long>(disagreements),
                            static_cast<unsigned long>(f.size()));
    report.rounding_bound = 2 * norm_sq(f - report.averaged);
    return report;
}

}  // namespace

std::vector<std::pair<int, int>> influence_matching(const SliceFunction& f, const Rational& tau) {
    check_tau(tau);
    return greedy_matching(influence_table(f), f.n(), tau);
}

std::vector<int> important_set(const SliceFunction& f, const Rational& tau) {
    return endpoints(influence_matching(f, tau));
}

bool depends_only_on(const SliceFunction& f, const std::vector<int>& coordinates) {
    std::vector<bool> inside(static_cast<std::size_t>(f.n()) + 1, false);
    for (int c : coordinates) {
        if (c < 1 || c > f.n())
            throw InvalidInput("coordinate outside [1,n]");
        inside[static_cast<std::size_t>(c)] = true;
    }
    for (int i = 1; i <= f.n(); ++i)
        for (int j = i + 1; j <= f.n(); ++j)
            if (!inside[static_cast<std::size_t>(i)] && !inside[static_cast<std::size_t>(j)] &&
                apply_transposition(f, i, j) != f)
                return false;
    return true;
}

SliceFunction relabel(const SliceFunction& f, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != f.n() + 1)
        throw InvalidInput("relabeling needs n+1 entries");
    const Slice& slice = f.domain();
    SliceFunction out(f.n(), f.k());
    for (std::size_t s = 0; s < slice.size(); ++s) {
        Monomial image = 0;
        for (int c : indices_of(slice.point(s)))
            image |= Monomial{1} << (sigma[static_cast<std::size_t>(c)] - 1);
        out[slice.index_of(image)] = f[s];
    }
    return out;
}

JuntaReport junta_approximate(const SliceFunction& f, const Rational& tau) {
    if (!f.is_boolean())
        throw InvalidInput("junta approximation needs a Boolean function");
    check_tau(tau);
    return approximate_with(f, influence_table(f), tau);
}

JuntaReport junta_for_epsilon(const SliceFunction& f, const Rational& eps, int steps) {
    if (!f.is_boolean())
        throw InvalidInput("junta approximation needs a Boolean function");
    if (eps < 0)
        throw InvalidInput("epsilon must be non-negative");
    const InfluenceTable table = influence_table(f);

    std::vector<Rational> taus;
    Rational tau = 1;
    for (int j = 0; j < steps; ++j, tau /= 2)
        taus.push_back(tau);
    // Below the smallest nonzero influence the procedure is exact, so the
    // sweep always has a feasible point.
    std::optional<Rational> smallest;
    for (const auto& row : table)
        for (const auto& v : row)
            if (v > 0 && (!smallest || v < *smallest))
                smallest = v;
    taus.push_back(smallest ? *smallest : Rational(1));

    std::optional<JuntaReport> best;
    for (const auto& t : taus) {
        JuntaReport r = approximate_with(f, table, t);
        if (r.distance > eps)
            continue;
        if (!best || r.coordinate_count < best->coordinate_count)
            best = std::move(r);
    }
    return *best;
}

}  // namespace young
