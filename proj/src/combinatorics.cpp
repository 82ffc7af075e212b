#include "young/combinatorics.hpp"

#include <algorithm>

namespace young {

namespace {

void check_increasing(std::span<const int> c, int n) {
    if (n < 0)
        throw InvalidInput("ambient size must be non-negative");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 1 || c[i] > n)
            throw InvalidInput("index " + std::to_string(c[i]) + " outside [1," +
                               std::to_string(n) + "]");
        if (i > 0 && c[i] <= c[i - 1])
            throw InvalidInput("top set candidate must be strictly increasing");
    }
}

void extend_top_sets(int n, int d, std::vector<int>& prefix, std::vector<TopSet>& out) {
    const int i = static_cast<int>(prefix.size());
    if (i == d) {
        out.emplace_back(prefix, n);
        return;
    }
    const int lo = std::max(prefix.empty() ? 1 : prefix.back() + 1, 2 * (i + 1));
    // Leave room for the remaining d - i - 1 entries.
    const int hi = n - (d - i - 1);
    for (int b = lo; b <= hi; ++b) {
        prefix.push_back(b);
        extend_top_sets(n, d, prefix, out);
        prefix.pop_back();
    }
}

void extend_smaller(const TopSet& b, std::vector<int>& prefix, std::vector<bool>& used,
                    std::vector<Sequence>& out) {
    const int i = static_cast<int>(prefix.size());
    if (i == b.size()) {
        out.emplace_back(prefix, b.n());
        return;
    }
    for (int a = 1; a < b[i]; ++a) {
        if (used[static_cast<std::size_t>(a)] || b.contains(a))
            continue;
        used[static_cast<std::size_t>(a)] = true;
        prefix.push_back(a);
        extend_smaller(b, prefix, used, out);
        prefix.pop_back();
        used[static_cast<std::size_t>(a)] = false;
    }
}

}  // namespace

Sequence::Sequence(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
    if (n < 0 || static_cast<int>(entries_.size()) > n)
        throw InvalidInput("sequence longer than its ambient size");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int e : entries_) {
        if (e < 1 || e > n)
            throw InvalidInput("sequence entry " + std::to_string(e) + " outside [1," +
                               std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(e)])
            throw InvalidInput("sequence entries must be distinct");
        seen[static_cast<std::size_t>(e)] = true;
    }
}

bool Sequence::contains(int index) const {
    return std::find(entries_.begin(), entries_.end(), index) != entries_.end();
}

bool Sequence::disjoint_from(const Sequence& other) const {
    return std::none_of(entries_.begin(), entries_.end(),
                        [&](int e) { return other.contains(e); });
}

TopSet::TopSet(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
    if (!is_top_set(entries_, n))
        throw InvalidInput("not a top set: " + to_string());
}

bool TopSet::contains(int index) const {
    return std::binary_search(entries_.begin(), entries_.end(), index);
}

int TopSet::count_at_most(int m) const {
    return static_cast<int>(std::upper_bound(entries_.begin(), entries_.end(), m) -
                            entries_.begin());
}

std::string TopSet::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

bool is_smaller(const Sequence& a, const Sequence& b) {
    if (a.size() != b.size() || !a.disjoint_from(b))
        return false;
    for (int i = 0; i < a.size(); ++i)
        if (a[i] >= b[i])
            return false;
    return true;
}

bool is_top_set(std::span<const int> candidate, int n) {
    check_increasing(candidate, n);
    int running = 1;
    std::size_t next = 0;
    for (int j = 1; j <= n; ++j) {
        if (next < candidate.size() && candidate[next] == j) {
            --running;
            ++next;
        } else {
            ++running;
        }
        if (running <= 0)
            return false;
    }
    return true;
}

bool meets_position_bound(std::span<const int> candidate) {
    for (std::size_t i = 0; i < candidate.size(); ++i)
        if (candidate[i] < 2 * static_cast<int>(i + 1))
            return false;
    return true;
}

std::vector<TopSet> enumerate_top_sets(int n, int d) {
    std::vector<TopSet> out;
    if (d < 0 || 2 * d > n)
        return out;
    std::vector<int> prefix;
    extend_top_sets(n, d, prefix, out);
    return out;
}

std::vector<TopSet> enumerate_top_sets_up_to(int n, int max_d) {
    std::vector<TopSet> out;
    for (int d = 0; d <= max_d && 2 * d <= n; ++d) {
        auto level = enumerate_top_sets(n, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Integer count_top_sets(int n, int d) {
    if (d < 0 || 2 * d > n)
        throw InvalidInput("count_top_sets requires 0 <= d <= n/2");
    return binomial(n, d) - binomial(n, d - 1);
}

Sequence companion_sequence(const TopSet& b) {
    std::vector<bool> used(static_cast<std::size_t>(b.n()) + 1, false);
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(b.size()));
    for (int i = 0; i < b.size(); ++i) {
        int pick = 1;
        while (used[static_cast<std::size_t>(pick)] || b.contains(pick))
            ++pick;
        // pick < b_i is guaranteed by the ballot condition.
        used[static_cast<std::size_t>(pick)] = true;
        a.push_back(pick);
    }
    return Sequence(std::move(a), b.n());
}

std::vector<Sequence> smaller_sequences(const TopSet& b) {
    std::vector<Sequence> out;
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<std::size_t>(b.n()) + 1, false);
    extend_smaller(b, prefix, used, out);
    return out;
}

Integer c_coefficient(const TopSet& b) {
    Integer c = 1;
    for (int i = 0; i < b.size(); ++i) {
        const long shifted = b[i] - 2 * i;
        c *= shifted * (shifted - 1);
        c /= 2;
    }
    return c;
}

TopSet standard_top_set(int d, int n) {
    if (d < 0 || 2 * d > n)
        throw InvalidInput("standard top set needs 2d <= n");
    std::vector<int> e;
    for (int i = 1; i <= d; ++i)
        e.push_back(2 * i);
    return TopSet(std::move(e), n);
}

}  // namespace young
