#pragma once

#include "young/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace young {

/// Ordered list of distinct 1-based coordinates drawn from [n].
class Sequence {
public:
    Sequence() = default;
    Sequence(std::vector<int> entries, int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool contains(int index) const;
    bool disjoint_from(const Sequence& other) const;

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<int> entries_;
    int n_ = 0;
};

/// Increasing sequence B admitting a disjoint A with a_i < b_i for all i.
/// Ordered by length, then lexicographically.
class TopSet {
public:
    TopSet() = default;
    /// Throws InvalidInput unless `entries` is a top set in [n].
    TopSet(std::vector<int> entries, int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    bool contains(int index) const;

    /// Number of entries that are <= m, i.e. |B ∩ [m]|.
    int count_at_most(int m) const;

    Sequence as_sequence() const { return Sequence(entries_, n_); }
    std::string to_string() const;

    friend bool operator==(const TopSet& a, const TopSet& b) {
        return a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const TopSet& a, const TopSet& b) {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    int n_ = 0;
};

/// True iff A < B: equal lengths, disjoint, and a_i < b_i coordinate-wise.
bool is_smaller(const Sequence& a, const Sequence& b);

/// Ballot test: with beta_j = -1 for j in B and +1 otherwise, every running
/// sum of 1, beta_1, ..., beta_n stays positive. Throws InvalidInput when
/// `candidate` is not strictly increasing inside [n].
bool is_top_set(std::span<const int> candidate, int n);

/// The equivalent characterization b_i >= 2i; kept as a cross-check of is_top_set.
bool meets_position_bound(std::span<const int> candidate);

/// All of B_{n,d} in lexicographic order; empty when 2d > n.
std::vector<TopSet> enumerate_top_sets(int n, int d);

/// Every top set of length at most `max_d`, ordered by length then lexicographically.
std::vector<TopSet> enumerate_top_sets_up_to(int n, int max_d);

/// C(n,d) - C(n,d-1). Throws InvalidInput unless 0 <= d <= n/2.
Integer count_top_sets(int n, int d);

/// Greedy companion: a_i is the smallest index below b_i outside B and not yet used.
Sequence companion_sequence(const TopSet& b);

/// Every sequence A < B (not necessarily increasing), in lexicographic order.
std::vector<Sequence> smaller_sequences(const TopSet& b);

/// c_B = prod_i (b_i - 2(i-1)) (b_i - 2(i-1) - 1) / 2.
Integer c_coefficient(const TopSet& b);

/// The top set (2, 4, ..., 2d).
TopSet standard_top_set(int d, int n);

}  // namespace young
