#include "young/slice.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace young {

namespace {

constexpr std::size_t kMaxSlicePoints = std::size_t{1} << 22;

void collect(int n, int k, int next, Monomial acc, std::vector<Monomial>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (int i = next; i <= n - k + 1; ++i)
        collect(n, k - 1, i + 1, acc | (Monomial{1} << (i - 1)), out);
}

}  // namespace

void check_slice_parameters(int n, int k) {
    if (n < 1 || n > kMaxVariables)
        throw InvalidInput("slice size n must lie in [1,64]");
    if (k < 0 || 2 * k > n)
        throw InvalidInput("slice weight must satisfy 0 <= k <= n/2");
    if (binomial(n, k) > static_cast<unsigned long>(kMaxSlicePoints))
        throw InvalidInput("slice (" + std::to_string(n) + "," + std::to_string(k) +
                           ") is too large to tabulate");
}

Slice::Slice(int n, int k) : n_(n), k_(k) {
    collect(n, k, 1, 0, points_);
    index_.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
        index_.emplace(points_[i], i);
}

const Slice& Slice::get(int n, int k) {
    check_slice_parameters(n, k);
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<Slice>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, k}];
    if (!slot)
        slot.reset(new Slice(n, k));
    return *slot;
}

std::size_t Slice::index_of(Monomial subset) const {
    auto it = index_.find(subset);
    if (it == index_.end())
        throw InvalidInput("set is not a " + std::to_string(k_) + "-subset of [" +
                           std::to_string(n_) + "]");
    return it->second;
}

SliceFunction::SliceFunction(int n, int k)
    : n_(n), k_(k), values_(Slice::get(n, k).size()) {}

SliceFunction::SliceFunction(int n, int k, std::vector<Rational> values)
    : n_(n), k_(k), values_(std::move(values)) {
    if (values_.size() != Slice::get(n, k).size())
        throw InvalidInput("slice function needs exactly C(n,k) values");
}

SliceFunction SliceFunction::constant(int n, int k, const Rational& c) {
    SliceFunction f(n, k);
    for (auto& v : f.values_)
        v = c;
    return f;
}

SliceFunction SliceFunction::restrict(const MultilinearPolynomial& p, int k) {
    SliceFunction f(p.n(), k);
    const auto& slice = f.domain();
    for (std::size_t i = 0; i < slice.size(); ++i)
        f.values_[i] = p.evaluate_at(slice.point(i));
    return f;
}

bool SliceFunction::is_boolean() const {
    for (const auto& v : values_)
        if (v != 0 && v != 1)
            return false;
    return true;
}

void SliceFunction::check_domain(const SliceFunction& other) const {
    if (!same_domain(other))
        throw InvalidInput("slice functions live on different slices");
}

SliceFunction& SliceFunction::operator+=(const SliceFunction& other) {
    check_domain(other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += other.values_[i];
    return *this;
}

SliceFunction& SliceFunction::operator-=(const SliceFunction& other) {
    check_domain(other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] -= other.values_[i];
    return *this;
}

SliceFunction& SliceFunction::operator*=(const Rational& c) {
    for (auto& v : values_)
        v *= c;
    return *this;
}

Monomial swap_coordinates(Monomial subset, int i, int j) {
    const Monomial bi = Monomial{1} << (i - 1);
    const Monomial bj = Monomial{1} << (j - 1);
    const bool has_i = subset & bi;
    const bool has_j = subset & bj;
    if (has_i == has_j)
        return subset;
    return subset ^ bi ^ bj;
}

}  // namespace young
