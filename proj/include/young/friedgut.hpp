#pragma once

#include "young/expansion.hpp"
#include "young/slice.hpp"

#include <utility>
#include <vector>

namespace young {

/// Greedy maximal matching over the pairs (i,j), scanned in lexicographic
/// order, whose influence is at least tau.
std::vector<std::pair<int, int>> influence_matching(const SliceFunction& f, const Rational& tau);

/// Endpoints of influence_matching, sorted. Every pair outside the returned
/// set has influence below tau.
std::vector<int> important_set(const SliceFunction& f, const Rational& tau);

/// True iff f = f^{(i j)} for all i, j outside `coordinates`.
bool depends_only_on(const SliceFunction& f, const std::vector<int>& coordinates);

/// Moves coordinate c to position sigma[c]: the result at {sigma(x) : x in S}
/// is f(S). `sigma` is 1-based and has n+1 entries (sigma[0] unused).
SliceFunction relabel(const SliceFunction& f, const std::vector<int>& sigma);

struct JuntaReport {
    std::vector<int> important_set;
    std::vector<std::pair<int, int>> matching;
    Rational tau;
    /// Relabeling used internally: original coordinate c sits at position
    /// permutation[c]; the important set occupies the trailing positions.
    std::vector<int> permutation;
    /// Average of f over permutations of the coordinates outside important_set.
    SliceFunction averaged;
    /// averaged rounded to {0,1}, ties at 1/2 going to 1; in original labels.
    SliceFunction junta;
    Rational distance;       ///< Pr[f != junta]
    Rational rounding_bound; ///< 2 ||f - averaged||^2
    int coordinate_count = 0;
};

/// Important set, symmetrization over its complement, rounding. Throws
/// InvalidInput unless f is Boolean and tau > 0.
JuntaReport junta_approximate(const SliceFunction& f, const Rational& tau);

/// Sweeps tau over 1, 1/2, 1/4, ... and returns the report with the fewest
/// coordinates among those with distance <= eps (earliest tau on ties).
JuntaReport junta_for_epsilon(const SliceFunction& f, const Rational& eps, int steps = 64);

}  // namespace young
