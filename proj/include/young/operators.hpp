#pragma once

#include "young/expansion.hpp"
#include "young/slice.hpp"

#include <map>
#include <vector>

namespace young {

/// f^{(i j)}: the value at S is f evaluated at S with i and j exchanged.
SliceFunction apply_transposition(const SliceFunction& f, int i, int j);

/// Inf_ij[f] = 1/2 ||f^{(i j)} - f||^2 under the uniform slice measure.
Rational influence_pair(const SliceFunction& f, int i, int j);

/// Inf^m[f] = (1/m) sum_{i<j<=m} Inf_ij[f], summed pair by pair.
Rational total_influence_m(const SliceFunction& f, int m);
Rational total_influence(const SliceFunction& f);

/// Inf^m from the expansion: sum |B∩[m]|(m+1-|B∩[m]|)/m f^(B)^2 ||chi_B||^2.
Rational influence_spectral(const YoungExpansion& e, int m);

/// Eigenvalue of chi_B under sum_{i<m} f^{(i m)}: i-2 if b_i = m, and m-i if
/// b_{i-1} < m < b_i, with b_0 = -inf and b_{d+1} = +inf (1-based i).
int lambda_coefficient(const TopSet& b, int m);

/// sum_{1<=i<m} f^{(i m)}, by direct summation.
SliceFunction transposition_sum(const SliceFunction& f, int m);

/// Expansion of f^{(m m+1)} computed from the expansion of f alone.
YoungExpansion adjacent_transposition_expansion(const YoungExpansion& e, int m);

/// m(m-1)/2 - |B∩[m]|(m+1-|B∩[m]|), the eigenvalue of sum_{i<j<=m} f^{(i j)}.
int tau_coefficient(const TopSet& b, int m);

/// Eigenvalue 2|B|(n+1-|B|)/(n(n-1)) of the Laplacian on chi_B.
Rational laplacian_eigenvalue(int degree, int n);

/// L f = f - (1/C(n,2)) sum_{i<j} f^{(i j)}, applied coefficient-wise.
YoungExpansion laplacian(const YoungExpansion& e);

/// Expansion with floating coefficients; produced by the noise operator.
struct RealExpansion {
    int n = 0;
    int k = 0;
    std::map<TopSet, double> coefficients;
};

RealExpansion to_real(const YoungExpansion& e);

/// H_t = exp(-tL): damps f^(B) by exp(-t * laplacian_eigenvalue(|B|, n)).
RealExpansion noise(const YoungExpansion& e, double t);
RealExpansion noise(const RealExpansion& e, double t);

/// Point values, in Slice::points() order.
std::vector<double> synthesize(const RealExpansion& e);

/// Matrix on the slice whose (S,T) entry is weights[|S∩T|].
struct IntersectionProfile {
    int n = 0;
    int k = 0;
    std::vector<Rational> weights;  ///< k+1 entries

    IntersectionProfile(int n, int k, std::vector<Rational> weights);

    static IntersectionProfile johnson(int n, int k);
    static IntersectionProfile kneser(int n, int k);
    static IntersectionProfile identity(int n, int k);
};

/// (Mf)(S) = sum_T w_{|S∩T|} f(T).
SliceFunction scheme_apply(const IntersectionProfile& profile, const SliceFunction& f);

/// theta_0..theta_k with M chi_B = theta_{|B|} chi_B. Read off from chi_(2,4,..,2d);
/// with `check_all_top_sets` every chi_B is applied and must give the same ratio.
/// Throws std::logic_error if some chi_B fails to be an eigenvector.
std::vector<Rational> scheme_eigenvalues(const IntersectionProfile& profile,
                                         bool check_all_top_sets = false);

/// Inf_ij <= 9/2 (Inf_ik + Inf_jk).
bool triangle_check(const SliceFunction& f, int i, int j, int k);

struct PoincareBounds {
    Rational variance;
    Rational total_influence;
    Rational degree_times_variance;
    int degree = 0;
};

/// V[f] <= Inf[f] <= d V[f] with d the largest |B| carrying a nonzero coefficient.
PoincareBounds poincare_bounds(const YoungExpansion& e);

}  // namespace young
