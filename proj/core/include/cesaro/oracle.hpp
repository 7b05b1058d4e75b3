#pragma once

#include <cstdint>

#include "cesaro/norms.hpp"

namespace cesaro {

struct OracleResult {
    std::vector<double> values;     // per grid point where applicable
    double scalar = 0.0;            // scalar results (dual norm bound)
    std::size_t evaluations = 0;    // candidate evaluations performed
    bool exhaustive = false;        // full candidate space enumerated
};

/// Majorant by exhaustion: at each grid point the minimum over all
/// dominating Psi-affine lines. Candidates are the lines through every
/// sample pair with nonnegative slope (domination toward x = 0 rules out
/// negative slopes) plus horizontal lines at the running maxima; a line is
/// kept only if it dominates every sample. Quadratic cost, N <= 200.
OracleResult brute_majorant(const SampledFunction& f, const PsiTransform& psi);

/// Lower bound on the dual norm sup{<f,g> : ||g|| <= 1} by seeded projected
/// coordinate ascent over g >= 0 aligned with sign f, renormalizing by the
/// Cesaro norm. Never exceeds the certified dual norm.
OracleResult brute_dual_norm(const SampledFunction& f, const WeightSpec& wspec,
                             std::size_t iters, std::uint64_t seed);

/// Direct discretization of the convex-combination definition of the
/// majorant with tuples of grid points (max_n in {1, 2, 3}); tuples may use
/// the vanishing far-end limit, so n = 1 yields the running maximum.
/// Pairs already match brute_majorant (one-dimensional Caratheodory);
/// triples exist to test that reduction. N <= 40.
OracleResult brute_combination_majorant(const SampledFunction& f,
                                        const PsiTransform& psi, int max_n);

} // namespace cesaro
