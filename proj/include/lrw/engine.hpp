#pragma once

#include <functional>

#include "lrw/graph.hpp"
#include "lrw/params.hpp"
#include "lrw/sparse_vector.hpp"

namespace lrw {

/// Result of one walk from a seed vertex.
struct WalkOutcome {
    SparseProbVector feature;  ///< final probability vector
    int iterations = 0;        ///< steps performed, <= t_max
    bool converged = false;    ///< last L2 delta fell below xi
};

/// Called after each full iteration (transition, prune, inflate,
/// normalize) with the iteration number (1-based) and the new state.
/// When walks run in parallel the observer is invoked concurrently from
/// different walks and must be thread-safe.
using StepObserver = std::function<void(int iteration, const SparseProbVector& state)>;

/// One transition step y = Px with P = (I+A)(I+D)^-1. Support grows to
/// the closed neighborhood of support(x); the L1 mass is preserved.
SparseProbVector walk_step(const Graph& g, const SparseProbVector& x);

/// Removes entries below epsilon without renormalizing. If that would
/// empty the vector, the single largest entry (smallest id on ties) is
/// kept with value 1 instead.
SparseProbVector prune(SparseProbVector x, double epsilon);

/// Raises every value to the power r, then rescales to unit L1 sum.
/// x must be nonempty and r > 1.
SparseProbVector inflate_normalize(SparseProbVector x, double r);

/// Runs the walk from a single seed: transition, prune, inflate,
/// normalize per iteration, stopping when the L2 delta between
/// consecutive states falls below p.xi or after p.t_max iterations.
/// Pure function of (g, seed, p); safe to run concurrently over a shared
/// graph, with results independent of scheduling.
WalkOutcome explore(const Graph& g, VertexId seed, const LrwParams& p,
                    const StepObserver& on_step = {});

}  // namespace lrw
