#pragma once

#include <cstddef>
#include <cstdint>

#include "lrw/error.hpp"

namespace lrw {

/// Tunables of the walk and clustering pipeline.
struct LrwParams {
    double r = 2.0;           ///< inflation exponent, > 1
    int t_max = 100;          ///< maximum walk iterations
    double epsilon = 1e-5;    ///< prune threshold
    double xi = 1e-9;         ///< convergence threshold on the L2 step delta
    double tau = 0.3;         ///< significant-vertex threshold for merging
    double eta = 0.3;         ///< significant-vertex threshold for local clustering
    std::size_t batch_size = 0;  ///< seeds per multi-stage batch; 0 = automatic

    /// Checks the documented ranges; throws ParameterError otherwise.
    /// The exploration engine itself additionally accepts epsilon == 0
    /// (pruning disabled), which is useful for exact reference runs.
    void validate() const {
        if (!(r > 1.0)) throw ParameterError("inflation exponent r must exceed 1");
        if (t_max < 1) throw ParameterError("t_max must be at least 1");
        if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
        if (!(xi > 0.0 && xi < 1.0)) throw ParameterError("xi must lie in (0, 1)");
        if (!(tau > 0.0 && tau < 1.0)) throw ParameterError("tau must lie in (0, 1)");
        if (!(eta > 0.0 && eta < 1.0)) throw ParameterError("eta must lie in (0, 1)");
    }
};

}  // namespace lrw
