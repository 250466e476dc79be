#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "lrw/engine.hpp"
#include "lrw/graph.hpp"
#include "lrw/params.hpp"

namespace lrw {

/// One cluster while the dictionary is being assembled. `members` holds
/// the seeds that walked to this attractor (later unioned with
/// `significant`), both kept sorted. `evidence` stores, per vertex, the
/// largest feature value any walk folded into this entry assigned to
/// it; it decides overlap resolution at the end.
struct ClusterEntry {
    std::vector<VertexId> members;
    std::vector<VertexId> significant;
    std::map<VertexId, double> evidence;
};

/// Dictionary of clusters keyed by attractor id.
using ClusterDict = std::map<VertexId, ClusterEntry>;

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

/// Final result: disjoint clusters, each sorted ascending. `attractors`
/// is parallel to `clusters` and names the dictionary key a cluster
/// came from (the vertex itself for fallback singletons).
struct Clustering {
    std::vector<std::vector<VertexId>> clusters;
    std::vector<VertexId> attractors;
    /// labels[v] = index into clusters, kUnassigned if uncovered
    std::vector<std::uint32_t> labels;
};

/// Splits a feature vector into the attractor (argmax, smallest id on
/// ties) and the significant set {j : x_j > tau * x_m}, sorted. The
/// attractor is always significant.
struct AttractorSplit {
    VertexId attractor;
    std::vector<VertexId> significant;
};
AttractorSplit attractor_and_significant(const SparseProbVector& x, double tau);

/// Folds one walk result into the dictionary: the seed joins the member
/// set of its attractor's entry, the significant set is unioned in, and
/// per-vertex evidence keeps the max feature value. Creates the entry
/// if the attractor key is new.
void merge_into_dictionary(ClusterDict& dict, VertexId seed, const SparseProbVector& feature,
                           double tau);

/// Merges entry pairs whose significant sets intersect in more than
/// half of the smaller set, scanning keys in ascending order and
/// repeating full passes until none qualifies. The smaller attractor id
/// survives.
void merge_overlapping_clusters(ClusterDict& dict);

/// Unions significant into members for every entry, then assigns each
/// covered vertex to the entry with the largest evidence for it
/// (smallest attractor id on ties). Vertices covered by no entry become
/// singletons. Clusters come out ordered by attractor id, fallback
/// singletons last.
Clustering resolve_overlaps(const ClusterDict& dict, VertexId n);

/// Optional instrumentation for the exploration phase.
struct ExploreHooks {
    /// Forwarded to every walk's explore() call. Concurrent.
    StepObserver on_step;
    /// Called once per finished walk with its seed and outcome. Concurrent.
    std::function<void(VertexId seed, const WalkOutcome&)> on_walk;
};

/// Wall time spent exploring vs merging, summed over the batches.
struct PhaseTimes {
    double explore_seconds = 0.0;
    double merge_seconds = 0.0;
};

/// Multi-stage global clustering: seeds are drawn in batches from the
/// not-yet-covered set (all of it when it fits in p.batch_size, see
/// LrwParams), explored in parallel, and folded into one dictionary
/// until every vertex is covered. `threads` <= 0 means hardware
/// concurrency. `skip_merge` drops the overlap-merging passes, leaving
/// one cluster per attractor. Output depends on `seed` but not on
/// `threads`.
Clustering cluster_global(const Graph& g, const LrwParams& p, int threads = 0,
                          std::uint64_t rng_seed = 1, bool skip_merge = false,
                          const ExploreHooks& hooks = {}, PhaseTimes* times = nullptr);

/// Sizes of the significance split inside cluster_local.
struct LocalDiagnostics {
    std::size_t s1 = 0;  ///< vertices at or above eta * x_m
    std::size_t s2 = 0;  ///< positive vertices below the threshold
};

/// Local cluster around `start`: walk once, keep vertices at or above
/// eta * x_m directly, explore the rest of the support, merge, and
/// return the kept set plus the merged member set containing `start`.
/// Sorted; always contains `start`.
std::vector<VertexId> cluster_local(const Graph& g, VertexId start, const LrwParams& p,
                                    int threads = 0, const ExploreHooks& hooks = {},
                                    LocalDiagnostics* diag = nullptr);

}  // namespace lrw
