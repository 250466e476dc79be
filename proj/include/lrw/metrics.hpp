#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lrw/graph.hpp"

namespace lrw {

/// A set of communities over 64-bit vertex ids. Communities may
/// overlap; every community must be nonempty. Used for both predicted
/// clusterings (then disjoint) and ground truth.
using CommunityList = std::vector<std::vector<std::uint64_t>>;

/// Intersection counts between predicted clusters (rows) and ground
/// truth communities (columns), restricted to the evaluated vertices
/// (those present on both sides). With overlapping truth a vertex
/// counts in every community it belongs to, so column sums can exceed
/// `total`.
struct ConfusionMatrix {
    std::vector<std::vector<std::uint64_t>> counts;
    std::vector<std::uint64_t> row_sums;
    std::vector<std::uint64_t> col_sums;
    std::uint64_t total = 0;  ///< distinct evaluated vertices
};
ConfusionMatrix confusion_matrix(const CommunityList& pred, const CommunityList& truth);

/// Normalized mutual information over the evaluated vertices. 1 for
/// identical partitions, 0 when the prediction carries no information.
/// When both sides are a single cluster the measure is undefined;
/// returns 0 and writes a warning to `warnings` if given.
double nmi(const CommunityList& pred, const CommunityList& truth,
           std::ostream* warnings = nullptr);
double nmi(const ConfusionMatrix& cm, std::ostream* warnings = nullptr);

/// Conductance of a vertex set: cut edges over the smaller side's total
/// degree. `cluster` must be a nonempty proper subset of the vertices;
/// throws ParameterError otherwise. A zero denominator forces a zero
/// cut, reported as 0.
double conductance(const Graph& g, const std::vector<VertexId>& cluster);

/// Mean conductance over the clusters. Clusters spanning all vertices
/// are skipped with a warning; if nothing remains the result is NaN
/// (with a warning).
double mean_conductance(const Graph& g, const std::vector<std::vector<VertexId>>& clusters,
                        std::ostream* warnings = nullptr);

/// |a intersect b| / |a union b|. Both sets must be nonempty; throws
/// ParameterError otherwise.
double jaccard(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);

/// Rand index over sampled vertex pairs: `pairs_per_class` pairs that
/// share a truth community and as many that do not, drawn without
/// replacement with the given seed; a class smaller than the quota is
/// used exhaustively, so a large quota turns this into the exact Rand
/// index. A pair counts as correct when the prediction agrees with the
/// truth side. Evaluates only vertices present on both sides. Throws
/// ParameterError when either class is empty.
double rand_index_sampled(const CommunityList& pred, const CommunityList& truth,
                          std::uint64_t pairs_per_class, std::uint64_t rng_seed);

}  // namespace lrw
