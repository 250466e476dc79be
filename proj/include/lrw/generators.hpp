#pragma once

#include <cstdint>
#include <vector>

#include "lrw/graph.hpp"

namespace lrw {

/// Graph plus the ground-truth cluster id of every vertex.
struct LabeledGraph {
    Graph graph;
    std::vector<std::uint32_t> labels;
};

/// Planted-partition model G(n, p, c, q) with p = d / (n - 1).
/// Every vertex pair inside a cluster is linked with probability
/// q*p*c*(n-1) / ((q+1)*(n-c)) and every pair across clusters with
/// p*c*(n-1) / (n*(q+1)*(c-1)), which makes the expected degree d and
/// the expected ratio of intra to inter degree exactly q.
struct PlantedPartitionSpec {
    std::uint32_t n = 128;
    double d = 16.0;      ///< expected degree
    std::uint32_t c = 4;  ///< cluster count, >= 2, divides n
    double q = 4.0;       ///< intra/inter degree ratio, > 0
    std::uint64_t rng_seed = 1;
};

/// Intra and inter pair probabilities for a planted spec. Throws
/// ParameterError when a probability leaves [0,1], naming which one.
struct PlantedProbabilities {
    double intra;
    double inter;
};
PlantedProbabilities planted_probabilities(const PlantedPartitionSpec& spec);

/// Draws a planted-partition graph. Clusters are contiguous id ranges
/// of size n/c; labels record them. Same spec and seed give the same
/// graph. Throws ParameterError on invalid parameters.
LabeledGraph generate_planted(const PlantedPartitionSpec& spec);

/// Benchmark with power-law vertex degrees and cluster sizes. Degrees
/// are drawn from a truncated power law on [degree_min, degree_max],
/// cluster sizes on [cluster_min, cluster_max] until they cover n
/// (last size clipped). Each vertex splits its edges q/(q+1) inside
/// its cluster and 1/(q+1) outside; stubs are matched with rejection
/// of self-loops, duplicate edges and (for the outside stubs)
/// same-cluster pairs. A stub pair that fails 100 retries is dropped,
/// so realized degrees can fall slightly short.
struct PowerLawSpec {
    std::uint32_t n = 2048;
    std::uint32_t degree_min = 16;
    std::uint32_t degree_max = 128;
    std::uint32_t cluster_min = 16;
    std::uint32_t cluster_max = 256;
    double exponent_degree = 2.0;
    double exponent_size = 1.0;
    double q = 4.0;
    std::uint64_t rng_seed = 1;
};

/// Draws a power-law benchmark graph. Throws ParameterError when the
/// bounds are inconsistent or a vertex needs more intra-cluster
/// neighbors than any cluster can hold.
LabeledGraph generate_powerlaw(const PowerLawSpec& spec);

/// Groups labels into communities: result[k] = sorted vertices with
/// label k.
std::vector<std::vector<VertexId>> communities_from_labels(
    const std::vector<std::uint32_t>& labels);

}  // namespace lrw
