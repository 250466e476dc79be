#pragma once

#include <iosfwd>
#include <vector>

#include "lrw/clustering.hpp"
#include "lrw/graph.hpp"
#include "lrw/metrics.hpp"

namespace lrw {

/// Writes one "original_id <TAB> value" line per vertex. Used for both
/// ground-truth labels and clustering assignments.
void write_membership_tsv(std::ostream& out, const Graph& g,
                          const std::vector<std::uint32_t>& values);

/// Writes one cluster per line: attractor original id first, then the
/// sorted member original ids.
void write_clusters_lines(std::ostream& out, const Graph& g, const Clustering& clustering);

/// Reads "vertex <TAB> cluster" lines into communities grouped by
/// cluster id. '#' lines are comments. Throws ParseError on malformed
/// lines.
CommunityList read_membership_tsv(std::istream& in);

/// Reads one community per line, space-separated vertex ids, '#' lines
/// ignored. With `first_token_is_attractor` the leading id is metadata
/// written by write_clusters_lines and is not taken as a member.
/// Members are sorted and deduplicated. Throws ParseError on malformed
/// lines.
CommunityList read_communities_lines(std::istream& in, bool first_token_is_attractor = false);

/// Clusters as original-id communities, in cluster order.
CommunityList communities_from_clustering(const Graph& g, const Clustering& clustering);

}  // namespace lrw
