#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrw/error.hpp"

namespace lrw {

/// Index into a compacted vertex space [0, n).
using VertexId = std::uint32_t;

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Adjacency lists are sorted ascending and symmetric; there are no
/// self-loops and no duplicate edges. Vertices carry the original
/// (possibly sparse, 64-bit) ids they had in the input; internally
/// everything runs on the compact ids. The structure is read-only after
/// construction and safe to share across any number of threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph over vertices [0, n). Edges are canonicalized:
    /// self-loops dropped, duplicates collapsed, lists sorted.
    /// Original ids default to the compact ids.
    static Graph from_edges(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges);

    /// Same, but with an explicit compact -> original id table (size n).
    static Graph from_edges(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges,
                            std::vector<std::uint64_t> original_ids);

    VertexId vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    std::uint32_t degree(VertexId v) const {
        check_vertex(v);
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::uint64_t original_id(VertexId v) const {
        check_vertex(v);
        return original_ids_[v];
    }

    const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }

    /// Compact id for an original input id, if present.
    std::optional<VertexId> find_original(std::uint64_t original_id) const;

    /// Structural equality over original ids: same vertex set and edge set.
    bool same_structure(const Graph& other) const;

private:
    void check_vertex(VertexId v) const {
        if (v >= n_) throw std::out_of_range("vertex id " + std::to_string(v) +
                                             " out of range [0, " + std::to_string(n_) + ")");
    }

    VertexId n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::size_t> offsets_;    // size n+1
    std::vector<VertexId> neighbors_;     // size 2m, sorted per vertex
    std::vector<std::uint64_t> original_ids_;
    std::unordered_map<std::uint64_t, VertexId> original_index_;
};

/// Counters accumulated while loading an edge list.
struct LoadSummary {
    std::size_t lines = 0;
    std::size_t comment_lines = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_collapsed = 0;
};

/// Reads a whitespace-separated "u v" edge list. Lines starting with '#'
/// are comments. Self-loop lines are dropped (their vertex is still
/// registered); duplicate edges collapse. Vertex ids are compacted to
/// [0, n) in first-appearance order. Lines with a third token are
/// rejected: the graph model is unweighted.
Graph load_edge_list(std::istream& in, LoadSummary* summary = nullptr);

/// Writes the graph back as an edge list over original ids, one "u v" per
/// line with u < v in compact order; isolated vertices are kept alive as
/// "u u" lines (which load_edge_list drops as edges but registers).
void write_edge_list(std::ostream& out, const Graph& g);

/// Two-column TSV: original_id <TAB> compact_id.
void write_remap_tsv(std::ostream& out, const Graph& g);

/// Column j of the transition matrix P = (I+A)(I+D)^-1: probability
/// 1/(1+deg(j)) on j itself and on each neighbor of j, sorted by vertex.
std::vector<std::pair<VertexId, double>> transition_column(const Graph& g, VertexId j);

}  // namespace lrw
