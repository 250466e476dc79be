#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lrw/graph.hpp"

namespace lrw {

/// Sparse nonnegative vector over vertices. Entries are sorted by vertex
/// id and strictly positive; zeros are removed, never stored. Used for
/// the walk state and the converged feature vectors. Normalization to
/// unit L1 mass is a pipeline-stage property, not a type invariant: the
/// pruning stage intentionally leaves the vector unnormalized.
class SparseProbVector {
public:
    using Entry = std::pair<VertexId, double>;

    SparseProbVector() = default;

    static SparseProbVector point_mass(VertexId v) {
        SparseProbVector x;
        x.entries_.emplace_back(v, 1.0);
        return x;
    }

    /// Builds from arbitrary entries: sorts by id, rejects duplicates and
    /// nonpositive values.
    static SparseProbVector from_entries(std::vector<Entry> entries);

    /// Trusted path for internal construction: entries must already be
    /// sorted by id, unique, and positive.
    static SparseProbVector from_sorted(std::vector<Entry> entries) {
        SparseProbVector x;
        x.entries_ = std::move(entries);
        return x;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    const std::vector<Entry>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Value at v, 0 if absent.
    double value_at(VertexId v) const;

    double l1_norm() const;

    /// Entry with the largest value; ties break toward the smallest id.
    /// Must not be called on an empty vector.
    Entry argmax() const;

    /// L2 distance over the union support.
    double l2_distance(const SparseProbVector& other) const;

    bool operator==(const SparseProbVector& other) const = default;

private:
    std::vector<Entry> entries_;
};

}  // namespace lrw
