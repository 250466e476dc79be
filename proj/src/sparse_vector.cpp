#include "lrw/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

#include "lrw/error.hpp"

namespace lrw {

SparseProbVector SparseProbVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i].second > 0.0))
            throw ParameterError("sparse vector entries must be positive");
        if (i > 0 && entries[i].first == entries[i - 1].first)
            throw ParameterError("duplicate vertex " + std::to_string(entries[i].first) +
                                 " in sparse vector");
    }
    return from_sorted(std::move(entries));
}

double SparseProbVector::value_at(VertexId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VertexId id) { return e.first < id; });
    if (it == entries_.end() || it->first != v) return 0.0;
    return it->second;
}

double SparseProbVector::l1_norm() const {
    double sum = 0.0;
    for (const auto& [v, x] : entries_) sum += x;
    return sum;
}

SparseProbVector::Entry SparseProbVector::argmax() const {
    if (entries_.empty()) throw ParameterError("argmax of empty vector");
    Entry best = entries_.front();
    for (const auto& e : entries_)
        if (e.second > best.second) best = e;  // ties keep the smallest id
    return best;
}

double SparseProbVector::l2_distance(const SparseProbVector& other) const {
    double sum = 0.0;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        double diff;
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            diff = a->second;
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            diff = b->second;
            ++b;
        } else {
            diff = a->second - b->second;
            ++a;
            ++b;
        }
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

}  // namespace lrw
