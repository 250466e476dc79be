#include "lrw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "lrw/error.hpp"
#include "lrw/rng.hpp"

namespace lrw {

namespace {

// vertex -> first community listing it
std::unordered_map<std::uint64_t, std::uint32_t> single_membership(const CommunityList& list) {
    std::unordered_map<std::uint64_t, std::uint32_t> membership;
    for (std::uint32_t i = 0; i < list.size(); ++i)
        for (std::uint64_t v : list[i]) membership.emplace(v, i);
    return membership;
}

std::size_t bounded(std::mt19937_64& engine, std::size_t n) {
    return static_cast<std::size_t>(engine() % n);
}

}  // namespace

ConfusionMatrix confusion_matrix(const CommunityList& pred, const CommunityList& truth) {
    auto pred_of = single_membership(pred);
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> truth_of;
    for (std::uint32_t j = 0; j < truth.size(); ++j)
        for (std::uint64_t v : truth[j]) truth_of[v].push_back(j);

    ConfusionMatrix cm;
    cm.counts.assign(pred.size(), std::vector<std::uint64_t>(truth.size(), 0));
    cm.row_sums.assign(pred.size(), 0);
    cm.col_sums.assign(truth.size(), 0);
    for (const auto& [v, cols] : truth_of) {
        auto it = pred_of.find(v);
        if (it == pred_of.end()) continue;  // not covered by the prediction
        ++cm.total;
        for (std::uint32_t j : cols) {
            ++cm.counts[it->second][j];
            ++cm.row_sums[it->second];
            ++cm.col_sums[j];
        }
    }
    return cm;
}

double nmi(const ConfusionMatrix& cm, std::ostream* warnings) {
    double n = static_cast<double>(cm.total);
    double numerator = 0.0;
    for (std::size_t i = 0; i < cm.counts.size(); ++i) {
        for (std::size_t j = 0; j < cm.counts[i].size(); ++j) {
            double nij = static_cast<double>(cm.counts[i][j]);
            if (nij == 0.0) continue;
            double ni = static_cast<double>(cm.row_sums[i]);
            double nj = static_cast<double>(cm.col_sums[j]);
            numerator += nij * std::log(nij * n / (ni * nj));
        }
    }
    numerator *= -2.0;
    double denominator = 0.0;
    for (std::uint64_t ni : cm.row_sums)
        if (ni > 0) denominator += static_cast<double>(ni) * std::log(static_cast<double>(ni) / n);
    for (std::uint64_t nj : cm.col_sums)
        if (nj > 0) denominator += static_cast<double>(nj) * std::log(static_cast<double>(nj) / n);
    if (denominator == 0.0) {
        if (warnings)
            *warnings << "warning: NMI undefined (both sides trivial); reporting 0\n";
        return 0.0;
    }
    return numerator / denominator;
}

double nmi(const CommunityList& pred, const CommunityList& truth, std::ostream* warnings) {
    return nmi(confusion_matrix(pred, truth), warnings);
}

double conductance(const Graph& g, const std::vector<VertexId>& cluster) {
    if (cluster.empty()) throw ParameterError("conductance of an empty cluster");
    std::vector<bool> in(g.vertex_count(), false);
    std::size_t distinct = 0;
    for (VertexId v : cluster) {
        if (v >= g.vertex_count())
            throw std::out_of_range("cluster vertex " + std::to_string(v) + " out of range");
        if (!in[v]) {
            in[v] = true;
            ++distinct;
        }
    }
    if (distinct == g.vertex_count())
        throw ParameterError("conductance of the whole vertex set is undefined");

    std::uint64_t volume = 0;
    std::uint64_t cut = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!in[v]) continue;
        volume += g.degree(v);
        for (VertexId nb : g.neighbors(v))
            if (!in[nb]) ++cut;
    }
    std::uint64_t complement_volume = 2 * static_cast<std::uint64_t>(g.edge_count()) - volume;
    std::uint64_t denom = std::min(volume, complement_volume);
    if (denom == 0) return 0.0;  // no edges touch the smaller side, so no cut either
    return static_cast<double>(cut) / static_cast<double>(denom);
}

double mean_conductance(const Graph& g, const std::vector<std::vector<VertexId>>& clusters,
                        std::ostream* warnings) {
    double sum = 0.0;
    std::size_t counted = 0;
    for (const auto& cluster : clusters) {
        if (cluster.empty()) continue;
        std::unordered_set<VertexId> distinct(cluster.begin(), cluster.end());
        if (distinct.size() == g.vertex_count()) {
            if (warnings)
                *warnings << "warning: cluster spans all vertices; skipped in mean conductance\n";
            continue;
        }
        sum += conductance(g, cluster);
        ++counted;
    }
    if (counted == 0) {
        if (warnings)
            *warnings << "warning: no proper cluster to average; mean conductance undefined\n";
        return std::numeric_limits<double>::quiet_NaN();
    }
    return sum / static_cast<double>(counted);
}

double jaccard(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.empty() || b.empty()) throw ParameterError("jaccard of an empty set");
    std::vector<std::uint64_t> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    std::sort(sb.begin(), sb.end());
    sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
    std::size_t common = 0;
    auto i = sa.begin();
    auto j = sb.begin();
    while (i != sa.end() && j != sb.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    std::size_t total = sa.size() + sb.size() - common;
    return static_cast<double>(common) / static_cast<double>(total);
}

double rand_index_sampled(const CommunityList& pred, const CommunityList& truth,
                          std::uint64_t pairs_per_class, std::uint64_t rng_seed) {
    if (pairs_per_class == 0) throw ParameterError("pairs_per_class must be positive");
    auto pred_of = single_membership(pred);

    // evaluated vertices: in the truth and covered by the prediction
    std::unordered_map<std::uint64_t, std::uint32_t> truth_index;
    std::vector<std::uint64_t> vertices;
    for (const auto& community : truth) {
        for (std::uint64_t v : community) {
            if (!pred_of.count(v)) continue;
            if (truth_index.emplace(v, static_cast<std::uint32_t>(vertices.size())).second)
                vertices.push_back(v);
        }
    }
    std::size_t k = vertices.size();
    if (k < 2) throw ParameterError("need at least two evaluated vertices");

    auto pair_key = [k](std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * k + b;
    };

    // positive pairs: same truth community, deduplicated across overlaps
    std::unordered_set<std::uint64_t> positive_keys;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> positives;
    for (const auto& community : truth) {
        std::vector<std::uint32_t> idx;
        for (std::uint64_t v : community) {
            auto it = truth_index.find(v);
            if (it != truth_index.end()) idx.push_back(it->second);
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (positive_keys.insert(pair_key(idx[a], idx[b])).second)
                    positives.emplace_back(idx[a], idx[b]);
    }
    std::uint64_t total_pairs = static_cast<std::uint64_t>(k) * (k - 1) / 2;
    std::uint64_t negative_count = total_pairs - positives.size();
    if (positives.empty()) throw ParameterError("no vertex pair shares a truth community");
    if (negative_count == 0) throw ParameterError("every vertex pair shares a truth community");

    auto same_pred = [&](std::uint32_t a, std::uint32_t b) {
        return pred_of.at(vertices[a]) == pred_of.at(vertices[b]);
    };

    auto engine = make_engine(rng_seed, 0);
    std::uint64_t correct = 0;
    std::uint64_t taken = 0;

    if (pairs_per_class >= positives.size()) {
        for (const auto& [a, b] : positives)
            if (same_pred(a, b)) ++correct;
        taken += positives.size();
    } else {
        for (std::uint64_t i = 0; i < pairs_per_class; ++i) {
            std::size_t j = i + bounded(engine, positives.size() - i);
            std::swap(positives[i], positives[j]);
            if (same_pred(positives[i].first, positives[i].second)) ++correct;
        }
        taken += pairs_per_class;
    }

    if (pairs_per_class >= negative_count) {
        for (std::uint32_t a = 0; a < k; ++a)
            for (std::uint32_t b = a + 1; b < k; ++b)
                if (!positive_keys.count(pair_key(a, b)) && !same_pred(a, b)) ++correct;
        taken += negative_count;
    } else {
        std::unordered_set<std::uint64_t> seen;
        std::uint64_t sampled = 0;
        while (sampled < pairs_per_class) {
            std::uint32_t a = static_cast<std::uint32_t>(bounded(engine, k));
            std::uint32_t b = static_cast<std::uint32_t>(bounded(engine, k));
            if (a == b) continue;
            std::uint64_t key = pair_key(a, b);
            if (positive_keys.count(key) || !seen.insert(key).second) continue;
            if (!same_pred(a, b)) ++correct;
            ++sampled;
        }
        taken += pairs_per_class;
    }

    return static_cast<double>(correct) / static_cast<double>(taken);
}

}  // namespace lrw
