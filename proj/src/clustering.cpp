#include "lrw/clustering.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

#include "lrw/parallel.hpp"
#include "lrw/rng.hpp"

namespace lrw {

namespace {

void union_into(std::vector<VertexId>& dst, const std::vector<VertexId>& src) {
    std::vector<VertexId> merged;
    merged.reserve(dst.size() + src.size());
    std::set_union(dst.begin(), dst.end(), src.begin(), src.end(), std::back_inserter(merged));
    dst = std::move(merged);
}

void insert_sorted(std::vector<VertexId>& dst, VertexId v) {
    auto it = std::lower_bound(dst.begin(), dst.end(), v);
    if (it == dst.end() || *it != v) dst.insert(it, v);
}

std::size_t intersection_size(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

void merge_entries(ClusterEntry& into, ClusterEntry& from) {
    union_into(into.members, from.members);
    union_into(into.significant, from.significant);
    for (const auto& [v, value] : from.evidence) {
        auto [it, inserted] = into.evidence.emplace(v, value);
        if (!inserted && value > it->second) it->second = value;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

AttractorSplit attractor_and_significant(const SparseProbVector& x, double tau) {
    if (x.empty()) throw ParameterError("attractor of empty feature vector");
    if (!(tau > 0.0 && tau < 1.0)) throw ParameterError("tau must lie in (0, 1)");
    auto [m, xm] = x.argmax();
    AttractorSplit split{m, {}};
    double bar = tau * xm;
    for (const auto& [v, value] : x)
        if (value > bar) split.significant.push_back(v);
    return split;
}

void merge_into_dictionary(ClusterDict& dict, VertexId seed, const SparseProbVector& feature,
                           double tau) {
    AttractorSplit split = attractor_and_significant(feature, tau);
    ClusterEntry& entry = dict[split.attractor];
    insert_sorted(entry.members, seed);
    union_into(entry.significant, split.significant);
    for (VertexId v : split.significant) {
        double value = feature.value_at(v);
        auto [it, inserted] = entry.evidence.emplace(v, value);
        if (!inserted && value > it->second) it->second = value;
    }
    double at_seed = feature.value_at(seed);
    auto [it, inserted] = entry.evidence.emplace(seed, at_seed);
    if (!inserted && at_seed > it->second) it->second = at_seed;
}

void merge_overlapping_clusters(ClusterDict& dict) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it1 = dict.begin(); it1 != dict.end(); ++it1) {
            for (auto it2 = std::next(it1); it2 != dict.end();) {
                std::size_t overlap = intersection_size(it1->second.significant,
                                                        it2->second.significant);
                std::size_t smaller = std::min(it1->second.significant.size(),
                                               it2->second.significant.size());
                if (2 * overlap > smaller) {
                    merge_entries(it1->second, it2->second);
                    it2 = dict.erase(it2);
                    changed = true;
                } else {
                    ++it2;
                }
            }
        }
    }
}

Clustering resolve_overlaps(const ClusterDict& dict, VertexId n) {
    // folded[k] = members union significant of the k-th entry
    std::vector<VertexId> keys;
    std::vector<std::vector<VertexId>> folded;
    keys.reserve(dict.size());
    folded.reserve(dict.size());
    for (const auto& [key, entry] : dict) {
        keys.push_back(key);
        std::vector<VertexId> covered = entry.members;
        union_into(covered, entry.significant);
        folded.push_back(std::move(covered));
    }

    std::vector<std::uint32_t> choice(n, kUnassigned);
    std::vector<double> best(n, 0.0);
    for (std::size_t k = 0; k < folded.size(); ++k) {
        const auto& evidence = dict.at(keys[k]).evidence;
        for (VertexId v : folded[k]) {
            auto it = evidence.find(v);
            double value = it == evidence.end() ? 0.0 : it->second;
            // keys ascend, so strict > keeps the smallest attractor on ties
            if (choice[v] == kUnassigned || value > best[v]) {
                choice[v] = static_cast<std::uint32_t>(k);
                best[v] = value;
            }
        }
    }

    Clustering result;
    result.labels.assign(n, kUnassigned);
    std::vector<std::uint32_t> cluster_index(folded.size(), kUnassigned);
    for (VertexId v = 0; v < n; ++v) {
        if (choice[v] == kUnassigned) continue;  // singleton, handled below
        std::uint32_t k = choice[v];
        if (cluster_index[k] == kUnassigned) {
            cluster_index[k] = static_cast<std::uint32_t>(result.clusters.size());
            result.clusters.emplace_back();
            result.attractors.push_back(keys[k]);
        }
        result.labels[v] = cluster_index[k];
        result.clusters[cluster_index[k]].push_back(v);
    }
    for (auto& cluster : result.clusters) std::sort(cluster.begin(), cluster.end());

    // order by attractor id, then append singletons for uncovered vertices
    std::vector<std::size_t> order(result.clusters.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return result.attractors[a] < result.attractors[b];
    });
    Clustering sorted;
    sorted.labels.assign(n, kUnassigned);
    for (std::size_t i : order) {
        for (VertexId v : result.clusters[i])
            sorted.labels[v] = static_cast<std::uint32_t>(sorted.clusters.size());
        sorted.clusters.push_back(std::move(result.clusters[i]));
        sorted.attractors.push_back(result.attractors[i]);
    }
    for (VertexId v = 0; v < n; ++v) {
        if (sorted.labels[v] != kUnassigned) continue;
        sorted.labels[v] = static_cast<std::uint32_t>(sorted.clusters.size());
        sorted.clusters.push_back({v});
        sorted.attractors.push_back(v);
    }
    return sorted;
}

Clustering cluster_global(const Graph& g, const LrwParams& p, int threads,
                          std::uint64_t rng_seed, bool skip_merge, const ExploreHooks& hooks,
                          PhaseTimes* times) {
    p.validate();
    VertexId n = g.vertex_count();
    PhaseTimes phase;
    ClusterDict dict;
    std::vector<VertexId> remaining(n);
    for (VertexId v = 0; v < n; ++v) remaining[v] = v;

    std::uint64_t round = 0;
    while (!remaining.empty()) {
        std::size_t batch = p.batch_size != 0
                                ? p.batch_size
                                : std::max<std::size_t>(1024, (remaining.size() + 99) / 100);
        std::vector<VertexId> batch_seeds;
        if (remaining.size() <= batch) {
            batch_seeds = remaining;
        } else {
            // partial shuffle, then restore ascending order for merging
            auto engine = make_engine(rng_seed, round);
            std::vector<VertexId> pool = remaining;
            for (std::size_t i = 0; i < batch; ++i) {
                std::size_t j = i + static_cast<std::size_t>(engine() % (pool.size() - i));
                std::swap(pool[i], pool[j]);
            }
            batch_seeds.assign(pool.begin(), pool.begin() + batch);
            std::sort(batch_seeds.begin(), batch_seeds.end());
        }

        auto explore_start = std::chrono::steady_clock::now();
        std::vector<WalkOutcome> outcomes(batch_seeds.size());
        parallel_for_index(batch_seeds.size(), threads, [&](std::size_t i) {
            outcomes[i] = explore(g, batch_seeds[i], p, hooks.on_step);
            if (hooks.on_walk) hooks.on_walk(batch_seeds[i], outcomes[i]);
        });
        phase.explore_seconds += seconds_since(explore_start);

        auto merge_start = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < batch_seeds.size(); ++i)
            merge_into_dictionary(dict, batch_seeds[i], outcomes[i].feature, p.tau);
        if (!skip_merge) merge_overlapping_clusters(dict);
        for (auto& [key, entry] : dict) union_into(entry.members, entry.significant);

        std::vector<bool> covered(n, false);
        for (const auto& [key, entry] : dict)
            for (VertexId v : entry.members) covered[v] = true;
        std::size_t before = remaining.size();
        std::erase_if(remaining, [&](VertexId v) { return covered[v]; });
        assert(remaining.size() < before);
        (void)before;
        phase.merge_seconds += seconds_since(merge_start);
        ++round;
    }

    if (times) *times = phase;
    return resolve_overlaps(dict, n);
}

std::vector<VertexId> cluster_local(const Graph& g, VertexId start, const LrwParams& p,
                                    int threads, const ExploreHooks& hooks,
                                    LocalDiagnostics* diag) {
    p.validate();
    WalkOutcome first = explore(g, start, p, hooks.on_step);
    if (hooks.on_walk) hooks.on_walk(start, first);

    double bar = p.eta * first.feature.argmax().second;
    std::vector<VertexId> core, fringe;
    for (const auto& [v, value] : first.feature)
        (value >= bar ? core : fringe).push_back(v);
    if (diag) *diag = {core.size(), fringe.size()};

    std::vector<VertexId> to_explore = fringe;
    std::erase(to_explore, start);  // already walked

    std::vector<WalkOutcome> outcomes(to_explore.size());
    parallel_for_index(to_explore.size(), threads, [&](std::size_t i) {
        outcomes[i] = explore(g, to_explore[i], p, hooks.on_step);
        if (hooks.on_walk) hooks.on_walk(to_explore[i], outcomes[i]);
    });

    ClusterDict dict;
    merge_into_dictionary(dict, start, first.feature, p.tau);
    for (std::size_t i = 0; i < to_explore.size(); ++i)
        merge_into_dictionary(dict, to_explore[i], outcomes[i].feature, p.tau);
    merge_overlapping_clusters(dict);

    // member sets partition the explored seeds; find the one with the start
    std::vector<VertexId> result = core;
    for (const auto& [key, entry] : dict) {
        if (std::binary_search(entry.members.begin(), entry.members.end(), start)) {
            union_into(result, entry.members);
            return result;
        }
    }
    throw std::logic_error("seed vertex missing from its own dictionary entry");
}

}  // namespace lrw
