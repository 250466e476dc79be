#include "lrw/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "lrw/error.hpp"
#include "lrw/rng.hpp"

namespace lrw {

namespace {

double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::size_t bounded(std::mt19937_64& engine, std::size_t n) {
    return static_cast<std::size_t>(engine() % n);
}

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

/// Integer power-law sampler on [lo, hi] with weight k^-exponent.
class PowerLawSampler {
public:
    PowerLawSampler(std::uint32_t lo, std::uint32_t hi, double exponent) : lo_(lo) {
        cumulative_.reserve(hi - lo + 1);
        double sum = 0.0;
        for (std::uint32_t k = lo; k <= hi; ++k) {
            sum += std::pow(static_cast<double>(k), -exponent);
            cumulative_.push_back(sum);
        }
    }

    std::uint32_t draw(std::mt19937_64& engine) const {
        double target = uniform01(engine) * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
        if (it == cumulative_.end()) --it;
        return lo_ + static_cast<std::uint32_t>(it - cumulative_.begin());
    }

private:
    std::uint32_t lo_;
    std::vector<double> cumulative_;
};

/// Pairs up stubs, rejecting pairs `bad` vetoes. A pair still bad after
/// 100 rapairings is dropped. Accepted pairs land in `edges` and the
/// edge-key set.
template <typename Veto>
void match_stubs(std::vector<VertexId> stubs, std::mt19937_64& engine,
                 std::unordered_set<std::uint64_t>& edge_keys,
                 std::vector<std::pair<VertexId, VertexId>>& edges, const Veto& bad) {
    for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[bounded(engine, i)]);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        VertexId a = stubs[i];
        bool placed = false;
        for (int attempt = 0; attempt < 100; ++attempt) {
            VertexId b = stubs[i + 1];
            if (a != b && !bad(a, b) && !edge_keys.count(edge_key(a, b))) {
                edge_keys.insert(edge_key(a, b));
                edges.emplace_back(a, b);
                placed = true;
                break;
            }
            if (i + 2 >= stubs.size()) break;  // nothing left to swap with
            std::size_t j = i + 2 + bounded(engine, stubs.size() - i - 2);
            std::swap(stubs[i + 1], stubs[j]);
        }
        (void)placed;  // unplaced pairs are dropped
    }
}

}  // namespace

PlantedProbabilities planted_probabilities(const PlantedPartitionSpec& spec) {
    if (spec.c < 2) throw ParameterError("cluster count c must be at least 2");
    if (spec.n < 2 || spec.n % spec.c != 0)
        throw ParameterError("cluster count c must divide the vertex count n");
    if (!(spec.q > 0.0)) throw ParameterError("ratio q must be positive");
    if (!(spec.d > 0.0)) throw ParameterError("expected degree d must be positive");

    double n = spec.n;
    double c = spec.c;
    double q = spec.q;
    double p = spec.d / (n - 1.0);
    PlantedProbabilities probs{};
    probs.intra = q * p * c * (n - 1.0) / ((q + 1.0) * (n - c));
    probs.inter = p * c * (n - 1.0) / (n * (q + 1.0) * (c - 1.0));
    if (probs.intra > 1.0)
        throw ParameterError("intra-cluster probability " + std::to_string(probs.intra) +
                             " exceeds 1; lower d or q");
    if (probs.inter > 1.0)
        throw ParameterError("inter-cluster probability " + std::to_string(probs.inter) +
                             " exceeds 1; lower d");
    return probs;
}

LabeledGraph generate_planted(const PlantedPartitionSpec& spec) {
    PlantedProbabilities probs = planted_probabilities(spec);
    std::uint32_t size = spec.n / spec.c;
    std::vector<std::uint32_t> labels(spec.n);
    for (VertexId v = 0; v < spec.n; ++v) labels[v] = v / size;

    auto engine = make_engine(spec.rng_seed, 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < spec.n; ++u) {
        for (VertexId v = u + 1; v < spec.n; ++v) {
            double p = labels[u] == labels[v] ? probs.intra : probs.inter;
            if (uniform01(engine) < p) edges.emplace_back(u, v);
        }
    }
    return {Graph::from_edges(spec.n, std::move(edges)), std::move(labels)};
}

LabeledGraph generate_powerlaw(const PowerLawSpec& spec) {
    if (spec.degree_min < 1) throw ParameterError("degree_min must be at least 1");
    if (spec.degree_min > spec.degree_max || spec.degree_max >= spec.n)
        throw ParameterError("need degree_min <= degree_max < n");
    if (spec.cluster_min > spec.cluster_max || spec.cluster_max > spec.n)
        throw ParameterError("need cluster_min <= cluster_max <= n");
    if (spec.cluster_min < 1) throw ParameterError("cluster_min must be at least 1");
    if (!(spec.q > 0.0)) throw ParameterError("ratio q must be positive");

    auto engine = make_engine(spec.rng_seed, 0);

    PowerLawSampler degree_sampler(spec.degree_min, spec.degree_max, spec.exponent_degree);
    std::vector<std::uint32_t> degree(spec.n);
    for (auto& k : degree) k = degree_sampler.draw(engine);

    PowerLawSampler size_sampler(spec.cluster_min, spec.cluster_max, spec.exponent_size);
    std::vector<std::uint32_t> sizes;
    std::uint32_t covered = 0;
    int rejected = 0;
    while (covered < spec.n) {
        std::uint32_t s = size_sampler.draw(engine);
        std::uint32_t remaining = spec.n - covered;
        if (s >= remaining) {
            s = remaining;  // clip the last size
        } else if (remaining - s < spec.cluster_min) {
            // accepting would leave a tail no draw could ever cover
            if (++rejected > 100000)
                throw ParameterError("cluster sizes cannot tile n within the given bounds");
            continue;
        }
        sizes.push_back(s);
        covered += s;
    }

    // intra/inter split per vertex
    std::vector<std::uint32_t> k_in(spec.n), k_out(spec.n);
    for (VertexId v = 0; v < spec.n; ++v) {
        k_in[v] = static_cast<std::uint32_t>(
            std::llround(static_cast<double>(degree[v]) * spec.q / (spec.q + 1.0)));
        k_in[v] = std::min(k_in[v], degree[v]);
        k_out[v] = degree[v] - k_in[v];
    }

    // capacity-aware assignment: vertices with the largest intra demand
    // pick first, uniformly among clusters that still have room and are
    // big enough to host their intra neighbors
    std::vector<VertexId> order(spec.n);
    for (VertexId v = 0; v < spec.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (k_in[a] != k_in[b]) return k_in[a] > k_in[b];
        return a < b;
    });
    std::vector<std::uint32_t> free_slots = sizes;
    std::vector<std::uint32_t> labels(spec.n);
    std::vector<std::uint32_t> feasible;
    for (VertexId v : order) {
        feasible.clear();
        for (std::uint32_t cl = 0; cl < sizes.size(); ++cl)
            if (free_slots[cl] > 0 && sizes[cl] > k_in[v]) feasible.push_back(cl);
        if (feasible.empty()) {
            // even a maximal cluster could not host this many distinct neighbors
            if (k_in[v] >= spec.cluster_max)
                throw ParameterError("vertex with " + std::to_string(k_in[v]) +
                                     " intra-cluster stubs fits no remaining cluster");
            // the sampled sizes ran out of big clusters; settle for the largest
            // open one and let stub matching drop whatever cannot pair up
            std::uint32_t best = 0;
            bool found = false;
            for (std::uint32_t cl = 0; cl < sizes.size(); ++cl)
                if (free_slots[cl] > 0 && (!found || sizes[cl] > sizes[best])) {
                    best = cl;
                    found = true;
                }
            feasible.push_back(best);
        }
        std::uint32_t cl = feasible[bounded(engine, feasible.size())];
        labels[v] = cl;
        --free_slots[cl];
    }

    // parity repair: intra stubs must pair up inside each cluster
    std::vector<std::vector<VertexId>> by_cluster(sizes.size());
    for (VertexId v = 0; v < spec.n; ++v) by_cluster[labels[v]].push_back(v);
    for (const auto& members : by_cluster) {
        std::uint64_t stub_sum = 0;
        for (VertexId v : members) stub_sum += k_in[v];
        if (stub_sum % 2 == 0) continue;
        VertexId fix = members.front();
        for (VertexId v : members)
            if (k_in[v] > k_in[fix]) fix = v;
        --k_in[fix];
        ++k_out[fix];
    }
    std::uint64_t out_sum = 0;
    for (VertexId v = 0; v < spec.n; ++v) out_sum += k_out[v];
    if (out_sum % 2 == 1) {
        VertexId fix = 0;
        for (VertexId v = 0; v < spec.n; ++v)
            if (k_out[v] > k_out[fix]) fix = v;
        --k_out[fix];  // one stub short; realized degree undershoots
    }

    std::unordered_set<std::uint64_t> edge_keys;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& members : by_cluster) {
        std::vector<VertexId> stubs;
        for (VertexId v : members)
            stubs.insert(stubs.end(), k_in[v], v);
        match_stubs(std::move(stubs), engine, edge_keys, edges,
                    [](VertexId, VertexId) { return false; });
    }
    std::vector<VertexId> stubs;
    for (VertexId v = 0; v < spec.n; ++v)
        stubs.insert(stubs.end(), k_out[v], v);
    match_stubs(std::move(stubs), engine, edge_keys, edges,
                [&](VertexId a, VertexId b) { return labels[a] == labels[b]; });

    return {Graph::from_edges(spec.n, std::move(edges)), std::move(labels)};
}

std::vector<std::vector<VertexId>> communities_from_labels(
    const std::vector<std::uint32_t>& labels) {
    std::uint32_t max_label = 0;
    for (std::uint32_t l : labels) max_label = std::max(max_label, l);
    std::vector<std::vector<VertexId>> communities(labels.empty() ? 0 : max_label + 1);
    for (VertexId v = 0; v < labels.size(); ++v) communities[labels[v]].push_back(v);
    std::erase_if(communities, [](const auto& c) { return c.empty(); });
    return communities;
}

}  // namespace lrw
