#pragma once

// Independent reference implementations the tests compare the library
// against. Everything here favors the most literal translation of the
// definitions over speed and shares no code with the library internals.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/params.hpp"
#include "lrw/sparse_vector.hpp"

namespace oracle {

/// Explicit dense transition matrix, P[row][col].
inline std::vector<std::vector<double>> dense_transition(const lrw::Graph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
    for (lrw::VertexId j = 0; j < n; ++j) {
        double value = 1.0 / (1.0 + static_cast<double>(g.degree(j)));
        p[j][j] = value;
        for (lrw::VertexId i : g.neighbors(j)) p[i][j] = value;
    }
    return p;
}

inline std::vector<double> dense_step(const std::vector<std::vector<double>>& p,
                                      const std::vector<double>& x) {
    std::size_t n = x.size();
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += p[i][j] * x[j];
    return y;
}

inline void dense_prune(std::vector<double>& x, double epsilon) {
    for (double& v : x)
        if (v < epsilon) v = 0.0;
}

inline void dense_inflate_normalize(std::vector<double>& x, double r) {
    double sum = 0.0;
    for (double& v : x) {
        v = std::pow(v, r);
        sum += v;
    }
    for (double& v : x) v /= sum;
}

struct DenseWalk {
    std::vector<std::vector<double>> states;  ///< post-normalize state per iteration
    int iterations = 0;
    bool converged = false;
};

/// The walk recurrence written out on dense vectors, step by step.
inline DenseWalk dense_explore(const lrw::Graph& g, lrw::VertexId seed,
                               const lrw::LrwParams& params) {
    auto p = dense_transition(g);
    std::vector<double> x(g.vertex_count(), 0.0);
    x[seed] = 1.0;
    DenseWalk walk;
    for (int t = 1; t <= params.t_max; ++t) {
        std::vector<double> next = dense_step(p, x);
        dense_prune(next, params.epsilon);
        dense_inflate_normalize(next, params.r);
        double delta2 = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i)
            delta2 += (next[i] - x[i]) * (next[i] - x[i]);
        x = next;
        walk.states.push_back(x);
        walk.iterations = t;
        if (std::sqrt(delta2) < params.xi) {
            walk.converged = true;
            break;
        }
    }
    return walk;
}

inline double max_abs_diff(const std::vector<double>& dense, const lrw::SparseProbVector& sparse) {
    double worst = 0.0;
    for (lrw::VertexId v = 0; v < dense.size(); ++v)
        worst = std::max(worst, std::abs(dense[v] - sparse.value_at(v)));
    return worst;
}

/// Union-find closure of the pairwise overlap predicate
/// |a ∩ b| > min(|a|,|b|)/2 over the initial sets.
inline std::vector<std::vector<std::size_t>> merge_closure(
    const std::vector<std::set<lrw::VertexId>>& sets) {
    std::vector<std::size_t> parent(sets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            std::vector<lrw::VertexId> common;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                                  std::back_inserter(common));
            if (2 * common.size() > std::min(sets[i].size(), sets[j].size()))
                parent[find(i)] = find(j);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < sets.size(); ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> result;
    for (auto& [root, members] : groups) result.push_back(members);
    return result;
}

/// Conductance by walking the full edge list.
inline double conductance_brute(const lrw::Graph& g, const std::vector<lrw::VertexId>& cluster) {
    std::set<lrw::VertexId> in(cluster.begin(), cluster.end());
    std::uint64_t cut = 0, inside_degree = 0, outside_degree = 0;
    for (lrw::VertexId u = 0; u < g.vertex_count(); ++u) {
        for (lrw::VertexId v : g.neighbors(u)) {
            if (v < u) continue;  // each undirected edge once
            bool iu = in.count(u), iv = in.count(v);
            if (iu != iv) ++cut;
            inside_degree += (iu ? 1 : 0) + (iv ? 1 : 0);
            outside_degree += (iu ? 0 : 1) + (iv ? 0 : 1);
        }
    }
    std::uint64_t denom = std::min(inside_degree, outside_degree);
    if (denom == 0) return 0.0;
    return static_cast<double>(cut) / static_cast<double>(denom);
}

/// Exact Rand index over every pair of vertices listed in the truth,
/// non-overlapping communities only.
inline double rand_exact(const std::map<std::uint64_t, std::uint64_t>& pred_label,
                         const std::map<std::uint64_t, std::uint64_t>& truth_label) {
    std::vector<std::uint64_t> vertices;
    for (const auto& [v, label] : truth_label)
        if (pred_label.count(v)) vertices.push_back(v);
    std::uint64_t agree = 0, total = 0;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            bool same_truth = truth_label.at(vertices[a]) == truth_label.at(vertices[b]);
            bool same_pred = pred_label.at(vertices[a]) == pred_label.at(vertices[b]);
            if (same_truth == same_pred) ++agree;
            ++total;
        }
    }
    return static_cast<double>(agree) / static_cast<double>(total);
}

/// Straight-line evaluation of the NMI formula from a confusion matrix.
inline double nmi_straightline(const std::vector<std::vector<std::uint64_t>>& counts) {
    std::size_t rows = counts.size();
    std::size_t cols = counts.empty() ? 0 : counts[0].size();
    double n = 0.0;
    std::vector<double> row(rows, 0.0), col(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            row[i] += static_cast<double>(counts[i][j]);
            col[j] += static_cast<double>(counts[i][j]);
            n += static_cast<double>(counts[i][j]);
        }
    }
    double num = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (counts[i][j] > 0)
                num += static_cast<double>(counts[i][j]) *
                       std::log(static_cast<double>(counts[i][j]) * n / (row[i] * col[j]));
    num *= -2.0;
    double den = 0.0;
    for (double v : row)
        if (v > 0) den += v * std::log(v / n);
    for (double v : col)
        if (v > 0) den += v * std::log(v / n);
    return num / den;
}

}  // namespace oracle
