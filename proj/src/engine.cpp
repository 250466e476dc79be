#include "lrw/engine.hpp"

#include <algorithm>
#include <cmath>

namespace lrw {

SparseProbVector walk_step(const Graph& g, const SparseProbVector& x) {
    std::vector<double> acc(g.vertex_count(), 0.0);
    std::vector<VertexId> touched;
    touched.reserve(x.size() * 4);
    for (const auto& [j, xj] : x) {
        double w = xj * (1.0 / (1.0 + static_cast<double>(g.degree(j))));
        if (acc[j] == 0.0) touched.push_back(j);
        acc[j] += w;
        for (VertexId nb : g.neighbors(j)) {
            if (acc[nb] == 0.0) touched.push_back(nb);
            acc[nb] += w;
        }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<SparseProbVector::Entry> entries;
    entries.reserve(touched.size());
    for (VertexId v : touched) entries.emplace_back(v, acc[v]);
    return SparseProbVector::from_sorted(std::move(entries));
}

SparseProbVector prune(SparseProbVector x, double epsilon) {
    if (x.empty() || epsilon <= 0.0) return x;
    std::vector<SparseProbVector::Entry> kept;
    kept.reserve(x.size());
    for (const auto& e : x)
        if (e.second >= epsilon) kept.push_back(e);
    if (kept.empty()) {
        // everything fell below the threshold; keep the natural attractor
        auto [v, _] = x.argmax();
        kept.emplace_back(v, 1.0);
    }
    return SparseProbVector::from_sorted(std::move(kept));
}

SparseProbVector inflate_normalize(SparseProbVector x, double r) {
    if (x.empty()) throw ParameterError("inflate on empty vector");
    if (!(r > 1.0)) throw ParameterError("inflation exponent r must exceed 1");
    std::vector<SparseProbVector::Entry> powered;
    powered.reserve(x.size());
    double sum = 0.0;
    bool square = (r == 2.0);
    for (const auto& [v, value] : x) {
        double p = square ? value * value : std::pow(value, r);
        if (p > 0.0) {  // tiny values can underflow to exact zero
            powered.emplace_back(v, p);
            sum += p;
        }
    }
    if (powered.empty() || sum <= 0.0) {
        auto [v, _] = x.argmax();
        return SparseProbVector::point_mass(v);
    }
    for (auto& [v, value] : powered) value /= sum;
    return SparseProbVector::from_sorted(std::move(powered));
}

WalkOutcome explore(const Graph& g, VertexId seed, const LrwParams& p,
                    const StepObserver& on_step) {
    g.degree(seed);  // range check

    WalkOutcome out;
    out.feature = SparseProbVector::point_mass(seed);
    for (int t = 1; t <= p.t_max; ++t) {
        SparseProbVector next = inflate_normalize(prune(walk_step(g, out.feature), p.epsilon), p.r);
        double delta = next.l2_distance(out.feature);
        out.feature = std::move(next);
        out.iterations = t;
        if (on_step) on_step(t, out.feature);
        if (delta < p.xi) {
            out.converged = true;
            break;
        }
    }
    return out;
}

}  // namespace lrw
