#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "karate.hpp"
#include "lrw/metrics.hpp"
#include "lrw/rng.hpp"
#include "oracle.hpp"

using namespace lrw;

namespace {

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out(hi - lo);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

}  // namespace

TEST_CASE("confusion_matrix basics and overlap counting") {
    SUBCASE("clean 2x2") {
        CommunityList pred = {range(0, 4), range(4, 8)};
        CommunityList truth = {range(0, 4), range(4, 8)};
        auto cm = confusion_matrix(pred, truth);
        CHECK(cm.total == 8);
        CHECK(cm.counts[0][0] == 4);
        CHECK(cm.counts[0][1] == 0);
        CHECK(cm.counts[1][1] == 4);
        CHECK(cm.row_sums == std::vector<std::uint64_t>{4, 4});
        CHECK(cm.col_sums == std::vector<std::uint64_t>{4, 4});
    }
    SUBCASE("a vertex in two truth communities counts in both columns") {
        CommunityList pred = {{0, 1}, {2, 3}};
        CommunityList truth = {{0, 1, 2}, {2, 3}};
        auto cm = confusion_matrix(pred, truth);
        CHECK(cm.total == 4);  // distinct vertices
        CHECK(cm.counts[0][0] == 2);
        CHECK(cm.counts[0][1] == 0);
        CHECK(cm.counts[1][0] == 1);
        CHECK(cm.counts[1][1] == 2);
        CHECK(cm.col_sums == std::vector<std::uint64_t>{3, 2});
        CHECK(cm.row_sums == std::vector<std::uint64_t>{2, 3});
    }
    SUBCASE("vertices on one side only are ignored") {
        CommunityList pred = {{0, 1}, {2, 3}, {99}};
        CommunityList truth = {{0, 1, 50}, {2, 3}};
        auto cm = confusion_matrix(pred, truth);
        CHECK(cm.total == 4);
        CHECK(cm.row_sums == std::vector<std::uint64_t>{2, 2, 0});
        CHECK(cm.col_sums == std::vector<std::uint64_t>{2, 2});
    }
}

TEST_CASE("nmi fixed values") {
    SUBCASE("identical nontrivial partitions score 1") {
        CommunityList sides = {range(0, 10), range(10, 30), range(30, 35)};
        CHECK(nmi(sides, sides) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("single predicted cluster carries no information") {
        CommunityList pred = {range(0, 20)};
        CommunityList truth = {range(0, 10), range(10, 20)};
        CHECK(nmi(pred, truth) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("both sides trivial is undefined, reported as 0 with a warning") {
        CommunityList one = {range(0, 20)};
        std::ostringstream warnings;
        CHECK(nmi(one, one, &warnings) == 0.0);
        CHECK(warnings.str().find("NMI undefined") != std::string::npos);
    }
    SUBCASE("30/2 swap case against the straight-line formula") {
        CommunityList pred = {{}, {}};
        CommunityList truth = {range(0, 32), range(32, 64)};
        for (std::uint64_t v = 0; v < 30; ++v) pred[0].push_back(v);
        pred[0].push_back(32);
        pred[0].push_back(33);
        pred[1].push_back(30);
        pred[1].push_back(31);
        for (std::uint64_t v = 34; v < 64; ++v) pred[1].push_back(v);

        double value = nmi(pred, truth);
        CHECK(value == doctest::Approx(0.662711).epsilon(1e-5));
        CHECK(std::abs(value - oracle::nmi_straightline({{30, 2}, {2, 30}})) < 1e-10);

        ConfusionMatrix cm;
        cm.counts = {{30, 2}, {2, 30}};
        cm.row_sums = {32, 32};
        cm.col_sums = {32, 32};
        cm.total = 64;
        CHECK(std::abs(nmi(cm) - value) < 1e-12);
    }
    SUBCASE("community order does not matter") {
        CommunityList pred = {range(0, 12), range(12, 20)};
        CommunityList truth = {range(0, 10), range(10, 20)};
        CommunityList pred_flipped = {pred[1], pred[0]};
        CommunityList truth_flipped = {truth[1], truth[0]};
        CHECK(nmi(pred, truth) ==
              doctest::Approx(nmi(pred_flipped, truth_flipped)).epsilon(1e-12));
    }
    SUBCASE("uncovered truth communities do not change a perfect score") {
        CommunityList pred = {{0, 1}, {2, 3}};
        CommunityList truth = {{0, 1}, {2, 3}, {99, 98}};
        CHECK(nmi(pred, truth) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("nmi against the straight-line formula on random confusion matrices") {
    auto engine = make_engine(2024, 0);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 2 + engine() % 4;
        std::size_t cols = 2 + engine() % 4;
        std::vector<std::vector<std::uint64_t>> counts(rows, std::vector<std::uint64_t>(cols));
        ConfusionMatrix cm;
        cm.row_sums.assign(rows, 0);
        cm.col_sums.assign(cols, 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                counts[i][j] = engine() % 20;
                cm.row_sums[i] += counts[i][j];
                cm.col_sums[j] += counts[i][j];
                cm.total += counts[i][j];
            }
        cm.counts = counts;
        if (cm.total == 0) continue;
        CHECK(std::abs(nmi(cm) - oracle::nmi_straightline(counts)) < 1e-10);
    }
}

TEST_CASE("conductance fixed values") {
    Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(conductance(triangle, {0}) == doctest::Approx(1.0));

    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(conductance(two, {0, 1, 2}) == 0.0);

    // one cut edge between two triangles
    Graph bridged = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK(conductance(bridged, {0, 1, 2}) == doctest::Approx(1.0 / 7.0));

    // the complement holds only an isolated vertex, so the denominator is zero
    Graph isolated_out = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(conductance(isolated_out, {0, 1, 2}) == 0.0);
}

TEST_CASE("conductance contract") {
    Graph g = fixtures::karate_graph();
    CHECK_THROWS_AS(conductance(g, {}), ParameterError);
    std::vector<VertexId> everything(34);
    std::iota(everything.begin(), everything.end(), 0);
    CHECK_THROWS_AS(conductance(g, everything), ParameterError);
    CHECK_THROWS_AS(conductance(g, {99}), std::out_of_range);
    // duplicates inside the cluster do not change the set
    CHECK(conductance(g, {0, 0, 1}) == doctest::Approx(conductance(g, {0, 1})));
}

TEST_CASE("conductance matches brute force and its complement on random subsets") {
    Graph g = fixtures::karate_graph();
    auto engine = make_engine(99, 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<VertexId> subset;
        for (VertexId v = 0; v < 34; ++v)
            if (engine() % 2) subset.push_back(v);
        if (subset.empty() || subset.size() == 34) continue;
        std::vector<VertexId> complement;
        for (VertexId v = 0; v < 34; ++v)
            if (!std::binary_search(subset.begin(), subset.end(), v)) complement.push_back(v);
        double phi = conductance(g, subset);
        CHECK(phi == doctest::Approx(oracle::conductance_brute(g, subset)).epsilon(1e-12));
        CHECK(phi == doctest::Approx(conductance(g, complement)).epsilon(1e-12));
    }
}

TEST_CASE("mean_conductance") {
    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(mean_conductance(two, {{0, 1, 2}, {3, 4, 5}}) == 0.0);

    std::ostringstream warnings;
    std::vector<VertexId> everything = {0, 1, 2, 3, 4, 5};
    double value = mean_conductance(two, {everything}, &warnings);
    CHECK(std::isnan(value));
    CHECK(warnings.str().find("spans all vertices") != std::string::npos);
    CHECK(warnings.str().find("undefined") != std::string::npos);
}

TEST_CASE("jaccard") {
    CHECK(jaccard({1, 2, 3}, {2, 3, 4}) == doctest::Approx(0.5));
    CHECK(jaccard({1, 2}, {1, 2}) == 1.0);
    CHECK(jaccard({1, 2}, {3, 4}) == 0.0);
    CHECK(jaccard({1, 2, 3}, {2, 3, 4}) == jaccard({2, 3, 4}, {1, 2, 3}));
    CHECK(jaccard({1, 1, 2}, {2}) == doctest::Approx(0.5));  // duplicates collapse
    CHECK_THROWS_AS(jaccard({}, {1}), ParameterError);
    CHECK_THROWS_AS(jaccard({1}, {}), ParameterError);
}

TEST_CASE("rand_index_sampled") {
    CommunityList truth = {range(0, 10), range(10, 20)};
    SUBCASE("identical partitions score 1") {
        CHECK(rand_index_sampled(truth, truth, 1000, 1) == 1.0);
    }
    SUBCASE("large quota reproduces the exact Rand index") {
        CommunityList pred = {{19}, {9}};
        for (std::uint64_t v = 0; v < 9; ++v) pred[0].push_back(v);
        for (std::uint64_t v = 10; v < 19; ++v) pred[1].push_back(v);
        std::map<std::uint64_t, std::uint64_t> pred_label, truth_label;
        for (std::uint64_t side = 0; side < 2; ++side) {
            for (std::uint64_t v : pred[side]) pred_label[v] = side;
            for (std::uint64_t v : truth[side]) truth_label[v] = side;
        }
        double sampled = rand_index_sampled(pred, truth, 1000, 7);
        CHECK(sampled == doctest::Approx(oracle::rand_exact(pred_label, truth_label))
                             .epsilon(1e-14));
    }
    SUBCASE("single predicted cluster gets only the positive pairs right") {
        CommunityList pred = {range(0, 20)};
        // 90 positive pairs all correct, 100 negative pairs all wrong
        CHECK(rand_index_sampled(pred, truth, 1000, 1) == doctest::Approx(90.0 / 190.0));
    }
    SUBCASE("sampling is deterministic in the seed") {
        CommunityList pred = {range(0, 7), range(7, 13), range(13, 20)};
        double a = rand_index_sampled(pred, truth, 20, 42);
        double b = rand_index_sampled(pred, truth, 20, 42);
        CHECK(a == b);
    }
    SUBCASE("degenerate truths are rejected") {
        CommunityList singletons;
        for (std::uint64_t v = 0; v < 5; ++v) singletons.push_back({v});
        CommunityList pred = {range(0, 5)};
        CHECK_THROWS_WITH_AS(rand_index_sampled(pred, singletons, 10, 1),
                             doctest::Contains("no vertex pair"), ParameterError);
        CommunityList lump = {range(0, 5)};
        CHECK_THROWS_WITH_AS(rand_index_sampled(pred, lump, 10, 1),
                             doctest::Contains("every vertex pair"), ParameterError);
        CHECK_THROWS_AS(rand_index_sampled(pred, truth, 0, 1), ParameterError);
    }
}
