#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrw/clustering.hpp"
#include "lrw/engine.hpp"
#include "lrw/generators.hpp"
#include "lrw/graph.hpp"
#include "lrw/io.hpp"
#include "lrw/metrics.hpp"
#include "lrw/parallel.hpp"
#include "lrw/rng.hpp"

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed ^ (stream * 0x9e3779b97f4a7c15ULL);
    return lrw::splitmix64(state);
}

lrw::Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    lrw::LoadSummary summary;
    lrw::Graph g = lrw::load_edge_list(in, &summary);
    if (summary.self_loops_dropped || summary.duplicate_edges_collapsed)
        std::cerr << "warning: dropped " << summary.self_loops_dropped
                  << " self-loops, collapsed " << summary.duplicate_edges_collapsed
                  << " duplicate edges\n";
    return g;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

void write_labeled(const lrw::LabeledGraph& lg, const std::string& edges_path,
                   const std::string& labels_path) {
    auto edges = open_out(edges_path);
    lrw::write_edge_list(edges, lg.graph);
    auto labels = open_out(labels_path);
    lrw::write_membership_tsv(labels, lg.graph, lg.labels);
    double mean_degree = lg.graph.vertex_count() == 0
                             ? 0.0
                             : 2.0 * static_cast<double>(lg.graph.edge_count()) /
                                   static_cast<double>(lg.graph.vertex_count());
    std::cout << "n=" << lg.graph.vertex_count() << '\n'
              << "m=" << lg.graph.edge_count() << '\n'
              << "mean_degree=" << mean_degree << '\n';
}

lrw::CommunityList load_communities(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    if (format == "tsv") return lrw::read_membership_tsv(in);
    if (format == "communities") return lrw::read_communities_lines(in, false);
    if (format == "clusters") return lrw::read_communities_lines(in, true);
    throw std::runtime_error("unknown format '" + format + "'");
}

// q grid shared by the two benchmark sweeps
const std::vector<double> kBenchQ = {4.0, 3.0, 2.33, 1.86, 1.5, 1.22, 1.0};

lrw::LabeledGraph planted_for_bench(double q, std::uint64_t seed) {
    lrw::PlantedPartitionSpec spec;
    spec.q = q;
    spec.rng_seed = seed;
    return lrw::generate_planted(spec);
}

// draws until a feasible power-law instance comes out
lrw::LabeledGraph powerlaw_for_bench(double q, std::uint64_t seed, std::uint64_t stream) {
    lrw::PowerLawSpec spec;
    spec.q = q;
    for (int attempt = 0; attempt < 64; ++attempt) {
        spec.rng_seed = derive_seed(seed, stream * 64 + attempt);
        try {
            return lrw::generate_powerlaw(spec);
        } catch (const lrw::ParameterError&) {
            continue;  // infeasible size draw, try the next derived seed
        }
    }
    throw std::runtime_error("no feasible power-law instance after 64 attempts");
}

struct ClusterOptions {
    std::string input;
    std::string out = "clusters.tsv";
    std::string format = "tsv";
    lrw::LrwParams params;
    int threads = 0;
    std::uint64_t seed = 1;
    bool skip_merge = false;
};

void run_cluster(const ClusterOptions& opt) {
    lrw::Graph g = load_graph_file(opt.input);
    lrw::PhaseTimes times;
    lrw::Clustering result = lrw::cluster_global(g, opt.params, opt.threads, opt.seed,
                                                 opt.skip_merge, {}, &times);
    auto out = open_out(opt.out);
    if (opt.format == "tsv")
        lrw::write_membership_tsv(out, g, result.labels);
    else if (opt.format == "clusters")
        lrw::write_clusters_lines(out, g, result);
    else
        throw std::runtime_error("unknown format '" + opt.format + "'");
    std::cout << "clusters=" << result.clusters.size() << '\n'
              << "explore_seconds=" << times.explore_seconds << '\n'
              << "merge_seconds=" << times.merge_seconds << '\n';
}

struct LocalOptions {
    std::string input;
    std::uint64_t vertex = 0;
    lrw::LrwParams params;
    int threads = 0;
};

void run_local(const LocalOptions& opt) {
    lrw::Graph g = load_graph_file(opt.input);
    auto seed = g.find_original(opt.vertex);
    if (!seed)
        throw std::runtime_error("seed vertex " + std::to_string(opt.vertex) +
                                 " is not in the graph");
    lrw::LocalDiagnostics diag;
    std::vector<lrw::VertexId> cluster =
        lrw::cluster_local(g, *seed, opt.params, opt.threads, {}, &diag);
    std::vector<std::uint64_t> ids;
    ids.reserve(cluster.size());
    for (lrw::VertexId v : cluster) ids.push_back(g.original_id(v));
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) std::cout << (i ? " " : "") << ids[i];
    std::cout << '\n' << "s1=" << diag.s1 << '\n' << "s2=" << diag.s2 << '\n';
}

struct EvalOptions {
    std::string pred;
    std::string pred_format = "tsv";
    std::string truth;
    std::string truth_format = "tsv";
    std::string graph;
    std::string metric;
    std::uint64_t pairs = 1000;
    std::uint64_t seed = 1;
};

void run_eval(const EvalOptions& opt) {
    lrw::CommunityList pred = load_communities(opt.pred, opt.pred_format);
    if (opt.metric == "nmi" || opt.metric == "rand" || opt.metric == "jaccard") {
        if (opt.truth.empty())
            throw std::runtime_error("metric '" + opt.metric + "' needs --truth");
        lrw::CommunityList truth = load_communities(opt.truth, opt.truth_format);
        if (opt.metric == "nmi") {
            std::cout << "nmi=" << lrw::nmi(pred, truth, &std::cerr) << '\n';
        } else if (opt.metric == "rand") {
            std::cout << "rand_index=" << lrw::rand_index_sampled(pred, truth, opt.pairs, opt.seed)
                      << '\n';
        } else {
            double sum = 0.0;
            for (const auto& cluster : pred) {
                double best = 0.0;
                for (const auto& community : truth)
                    best = std::max(best, lrw::jaccard(cluster, community));
                sum += best;
            }
            if (pred.empty()) throw std::runtime_error("prediction file holds no clusters");
            std::cout << "mean_jaccard=" << sum / static_cast<double>(pred.size()) << '\n';
        }
        return;
    }
    if (opt.metric == "mc") {
        if (opt.graph.empty()) throw std::runtime_error("metric 'mc' needs --graph");
        lrw::Graph g = load_graph_file(opt.graph);
        std::vector<std::vector<lrw::VertexId>> clusters;
        clusters.reserve(pred.size());
        for (const auto& community : pred) {
            std::vector<lrw::VertexId> compact;
            compact.reserve(community.size());
            for (std::uint64_t id : community) {
                auto v = g.find_original(id);
                if (!v)
                    throw std::runtime_error("cluster vertex " + std::to_string(id) +
                                             " is not in the graph");
                compact.push_back(*v);
            }
            clusters.push_back(std::move(compact));
        }
        std::cout << "mc=" << lrw::mean_conductance(g, clusters, &std::cerr) << '\n';
        return;
    }
    throw std::runtime_error("unknown metric '" + opt.metric + "'");
}

struct BenchOptions {
    int graphs = 10;
    int seeds_per_graph = 20;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string out;
};

void run_bench_table1(const BenchOptions& opt) {
    std::ostringstream csv;
    csv << "q,mean_nmi,modal_clusters\n";
    lrw::LrwParams params;
    for (std::size_t qi = 0; qi < kBenchQ.size(); ++qi) {
        double q = kBenchQ[qi];
        double nmi_sum = 0.0;
        std::map<std::size_t, int> count_votes;
        for (int i = 0; i < opt.graphs; ++i) {
            std::uint64_t stream = qi * 1000 + static_cast<std::uint64_t>(i);
            lrw::LabeledGraph lg = planted_for_bench(q, derive_seed(opt.seed, stream));
            lrw::Clustering result = lrw::cluster_global(lg.graph, params, opt.threads,
                                                         derive_seed(opt.seed, stream + 500));
            auto pred = lrw::communities_from_clustering(lg.graph, result);
            lrw::CommunityList truth;
            for (auto& c : lrw::communities_from_labels(lg.labels))
                truth.emplace_back(c.begin(), c.end());
            nmi_sum += lrw::nmi(pred, truth, &std::cerr);
            ++count_votes[result.clusters.size()];
        }
        std::size_t modal = 0;
        int best_votes = -1;
        for (const auto& [count, votes] : count_votes) {
            if (votes > best_votes) {
                modal = count;
                best_votes = votes;
            }
        }
        csv << q << ',' << nmi_sum / opt.graphs << ',' << modal << '\n';
        std::cerr << "table1 q=" << q << " done\n";
    }
    if (opt.out.empty())
        std::cout << csv.str();
    else
        open_out(opt.out) << csv.str();
}

void run_bench_table2(const BenchOptions& opt) {
    std::ostringstream csv;
    csv << "q,mean_jaccard\n";
    lrw::LrwParams params;
    for (std::size_t qi = 0; qi < kBenchQ.size(); ++qi) {
        double q = kBenchQ[qi];
        double jaccard_sum = 0.0;
        int samples = 0;
        for (int i = 0; i < opt.graphs; ++i) {
            std::uint64_t stream = qi * 1000 + static_cast<std::uint64_t>(i);
            lrw::LabeledGraph lg = powerlaw_for_bench(q, opt.seed, stream);
            auto truth = lrw::communities_from_labels(lg.labels);
            auto engine = lrw::make_engine(derive_seed(opt.seed, stream + 250000), 0);
            for (int s = 0; s < opt.seeds_per_graph; ++s) {
                auto v = static_cast<lrw::VertexId>(engine() % lg.graph.vertex_count());
                std::vector<lrw::VertexId> found =
                    lrw::cluster_local(lg.graph, v, params, opt.threads);
                std::vector<std::uint64_t> found64(found.begin(), found.end());
                const auto& cluster = truth[lg.labels[v]];
                std::vector<std::uint64_t> truth64(cluster.begin(), cluster.end());
                jaccard_sum += lrw::jaccard(found64, truth64);
                ++samples;
            }
            std::cerr << "table2 q=" << q << " graph " << (i + 1) << "/" << opt.graphs << "\n";
        }
        csv << q << ',' << jaccard_sum / samples << '\n';
    }
    if (opt.out.empty())
        std::cout << csv.str();
    else
        open_out(opt.out) << csv.str();
}

void add_walk_flags(CLI::App* cmd, lrw::LrwParams& params) {
    cmd->add_option("--r", params.r, "inflation exponent (> 1)");
    cmd->add_option("--tmax", params.t_max, "maximum walk iterations");
    cmd->add_option("--epsilon", params.epsilon, "prune threshold");
    cmd->add_option("--xi", params.xi, "convergence threshold");
    cmd->add_option("--tau", params.tau, "merge significance threshold");
    cmd->add_option("--eta", params.eta, "local significance threshold");
    cmd->add_option("--batch-size", params.batch_size, "seeds per batch (0 = automatic)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"limited random walk graph clustering"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "produce a benchmark graph with labels");
    generate->require_subcommand(1);
    std::string gen_edges = "graph.edges";
    std::string gen_labels = "graph.labels";

    lrw::PlantedPartitionSpec planted_spec;
    auto* planted = generate->add_subcommand("planted", "planted-partition model");
    planted->add_option("--n", planted_spec.n, "vertices");
    planted->add_option("--d", planted_spec.d, "expected degree");
    planted->add_option("--c", planted_spec.c, "cluster count");
    planted->add_option("--q", planted_spec.q, "intra/inter degree ratio");
    planted->add_option("--seed", planted_spec.rng_seed, "rng seed");
    planted->add_option("--out-edges", gen_edges, "edge list path");
    planted->add_option("--out-labels", gen_labels, "labels path");
    planted->callback(
        [&] { write_labeled(lrw::generate_planted(planted_spec), gen_edges, gen_labels); });

    lrw::PowerLawSpec power_spec;
    auto* powerlaw = generate->add_subcommand("powerlaw", "power-law degree/size benchmark");
    powerlaw->add_option("--n", power_spec.n, "vertices");
    powerlaw->add_option("--dmin", power_spec.degree_min, "minimum degree");
    powerlaw->add_option("--dmax", power_spec.degree_max, "maximum degree");
    powerlaw->add_option("--cmin", power_spec.cluster_min, "minimum cluster size");
    powerlaw->add_option("--cmax", power_spec.cluster_max, "maximum cluster size");
    powerlaw->add_option("--gamma-degree", power_spec.exponent_degree, "degree exponent");
    powerlaw->add_option("--gamma-size", power_spec.exponent_size, "size exponent");
    powerlaw->add_option("--q", power_spec.q, "intra/inter degree ratio");
    powerlaw->add_option("--seed", power_spec.rng_seed, "rng seed");
    powerlaw->add_option("--out-edges", gen_edges, "edge list path");
    powerlaw->add_option("--out-labels", gen_labels, "labels path");
    powerlaw->callback(
        [&] { write_labeled(lrw::generate_powerlaw(power_spec), gen_edges, gen_labels); });

    // cluster
    ClusterOptions cluster_opt;
    auto* cluster = app.add_subcommand("cluster", "global clustering of an edge list");
    cluster->add_option("input", cluster_opt.input, "edge list file")->required();
    cluster->add_option("--out", cluster_opt.out, "output path");
    cluster->add_option("--format", cluster_opt.format, "tsv|clusters");
    cluster->add_option("--threads", cluster_opt.threads, "worker count (0 = hardware)");
    cluster->add_option("--seed", cluster_opt.seed, "rng seed for batch sampling");
    cluster->add_flag("--skip-merge", cluster_opt.skip_merge, "skip the overlap merging passes");
    add_walk_flags(cluster, cluster_opt.params);
    cluster->callback([&] { run_cluster(cluster_opt); });

    // local
    LocalOptions local_opt;
    auto* local = app.add_subcommand("local", "local cluster around one vertex");
    local->add_option("input", local_opt.input, "edge list file")->required();
    local->add_option("vertex", local_opt.vertex, "seed vertex (original id)")->required();
    local->add_option("--threads", local_opt.threads, "worker count (0 = hardware)");
    add_walk_flags(local, local_opt.params);
    local->callback([&] { run_local(local_opt); });

    // eval
    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "score a clustering file");
    eval->add_option("--pred", eval_opt.pred, "prediction file")->required();
    eval->add_option("--format", eval_opt.pred_format, "prediction format: tsv|clusters");
    eval->add_option("--truth", eval_opt.truth, "ground truth file");
    eval->add_option("--truth-format", eval_opt.truth_format,
                     "truth format: tsv|communities|clusters");
    eval->add_option("--graph", eval_opt.graph, "edge list (for conductance)");
    eval->add_option("--metric", eval_opt.metric, "nmi|mc|jaccard|rand")->required();
    eval->add_option("--pairs", eval_opt.pairs, "sampled pairs per class for rand");
    eval->add_option("--seed", eval_opt.seed, "rng seed for rand sampling");
    eval->callback([&] { run_eval(eval_opt); });

    // bench
    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "benchmark sweeps over the q grid");
    bench->require_subcommand(1);
    auto* table1 = bench->add_subcommand("table1", "global clustering on planted partitions");
    auto* table2 = bench->add_subcommand("table2", "local clustering on power-law graphs");
    for (auto* t : {table1, table2}) {
        t->add_option("--graphs", bench_opt.graphs, "graphs per q");
        t->add_option("--seed", bench_opt.seed, "rng seed");
        t->add_option("--threads", bench_opt.threads, "worker count (0 = hardware)");
        t->add_option("--out", bench_opt.out, "CSV path (default stdout)");
    }
    table2->add_option("--seeds-per-graph", bench_opt.seeds_per_graph, "seed vertices per graph");
    table1->callback([&] { run_bench_table1(bench_opt); });
    table2->callback([&] { run_bench_table2(bench_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
