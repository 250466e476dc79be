#include "lrw/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "lrw/error.hpp"

namespace lrw {

namespace {

std::uint64_t parse_u64(const std::string& token, std::size_t line_no) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + token + "'");
    return value;
}

}  // namespace

void write_membership_tsv(std::ostream& out, const Graph& g,
                          const std::vector<std::uint32_t>& values) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << g.original_id(v) << '\t' << values[v] << '\n';
}

void write_clusters_lines(std::ostream& out, const Graph& g, const Clustering& clustering) {
    for (std::size_t i = 0; i < clustering.clusters.size(); ++i) {
        out << g.original_id(clustering.attractors[i]);
        std::vector<std::uint64_t> ids;
        ids.reserve(clustering.clusters[i].size());
        for (VertexId v : clustering.clusters[i]) ids.push_back(g.original_id(v));
        std::sort(ids.begin(), ids.end());
        for (std::uint64_t id : ids) out << ' ' << id;
        out << '\n';
    }
}

CommunityList read_membership_tsv(std::istream& in) {
    std::map<std::uint64_t, std::vector<std::uint64_t>> by_cluster;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok_v, tok_c, extra;
        if (!(tokens >> tok_v)) continue;
        if (tok_v.front() == '#') continue;
        if (!(tokens >> tok_c))
            throw ParseError("line " + std::to_string(line_no) + ": expected vertex and cluster");
        if (tokens >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": extra token '" + extra + "'");
        by_cluster[parse_u64(tok_c, line_no)].push_back(parse_u64(tok_v, line_no));
    }
    CommunityList communities;
    communities.reserve(by_cluster.size());
    for (auto& [cluster, members] : by_cluster) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        communities.push_back(std::move(members));
    }
    return communities;
}

CommunityList read_communities_lines(std::istream& in, bool first_token_is_attractor) {
    CommunityList communities;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string token;
        std::vector<std::uint64_t> members;
        bool first = true;
        while (tokens >> token) {
            if (first && token.front() == '#') break;
            bool skip = first && first_token_is_attractor;
            first = false;
            if (skip) continue;
            members.push_back(parse_u64(token, line_no));
        }
        if (members.empty()) continue;
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        communities.push_back(std::move(members));
    }
    return communities;
}

CommunityList communities_from_clustering(const Graph& g, const Clustering& clustering) {
    CommunityList communities;
    communities.reserve(clustering.clusters.size());
    for (const auto& cluster : clustering.clusters) {
        std::vector<std::uint64_t> ids;
        ids.reserve(cluster.size());
        for (VertexId v : cluster) ids.push_back(g.original_id(v));
        std::sort(ids.begin(), ids.end());
        communities.push_back(std::move(ids));
    }
    return communities;
}

}  // namespace lrw
