#include "lrw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace lrw {

namespace {

// Parses a full token as a nonnegative integer; rejects signs, junk and
// overflow.
bool parse_u64(const std::string& token, std::uint64_t& value) {
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last;
}

}  // namespace

Graph Graph::from_edges(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges) {
    std::vector<std::uint64_t> ids(n);
    for (VertexId v = 0; v < n; ++v) ids[v] = v;
    return from_edges(n, std::move(edges), std::move(ids));
}

Graph Graph::from_edges(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges,
                        std::vector<std::uint64_t> original_ids) {
    if (original_ids.size() != n)
        throw ParameterError("original id table size does not match vertex count");

    for (auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.neighbors_.resize(2 * g.m_);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    for (VertexId v = 0; v < n; ++v)
        std::sort(g.neighbors_.begin() + g.offsets_[v], g.neighbors_.begin() + g.offsets_[v + 1]);

    g.original_ids_ = std::move(original_ids);
    g.original_index_.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        if (!g.original_index_.emplace(g.original_ids_[v], v).second)
            throw ParameterError("duplicate original id " + std::to_string(g.original_ids_[v]));
    }
    return g;
}

std::optional<VertexId> Graph::find_original(std::uint64_t original_id) const {
    auto it = original_index_.find(original_id);
    if (it == original_index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::same_structure(const Graph& other) const {
    if (n_ != other.n_ || m_ != other.m_) return false;
    for (VertexId v = 0; v < n_; ++v) {
        auto w = other.find_original(original_ids_[v]);
        if (!w) return false;
        auto mine = neighbors(v);
        auto theirs = other.neighbors(*w);
        if (mine.size() != theirs.size()) return false;
        std::vector<std::uint64_t> a, b;
        a.reserve(mine.size());
        b.reserve(theirs.size());
        for (VertexId x : mine) a.push_back(original_ids_[x]);
        for (VertexId x : theirs) b.push_back(other.original_ids_[x]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

Graph load_edge_list(std::istream& in, LoadSummary* summary) {
    LoadSummary local;
    std::vector<std::uint64_t> order;
    std::unordered_map<std::uint64_t, VertexId> index;
    auto intern = [&](std::uint64_t original) {
        auto [it, inserted] = index.emplace(original, static_cast<VertexId>(order.size()));
        if (inserted) order.push_back(original);
        return it->second;
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++local.lines;
        std::istringstream tokens(line);
        std::string tok_u, tok_v, extra;
        if (!(tokens >> tok_u)) continue;  // blank line
        if (tok_u.front() == '#') {
            ++local.comment_lines;
            continue;
        }
        std::uint64_t u, v;
        if (!parse_u64(tok_u, u))
            throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + tok_u + "'");
        if (!(tokens >> tok_v))
            throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
        if (!parse_u64(tok_v, v))
            throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + tok_v + "'");
        if (tokens >> extra)
            throw ParseError("line " + std::to_string(line_no) +
                             ": extra token '" + extra + "' (weighted or directed input?)");
        VertexId cu = intern(u);
        VertexId cv = intern(v);
        if (cu == cv) {
            ++local.self_loops_dropped;
            continue;
        }
        edges.emplace_back(std::min(cu, cv), std::max(cu, cv));
    }

    std::sort(edges.begin(), edges.end());
    std::size_t before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    local.duplicate_edges_collapsed = before - edges.size();

    if (summary) *summary = local;
    VertexId n = static_cast<VertexId>(order.size());
    return Graph::from_edges(n, std::move(edges), std::move(order));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        bool has_edge = false;
        for (VertexId v : g.neighbors(u)) {
            if (v > u) out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
            has_edge = true;
        }
        // keep isolated vertices alive across a round trip
        if (!has_edge) out << g.original_id(u) << ' ' << g.original_id(u) << '\n';
    }
}

void write_remap_tsv(std::ostream& out, const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << g.original_id(v) << '\t' << v << '\n';
}

std::vector<std::pair<VertexId, double>> transition_column(const Graph& g, VertexId j) {
    auto nbrs = g.neighbors(j);
    double p = 1.0 / (1.0 + static_cast<double>(nbrs.size()));
    std::vector<std::pair<VertexId, double>> column;
    column.reserve(nbrs.size() + 1);
    std::size_t i = 0;
    while (i < nbrs.size() && nbrs[i] < j) column.emplace_back(nbrs[i++], p);
    column.emplace_back(j, p);
    while (i < nbrs.size()) column.emplace_back(nbrs[i++], p);
    return column;
}

}  // namespace lrw
