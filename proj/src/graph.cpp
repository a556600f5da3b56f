#include "wes/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "wes/error.hpp"

namespace wes {

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

Graph Graph::from_edges(NodeId node_count, std::vector<Edge> edges,
                        std::vector<std::int64_t> labels) {
    if (!labels.empty() && labels.size() != node_count)
        throw std::invalid_argument("Graph::from_edges: label count != node count");

    Graph g;
    g.node_count_ = node_count;
    g.labels_ = std::move(labels);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (Edge& e : edges) {
        if (e.u >= node_count || e.v >= node_count)
            throw std::invalid_argument("Graph::from_edges: endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("Graph::from_edges: self-loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert(edge_key(e.u, e.v)).second)
            throw std::invalid_argument("Graph::from_edges: duplicate edge");
    }
    g.edges_ = std::move(edges);

    // CSR adjacency via counting sort, then per-node sort by neighbor id
    g.adj_offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.adj_offsets_[e.u + 1];
        ++g.adj_offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i <= node_count; ++i)
        g.adj_offsets_[i] += g.adj_offsets_[i - 1];

    g.adj_.resize(g.edges_.size() * 2);
    std::vector<std::size_t> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges_[id];
        g.adj_[cursor[e.u]++] = {e.v, id};
        g.adj_[cursor[e.v]++] = {e.u, id};
    }
    for (NodeId v = 0; v < node_count; ++v) {
        std::sort(g.adj_.begin() + g.adj_offsets_[v], g.adj_.begin() + g.adj_offsets_[v + 1],
                  [](const AdjEntry& a, const AdjEntry& b) { return a.neighbor < b.neighbor; });
    }
    return g;
}

const Edge& Graph::edge(EdgeId e) const {
    if (e >= edges_.size()) throw std::out_of_range("Graph::edge: edge id out of range");
    return edges_[e];
}

std::span<const AdjEntry> Graph::neighbors(NodeId v) const {
    if (v >= node_count_) throw std::out_of_range("Graph::neighbors: node id out of range");
    return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
}

NodeId Graph::degree(NodeId v) const {
    if (v >= node_count_) throw std::out_of_range("Graph::degree: node id out of range");
    return static_cast<NodeId>(adj_offsets_[v + 1] - adj_offsets_[v]);
}

std::int64_t Graph::label(NodeId v) const {
    if (v >= node_count_) throw std::out_of_range("Graph::label: node id out of range");
    return labels_.empty() ? static_cast<std::int64_t>(v) : labels_[v];
}

Graph load_edge_list(std::istream& in, const LoadOptions& opts) {
    if (opts.comment_prefixes.empty())
        throw ConfigError("LoadOptions: comment_prefixes must not be empty");

    std::unordered_map<std::int64_t, NodeId> id_map;
    std::vector<std::int64_t> labels;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;

    auto intern = [&](std::int64_t ext) -> NodeId {
        auto [it, inserted] = id_map.try_emplace(ext, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(ext);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue; // blank line
        bool comment = false;
        for (const std::string& p : opts.comment_prefixes) {
            if (line.compare(start, p.size(), p) == 0) {
                comment = true;
                break;
            }
        }
        if (comment) continue;

        const char* cur = line.data() + start;
        const char* end = line.data() + line.size();
        std::int64_t ids[2];
        for (int k = 0; k < 2; ++k) {
            while (cur != end && (*cur == ' ' || *cur == '\t')) ++cur;
            if (cur == end)
                throw ParseError("edge line has fewer than two node ids", line_no);
            auto [next, ec] = std::from_chars(cur, end, ids[k]);
            if (ec != std::errc{} || (next != end && *next != ' ' && *next != '\t'))
                throw ParseError("node id is not an integer: '" + line + "'", line_no);
            cur = next;
        }
        if (!opts.ignore_extra_columns) {
            while (cur != end && (*cur == ' ' || *cur == '\t')) ++cur;
            if (cur != end)
                throw ParseError("unexpected extra columns: '" + line + "'", line_no);
        }

        if (ids[0] == ids[1]) {
            if (opts.drop_self_loops) continue;
            throw ParseError("self-loop not allowed", line_no);
        }
        NodeId u = intern(ids[0]);
        NodeId v = intern(ids[1]);
        NodeId a = std::min(u, v), b = std::max(u, v);
        if (seen.insert(edge_key(a, b)).second) edges.push_back({a, b});
    }

    if (edges.empty()) throw DataError("edge list is empty: no edges found");
    const NodeId n = static_cast<NodeId>(labels.size()); // before labels is moved from
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

std::vector<EdgeId> neighboring_edges(const Graph& g, EdgeId e) {
    const Edge& self = g.edge(e);
    std::vector<EdgeId> out;
    out.reserve(static_cast<std::size_t>(g.degree(self.u)) + g.degree(self.v));
    for (NodeId endpoint : {self.u, self.v}) {
        for (const AdjEntry& a : g.neighbors(endpoint)) {
            if (a.edge != e) out.push_back(a.edge);
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
    constexpr NodeId kAbsent = static_cast<NodeId>(-1);
    std::vector<NodeId> remap(g.node_count(), kAbsent);
    std::vector<std::int64_t> labels;
    labels.reserve(nodes.size());
    for (NodeId v : nodes) {
        if (v >= g.node_count())
            throw std::out_of_range("induced_subgraph: node id out of range");
        if (remap[v] != kAbsent)
            throw std::invalid_argument("induced_subgraph: duplicate node id");
        remap[v] = static_cast<NodeId>(labels.size());
        labels.push_back(g.label(v));
    }

    std::vector<Edge> edges;
    for (NodeId v : nodes) {
        for (const AdjEntry& a : g.neighbors(v)) {
            if (v < a.neighbor && remap[a.neighbor] != kAbsent)
                edges.push_back({remap[v], remap[a.neighbor]});
        }
    }
    return Graph::from_edges(static_cast<NodeId>(nodes.size()), std::move(edges),
                             std::move(labels));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        std::int64_t a = g.label(e.u), b = g.label(e.v);
        out << a << ' ' << b << '\n';
    }
}

} // namespace wes
