#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace wes {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge with canonical endpoint order (u < v).
struct Edge {
    NodeId u;
    NodeId v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct AdjEntry {
    NodeId neighbor;
    EdgeId edge;
};

/// Immutable undirected simple graph: an indexed edge list plus a CSR
/// adjacency sorted by neighbor id within each node. No self-loops, no
/// duplicate edges. Node ids are dense [0, n); the original external ids
/// from an input file are kept as labels.
///
/// Construction is single-threaded; afterwards the graph is read-only and
/// safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Build from an edge list over nodes [0, node_count). Endpoints may be
    /// given in either order; each edge is canonicalized to u < v. Throws
    /// on self-loops, duplicate edges, or out-of-range endpoints.
    /// labels maps internal ids to external ids; empty means identity.
    static Graph from_edges(NodeId node_count, std::vector<Edge> edges,
                            std::vector<std::int64_t> labels = {});

    NodeId node_count() const noexcept { return node_count_; }
    EdgeId edge_count() const noexcept { return static_cast<EdgeId>(edges_.size()); }

    const Edge& edge(EdgeId e) const;
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const AdjEntry> neighbors(NodeId v) const;
    NodeId degree(NodeId v) const;

    std::int64_t label(NodeId v) const;
    bool has_labels() const noexcept { return !labels_.empty(); }

private:
    NodeId node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> adj_offsets_; // size n+1
    std::vector<AdjEntry> adj_;            // size 2m, sorted per node
    std::vector<std::int64_t> labels_;     // empty => identity
};

struct LoadOptions {
    std::vector<std::string> comment_prefixes = {"#", "%"};
    bool ignore_extra_columns = true;
    bool drop_self_loops = true;
};

/// Parse a whitespace-separated edge list. The first two tokens of each
/// non-comment line are integer endpoint ids; further tokens (timestamps,
/// weights) are ignored when ignore_extra_columns is set. External ids are
/// remapped to dense internal ids in order of first appearance; duplicate
/// undirected edges are dropped regardless of endpoint order. LF and CRLF
/// line endings are both accepted.
///
/// Throws ParseError (with line number) on malformed lines and DataError
/// when no edges remain.
Graph load_edge_list(std::istream& in, const LoadOptions& opts = {});

/// Every edge f != e sharing an endpoint with e. In a simple graph a
/// neighboring edge shares exactly one endpoint, so the result is
/// duplicate-free by construction.
std::vector<EdgeId> neighboring_edges(const Graph& g, EdgeId e);

/// Subgraph on the given nodes with every edge of g whose endpoints are
/// both in the set. Node ids are re-densified; external labels carry over.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Serialize in the edge-list text format (one "u v" line per edge,
/// external ids).
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace wes
