#include "wes/generators.hpp"

#include "wes/error.hpp"
#include "wes/rng.hpp"

namespace wes {

std::string to_string(GraphKind k) {
    switch (k) {
        case GraphKind::complete: return "complete";
        case GraphKind::path: return "path";
        case GraphKind::star: return "star";
        case GraphKind::cycle: return "cycle";
        case GraphKind::erdos_renyi: return "erdos_renyi";
    }
    return "?";
}

GraphKind parse_kind(const std::string& name) {
    if (name == "complete") return GraphKind::complete;
    if (name == "path") return GraphKind::path;
    if (name == "star") return GraphKind::star;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "erdos_renyi" || name == "er") return GraphKind::erdos_renyi;
    throw ConfigError("unknown graph kind '" + name +
                      "' (expected complete, path, star, cycle or erdos_renyi)");
}

Graph make_graph(const GraphSpec& spec) {
    if (spec.n < 1) throw ConfigError("make_graph: node count must be >= 1");
    if (!(spec.p >= 0.0 && spec.p <= 1.0))
        throw ConfigError("make_graph: edge probability must be in [0,1]");

    const std::uint32_t n = spec.n;
    std::vector<Edge> edges;
    switch (spec.kind) {
        case GraphKind::complete:
            edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
            for (NodeId i = 0; i < n; ++i)
                for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
            break;
        case GraphKind::path:
            for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case GraphKind::star:
            for (NodeId i = 1; i < n; ++i) edges.push_back({0, i});
            break;
        case GraphKind::cycle:
            if (n < 3) throw ConfigError("make_graph: cycle needs at least 3 nodes");
            for (NodeId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
            break;
        case GraphKind::erdos_renyi: {
            Rng rng(spec.seed);
            for (NodeId i = 0; i < n; ++i)
                for (NodeId j = i + 1; j < n; ++j)
                    if (rng.next_unit() < spec.p) edges.push_back({i, j});
            break;
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

} // namespace wes
