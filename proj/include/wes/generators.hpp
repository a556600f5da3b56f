#pragma once

#include <cstdint>
#include <string>

#include "wes/graph.hpp"

namespace wes {

enum class GraphKind { complete, path, star, cycle, erdos_renyi };

std::string to_string(GraphKind k);
GraphKind parse_kind(const std::string& name);

/// Deterministic synthetic graph description. p and seed only apply to
/// erdos_renyi.
struct GraphSpec {
    GraphKind kind = GraphKind::complete;
    std::uint32_t n = 1;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Build the described graph. Pure function of its arguments: the same
/// GraphSpec always yields the same edge set, on every platform.
///
/// complete: all C(n,2) edges. path: 0-1-...-(n-1). star: node 0 joined to
/// all others. cycle: ring over n >= 3 nodes. erdos_renyi: every pair
/// included independently with probability p, pairs visited in canonical
/// (i,j) i<j order with exactly one RNG draw each.
Graph make_graph(const GraphSpec& spec);

} // namespace wes
