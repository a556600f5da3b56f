#include "wes/sampler.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <utility>

namespace wes {

std::string to_string(Method m) {
    switch (m) {
        case Method::es: return "ES";
        case Method::wes: return "WES";
        case Method::ties: return "TIES";
        case Method::tiwes: return "TIWES";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "ES") return Method::es;
    if (name == "WES") return Method::wes;
    if (name == "TIES") return Method::ties;
    if (name == "TIWES") return Method::tiwes;
    throw ConfigError("unknown sampling method '" + name + "' (expected ES, WES, TIES or TIWES)");
}

Sample es_sample(const Graph& g, double phi, Rng& rng) {
    auto pick = [&rng](const WeightIndex& idx) { return idx.draw(rng.next_unit()); };
    return run_edge_sampler(g, phi, /*reweight_neighbors=*/false, Method::es, rng.seed(), pick)
        .sample;
}

Sample wes_sample(const Graph& g, double phi, Rng& rng) {
    auto pick = [&rng](const WeightIndex& idx) { return idx.draw(rng.next_unit()); };
    return run_edge_sampler(g, phi, /*reweight_neighbors=*/true, Method::wes, rng.seed(), pick)
        .sample;
}

Sample totally_induce(const Graph& g, const Sample& s) {
    std::vector<char> in_sample(g.node_count(), 0);
    for (NodeId v : s.node_ids) {
        if (v >= g.node_count())
            throw DataError("totally_induce: sample node id not present in graph");
        in_sample[v] = 1;
    }

    Sample out = s;
    switch (s.method) {
        case Method::es: out.method = Method::ties; break;
        case Method::wes: out.method = Method::tiwes; break;
        default: break; // already induced
    }
    out.edge_ids.clear();
    for (NodeId v : s.node_ids) {
        for (const AdjEntry& a : g.neighbors(v)) {
            if (v < a.neighbor && in_sample[a.neighbor]) out.edge_ids.push_back(a.edge);
        }
    }
    std::sort(out.edge_ids.begin(), out.edge_ids.end());
    return out;
}

Graph sample_subgraph(const Graph& g, const Sample& s) {
    constexpr NodeId kAbsent = static_cast<NodeId>(-1);
    std::vector<NodeId> remap(g.node_count(), kAbsent);
    std::vector<std::int64_t> labels;
    labels.reserve(s.node_ids.size());
    for (NodeId v : s.node_ids) {
        if (v >= g.node_count())
            throw DataError("sample_subgraph: sample node id not present in graph");
        remap[v] = static_cast<NodeId>(labels.size());
        labels.push_back(g.label(v));
    }

    std::vector<Edge> edges;
    edges.reserve(s.edge_ids.size());
    for (EdgeId id : s.edge_ids) {
        const Edge& e = g.edge(id);
        if (remap[e.u] == kAbsent || remap[e.v] == kAbsent)
            throw DataError("sample_subgraph: edge endpoint outside sample node set");
        edges.push_back({remap[e.u], remap[e.v]});
    }
    return Graph::from_edges(static_cast<NodeId>(s.node_ids.size()), std::move(edges),
                             std::move(labels));
}

namespace {

// shortest round-trip decimal form, for stable text output
std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

} // namespace

void write_sample(std::ostream& out, const Graph& g, const Sample& s) {
    out << to_string(s.method) << ' ' << format_double(s.phi) << ' ' << s.seed << ' '
        << s.node_ids.size() << ' ' << s.edge_ids.size() << '\n';

    std::vector<std::int64_t> labels;
    labels.reserve(s.node_ids.size());
    for (NodeId v : s.node_ids) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end());
    for (std::int64_t l : labels) out << l << '\n';

    out << "--\n";

    std::vector<std::pair<std::int64_t, std::int64_t>> edge_labels;
    edge_labels.reserve(s.edge_ids.size());
    for (EdgeId id : s.edge_ids) {
        const Edge& e = g.edge(id);
        std::int64_t a = g.label(e.u), b = g.label(e.v);
        edge_labels.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edge_labels.begin(), edge_labels.end());
    for (const auto& [a, b] : edge_labels) out << a << ' ' << b << '\n';
}

} // namespace wes
