#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wes/error.hpp"
#include "wes/graph.hpp"
#include "wes/rng.hpp"
#include "wes/weight_index.hpp"

namespace wes {

enum class Method { es, wes, ties, tiwes };

std::string to_string(Method m);
Method parse_method(const std::string& name); // accepts ES/WES/TIES/TIWES

/// A sample extracted from a parent graph: node ids V_s and edge ids E_s,
/// both sorted ascending. Every edge in E_s has both endpoints in V_s and
/// E_s never contains duplicates (sampling is without replacement).
/// exhausted flags runs where the parent graph ran out of edges before the
/// node target was reached.
struct Sample {
    Method method = Method::es;
    double phi = 0.0;
    std::uint64_t seed = 0;
    std::vector<NodeId> node_ids;
    std::vector<EdgeId> edge_ids;
    bool exhausted = false;
};

/// Per-run accounting alongside the sample. index_ops is the weight-index
/// op counter (see WeightIndex::op_count), weight_updates the number of
/// add/zero calls; together they bound the index work done per draw.
struct SampleRun {
    Sample sample;
    std::uint64_t draws = 0;
    std::uint64_t weight_updates = 0;
    std::uint64_t index_ops = 0;
};

/// Edge-sampling engine shared by ES and WES.
///
/// All edges start at weight 1. Each iteration picks an edge, adds its
/// endpoints to V_s and the edge to E_s, and zeroes the edge's weight so it
/// can never be drawn again. With reweight_neighbors set, every edge
/// sharing an endpoint with the picked edge and still unsampled (weight >
/// 0) gets +1 weight. The loop stops once |V_s| >= ceil(phi * |V|), checked
/// after each edge is added, or when total weight hits zero (exhausted).
///
/// PickFn is called with the current index and must return the id of an
/// edge with positive weight; production code passes a draw through Rng,
/// tests pass scripted or instrumented pickers.
template <class PickFn>
SampleRun run_edge_sampler(const Graph& g, double phi, bool reweight_neighbors, Method tag,
                           std::uint64_t seed, PickFn&& pick) {
    if (!(phi > 0.0 && phi <= 1.0)) throw ConfigError("sampling fraction must be in (0,1]");
    if (g.edge_count() == 0) throw DataError("cannot sample a graph with no edges");

    const NodeId n = g.node_count();
    const auto target =
        static_cast<std::size_t>(std::ceil(phi * static_cast<double>(n)));

    WeightIndex index = WeightIndex::uniform(g.edge_count());
    const std::uint64_t build_ops = index.op_count();

    SampleRun run;
    run.sample.method = tag;
    run.sample.phi = phi;
    run.sample.seed = seed;

    std::vector<char> in_sample(n, 0);
    std::size_t sampled_nodes = 0;

    while (sampled_nodes < target && index.total() > 0) {
        EdgeId e = static_cast<EdgeId>(pick(index));
        ++run.draws;
        const Edge& edge = g.edge(e);
        for (NodeId endpoint : {edge.u, edge.v}) {
            if (!in_sample[endpoint]) {
                in_sample[endpoint] = 1;
                ++sampled_nodes;
                run.sample.node_ids.push_back(endpoint);
            }
        }
        run.sample.edge_ids.push_back(e);
        index.zero(e);
        ++run.weight_updates;

        if (reweight_neighbors) {
            // a sampled edge stays at weight 0: never resurrect it
            for (NodeId endpoint : {edge.u, edge.v}) {
                for (const AdjEntry& a : g.neighbors(endpoint)) {
                    if (a.edge != e && index.weight(a.edge) > 0) {
                        index.add(a.edge, 1);
                        ++run.weight_updates;
                    }
                }
            }
        }
    }

    run.sample.exhausted = sampled_nodes < target;
    run.index_ops = index.op_count() - build_ops;
    std::sort(run.sample.node_ids.begin(), run.sample.node_ids.end());
    std::sort(run.sample.edge_ids.begin(), run.sample.edge_ids.end());
    return run;
}

/// Uniform edge sampling without replacement, stopping at ceil(phi * |V|)
/// sampled nodes.
Sample es_sample(const Graph& g, double phi, Rng& rng);

/// Weighted edge sampling: like ES, but sampling an edge raises the weight
/// of each of its unsampled neighboring edges by one, biasing later draws
/// toward the neighborhood already touched.
Sample wes_sample(const Graph& g, double phi, Rng& rng);

/// Replace E_s with every parent-graph edge whose endpoints are both in
/// V_s. V_s is unchanged, so the result depends only on the node set;
/// applying it twice is a no-op. Upgrades the method tag ES -> TIES,
/// WES -> TIWES.
Sample totally_induce(const Graph& g, const Sample& s);

/// Build the sampled subgraph (V_s, E_s) as a Graph of its own, with
/// external labels carried over from the parent.
Graph sample_subgraph(const Graph& g, const Sample& s);

/// Text serialization: header "method phi seed |V_s| |E_s|", one node id
/// per line (external ids, ascending), a "--" separator, then "u v" edge
/// lines ordered by external id pair.
void write_sample(std::ostream& out, const Graph& g, const Sample& s);

} // namespace wes
