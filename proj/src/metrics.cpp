#include "wes/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "wes/error.hpp"

namespace wes {

double average_degree(const Graph& g) {
    if (g.node_count() == 0) throw DataError("average_degree: graph has no nodes");
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

std::vector<double> degree_values(const Graph& g) {
    std::vector<double> out(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) out[v] = static_cast<double>(g.degree(v));
    return out;
}

std::vector<std::uint64_t> triangle_counts(const Graph& g) {
    std::vector<std::uint64_t> tri(g.node_count(), 0);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        NodeId u = e.u, v = e.v;
        if (g.degree(u) > g.degree(v)) std::swap(u, v);
        auto small = g.neighbors(u);
        auto large = g.neighbors(v);
        for (const AdjEntry& a : small) {
            // each triangle {u,v,w} puts +1 on w exactly once per edge,
            // so every node ends with its triangle count
            bool hit = std::binary_search(
                large.begin(), large.end(), a,
                [](const AdjEntry& x, const AdjEntry& y) { return x.neighbor < y.neighbor; });
            if (hit) ++tri[a.neighbor];
        }
    }
    return tri;
}

ClusteringResult clustering(const Graph& g) {
    if (g.node_count() == 0) throw DataError("clustering: graph has no nodes");
    std::vector<std::uint64_t> tri = triangle_counts(g);
    ClusteringResult res;
    res.per_node.resize(g.node_count(), 0.0);
    double sum = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint64_t d = g.degree(v);
        if (d >= 2) {
            double possible = 0.5 * static_cast<double>(d) * static_cast<double>(d - 1);
            res.per_node[v] = static_cast<double>(tri[v]) / possible;
        }
        sum += res.per_node[v];
    }
    res.average = sum / static_cast<double>(g.node_count());
    return res;
}

namespace {

class BfsCounter {
public:
    explicit BfsCounter(const Graph& g)
        : g_(g), dist_(g.node_count(), 0), stamp_(g.node_count(), 0), queue_(g.node_count()) {}

    // run BFS from source, folding distances into the histogram
    void run(NodeId source, HopHistogram& hist) {
        ++round_;
        std::size_t head = 0, tail = 0;
        queue_[tail++] = source;
        stamp_[source] = round_;
        dist_[source] = 0;
        while (head < tail) {
            NodeId v = queue_[head++];
            std::uint32_t next = dist_[v] + 1;
            for (const AdjEntry& a : g_.neighbors(v)) {
                if (stamp_[a.neighbor] != round_) {
                    stamp_[a.neighbor] = round_;
                    dist_[a.neighbor] = next;
                    queue_[tail++] = a.neighbor;
                    if (next >= hist.counts.size()) hist.counts.resize(next + 1, 0);
                    ++hist.counts[next];
                    ++hist.reachable_pairs;
                    hist.distance_sum += next;
                }
            }
        }
    }

private:
    const Graph& g_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> stamp_;
    std::vector<NodeId> queue_;
    std::uint32_t round_ = 0;
};

PathLengthResult from_sources(const Graph& g, std::span<const NodeId> sources,
                              PathLengthMode mode) {
    PathLengthResult res;
    res.mode = mode;
    res.sources = static_cast<std::uint32_t>(sources.size());
    res.histogram.counts.assign(2, 0);
    BfsCounter bfs(g);
    for (NodeId s : sources) bfs.run(s, res.histogram);
    if (res.histogram.reachable_pairs == 0)
        throw DataError("path length: no reachable pairs (graph has no edges)");
    res.average = res.histogram.mean();
    return res;
}

} // namespace

PathLengthResult path_length_exact(const Graph& g) {
    if (g.node_count() < 2) throw DataError("path length: need at least 2 nodes");
    std::vector<NodeId> sources(g.node_count());
    std::iota(sources.begin(), sources.end(), 0);
    return from_sources(g, sources, PathLengthMode::exact);
}

PathLengthResult path_length_sampled(const Graph& g, std::uint32_t k, Rng& rng) {
    if (g.node_count() < 2) throw DataError("path length: need at least 2 nodes");
    if (k == 0) throw ConfigError("path length: source count must be positive");
    if (k > g.node_count())
        throw ConfigError("path length: more BFS sources than nodes requested");

    // partial Fisher-Yates gives k distinct uniform sources
    std::vector<NodeId> pool(g.node_count());
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return from_sources(g, pool, PathLengthMode::sampled);
}

PathLengthResult path_length_auto(const Graph& g, std::uint32_t exact_limit, std::uint32_t k,
                                  std::uint64_t seed) {
    if (g.node_count() <= exact_limit) return path_length_exact(g);
    Rng rng(seed);
    return path_length_sampled(g, std::min<std::uint32_t>(k, g.node_count()), rng);
}

MetricsSummary summarize(const Graph& g, std::uint32_t exact_limit, std::uint32_t path_sources,
                         std::uint64_t seed) {
    MetricsSummary s;
    s.nodes = g.node_count();
    s.edges = g.edge_count();
    s.average_degree = average_degree(g);
    s.average_clustering = clustering(g).average;
    PathLengthResult pl = path_length_auto(g, exact_limit, path_sources, seed);
    s.average_path_length = pl.average;
    s.path_length_mode = pl.mode;
    s.path_length_sources = pl.sources;
    return s;
}

} // namespace wes
