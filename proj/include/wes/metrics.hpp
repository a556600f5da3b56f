#pragma once

#include <cstdint>
#include <vector>

#include "wes/graph.hpp"
#include "wes/rng.hpp"

namespace wes {

/// 2|E| / |V|.
double average_degree(const Graph& g);

/// Per-node degrees as doubles, for distribution building.
std::vector<double> degree_values(const Graph& g);

/// Number of triangles through each node.
std::vector<std::uint64_t> triangle_counts(const Graph& g);

struct ClusteringResult {
    std::vector<double> per_node; // c(v) = triangles(v) / C(d(v),2); 0 when d(v) < 2
    double average;               // unweighted mean over all nodes
};

/// Local clustering coefficient of every node and its mean. Nodes of
/// degree < 2 contribute c(v) = 0 and are included in the mean.
ClusteringResult clustering(const Graph& g);

/// Ordered (source, target) pair counts by hop distance. counts[d] is the
/// number of pairs at distance d >= 1; unreachable pairs are not counted.
struct HopHistogram {
    std::vector<std::uint64_t> counts; // index = hop distance, counts[0] unused
    std::uint64_t reachable_pairs = 0;
    std::uint64_t distance_sum = 0;

    double mean() const {
        return reachable_pairs ? static_cast<double>(distance_sum) /
                                     static_cast<double>(reachable_pairs)
                               : 0.0;
    }
};

enum class PathLengthMode { exact, sampled };

struct PathLengthResult {
    double average = 0.0; // mean hop distance over reachable ordered pairs
    HopHistogram histogram;
    PathLengthMode mode = PathLengthMode::exact;
    std::uint32_t sources = 0; // BFS sources used
};

/// BFS from every node; averages over all reachable ordered pairs.
PathLengthResult path_length_exact(const Graph& g);

/// BFS from k distinct uniformly chosen sources. With k = |V| this equals
/// exact mode.
PathLengthResult path_length_sampled(const Graph& g, std::uint32_t k, Rng& rng);

/// Exact when |V| <= exact_limit, else sampled with k sources drawn from
/// Rng(seed).
PathLengthResult path_length_auto(const Graph& g, std::uint32_t exact_limit, std::uint32_t k,
                                  std::uint64_t seed);

struct MetricsSummary {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    double average_degree = 0.0;
    double average_clustering = 0.0;
    double average_path_length = 0.0;
    PathLengthMode path_length_mode = PathLengthMode::exact;
    std::uint32_t path_length_sources = 0;
};

/// The three point statistics in one pass, path length in auto mode.
MetricsSummary summarize(const Graph& g, std::uint32_t exact_limit = 20000,
                         std::uint32_t path_sources = 256, std::uint64_t seed = 0);

} // namespace wes
