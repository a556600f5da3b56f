#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wes/graph.hpp"
#include "wes/metrics.hpp"
#include "wes/sampler.hpp"
#include "wes/stats.hpp"

namespace wes {

enum class OutputFormat { csv, json };
enum class Property { degree, clustering, path_length };

std::string to_string(Property p);
std::string to_string(OutputFormat f);

inline constexpr Property kProperties[] = {Property::degree, Property::clustering,
                                           Property::path_length};

/// Declarative experiment description. Defaults mirror the usual protocol:
/// fractions 0.02..0.10, five repetitions, distributions at phi = 0.06.
struct ExperimentConfig {
    std::filesystem::path dataset_path;
    std::vector<Method> methods = {Method::es, Method::wes, Method::ties, Method::tiwes};
    std::vector<double> fractions = {0.02, 0.04, 0.06, 0.08, 0.10};
    std::uint32_t repetitions = 5;
    std::uint64_t base_seed = 1;
    double phi_dist = 0.06;
    std::uint32_t exact_path_limit = 20000; // exact path length up to this many nodes
    std::uint32_t path_sources = 256;       // BFS sources beyond the limit
    std::filesystem::path output_dir = ".";
    OutputFormat output_format = OutputFormat::csv;
};

/// Parse a flat key=value config file ('#' comments, blank lines ignored).
/// Keys: dataset, methods, fractions, repetitions, base_seed, phi_dist,
/// exact_path_limit, path_sources, output_dir, format.
ExperimentConfig load_config_file(const std::filesystem::path& path);

/// Apply one key=value pair to a config; shared by the file parser and
/// CLI flag overrides.
void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value);

struct PointStatsRow {
    std::string dataset;
    Method method;
    Property property;
    double phi;
    double mean_ratio; // sampled value / original value, averaged over reps
    double ci_low;
    double ci_high;
    bool ci_defined; // false when repetitions < 2 (bounds collapse to the mean)
};

struct RmseRow {
    std::string dataset;
    Method method;
    Property property;
    double rmse; // over all fraction x repetition cells, original vs sampled value
};

/// Size and exhaustion bookkeeping for one (method, phi, repetition) cell.
struct CellInfo {
    Method method;
    double phi;
    std::uint32_t repetition;
    std::uint64_t sampled_nodes;
    std::uint64_t sampled_edges;
    bool exhausted;
    PathLengthMode path_length_mode;
};

struct PointStatsReport {
    std::string dataset;
    MetricsSummary original;
    std::vector<PointStatsRow> rows;   // method -> property -> phi order
    std::vector<RmseRow> rmse_rows;    // method -> property order
    std::vector<CellInfo> cells;       // method -> phi -> repetition order
};

struct KsRow {
    std::string dataset;
    Method method;
    Property property;
    double ks_mean; // mean KS distance to the original over repetitions
};

struct EcdfEntry {
    Method method;
    Property property;
    Ecdf ecdf; // from the designated repetition (seed = base_seed)
};

struct DistributionReport {
    std::string dataset;
    double phi;
    Ecdf original[3];          // indexed by Property
    std::vector<KsRow> ks_rows;
    std::vector<EcdfEntry> sampled;
};

/// The point-statistics protocol: for every (method, fraction, repetition)
/// draw a sample with seed base_seed + repetition, build the sampled
/// subgraph, and compute the three properties. TIES/TIWES reuse the ES/WES
/// node sets of the same seed (induction is a post-pass), so induced and
/// non-induced results are paired. Rows aggregate the sampled/original
/// ratio with a 95% Student-t interval; RMSE pools all cells per
/// (method, property).
PointStatsReport run_point_statistics(const Graph& g, const std::string& dataset_name,
                                      const ExperimentConfig& cfg,
                                      const MetricsSummary* original = nullptr);

/// Loads the dataset named by cfg.dataset_path (original-graph statistics
/// are cached next to the outputs, keyed by a content hash), runs, and
/// writes report files into cfg.output_dir.
PointStatsReport run_point_statistics(const ExperimentConfig& cfg);

/// The distribution protocol at phi_dist: per repetition, degree /
/// clustering / path-length ECDFs of each method's sampled subgraph and
/// their KS distances to the original graph's ECDFs; reports the mean KS
/// and the ECDF tables of the base_seed repetition.
DistributionReport run_distributions(const Graph& g, const std::string& dataset_name,
                                     const ExperimentConfig& cfg);

/// Dataset-loading and file-writing wrapper, as for point statistics.
DistributionReport run_distributions(const ExperimentConfig& cfg);

// --- serialization ---------------------------------------------------

void write_metrics_json(std::ostream& out, const MetricsSummary& s);
void write_point_stats_csv(std::ostream& out, const PointStatsReport& r);
void write_rmse_csv(std::ostream& out, const PointStatsReport& r);
void write_ks_csv(std::ostream& out, const DistributionReport& r);
void write_ecdf_csv(std::ostream& out, const Ecdf& e);
void write_point_stats_json(std::ostream& out, const PointStatsReport& r);
void write_distributions_json(std::ostream& out, const DistributionReport& r);

/// Write the report into cfg.output_dir in cfg.output_format; returns the
/// paths written.
std::vector<std::filesystem::path> write_report_files(const PointStatsReport& r,
                                                      const ExperimentConfig& cfg);
std::vector<std::filesystem::path> write_report_files(const DistributionReport& r,
                                                      const ExperimentConfig& cfg);

/// Load a graph from an edge-list file (DataError on failure).
Graph load_dataset(const std::filesystem::path& path);

/// Dataset display name: the file stem.
std::string dataset_name_of(const std::filesystem::path& path);

/// Shortest round-trip decimal form of a double, for stable text output.
std::string format_double(double x);

} // namespace wes
