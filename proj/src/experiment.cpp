#include "wes/experiment.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "wes/error.hpp"

namespace wes {

namespace {

using ordered_json = nlohmann::ordered_json;

// Decouples path-length source selection from the edge-draw stream of the
// same seed.
constexpr std::uint64_t kPathSeedTag = 0x70617468u; // != 0, fixed forever

std::string mode_name(PathLengthMode m) {
    return m == PathLengthMode::exact ? "exact" : "sampled";
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(trim(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

double parse_double(const std::string& s, const std::string& key) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("value for '" + key + "' is not a number: '" + s + "'");
    return v;
}

template <typename T>
T parse_unsigned(const std::string& s, const std::string& key) {
    T v = 0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("value for '" + key + "' is not a non-negative integer: '" + s + "'");
    return v;
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

void validate_common(const ExperimentConfig& cfg) {
    if (cfg.methods.empty()) throw ConfigError("no sampling methods configured");
    for (std::size_t i = 0; i < cfg.methods.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.methods.size(); ++j)
            if (cfg.methods[i] == cfg.methods[j])
                throw ConfigError("duplicate sampling method: " + to_string(cfg.methods[i]));
    if (cfg.repetitions == 0) throw ConfigError("repetitions must be at least 1");
    if (cfg.path_sources == 0) throw ConfigError("path_sources must be at least 1");
}

void check_fraction(double phi, const Graph& g) {
    if (!(phi > 0.0 && phi <= 1.0))
        throw ConfigError("sampling fraction " + format_double(phi) + " is outside (0,1]");
    double target = std::ceil(phi * static_cast<double>(g.node_count()));
    if (target < 2.0)
        throw ConfigError("sampling fraction " + format_double(phi) +
                          " targets fewer than 2 nodes on this graph");
}

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open dataset file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw DataError("failed reading dataset file: " + path.string());
    return std::move(buf).str();
}

Graph parse_dataset(const std::string& bytes, const std::filesystem::path& path) {
    std::istringstream in(bytes);
    try {
        return load_edge_list(in);
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// The three point statistics of one sampled subgraph.
struct PropertyValues {
    std::array<double, 3> v{};
    PathLengthMode mode = PathLengthMode::exact;
};

PropertyValues measure(const Graph& sub, const ExperimentConfig& cfg, std::uint64_t seed) {
    PropertyValues out;
    out.v[0] = average_degree(sub);
    out.v[1] = clustering(sub).average;
    PathLengthResult p =
        path_length_auto(sub, cfg.exact_path_limit, cfg.path_sources, seed ^ kPathSeedTag);
    out.v[2] = p.average;
    out.mode = p.mode;
    return out;
}

Ecdf ecdf_of(const HopHistogram& h) {
    std::vector<std::pair<double, std::uint64_t>> pairs;
    for (std::size_t d = 1; d < h.counts.size(); ++d)
        if (h.counts[d] > 0) pairs.emplace_back(static_cast<double>(d), h.counts[d]);
    return Ecdf::from_counts(pairs);
}

// Index of a method in cfg.methods, or -1 if not requested.
std::ptrdiff_t method_index(const ExperimentConfig& cfg, Method m) {
    auto it = std::find(cfg.methods.begin(), cfg.methods.end(), m);
    return it == cfg.methods.end() ? -1 : it - cfg.methods.begin();
}

// Runs the ES family (plain + induced) or the WES family for one
// (seed, phi) cell and hands each requested sample to `record`. The induced
// variant reuses the plain sample's node set, so the pairs share seeds.
template <typename RecordFn>
void run_families(const Graph& g, const ExperimentConfig& cfg, std::uint64_t seed, double phi,
                  RecordFn&& record) {
    struct Family {
        bool weighted;
        std::ptrdiff_t plain, induced;
    };
    const Family families[] = {
        {false, method_index(cfg, Method::es), method_index(cfg, Method::ties)},
        {true, method_index(cfg, Method::wes), method_index(cfg, Method::tiwes)},
    };
    for (const Family& f : families) {
        if (f.plain < 0 && f.induced < 0) continue;
        Rng rng(seed);
        Sample base = f.weighted ? wes_sample(g, phi, rng) : es_sample(g, phi, rng);
        if (f.plain >= 0) record(static_cast<std::size_t>(f.plain), base);
        if (f.induced >= 0) record(static_cast<std::size_t>(f.induced), totally_induce(g, base));
    }
}

std::filesystem::path write_file(const std::filesystem::path& path, auto&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file for writing: " + path.string());
    writer(out);
    out.flush();
    if (!out) throw DataError("failed writing output file: " + path.string());
    return path;
}

ordered_json ecdf_json(const Ecdf& e) {
    ordered_json j;
    j["x"] = std::vector<double>(e.support().begin(), e.support().end());
    j["cum_prob"] = std::vector<double>(e.cum_prob().begin(), e.cum_prob().end());
    return j;
}

ordered_json summary_json(const MetricsSummary& s) {
    ordered_json j;
    j["nodes"] = s.nodes;
    j["edges"] = s.edges;
    j["average_degree"] = s.average_degree;
    j["average_clustering"] = s.average_clustering;
    j["average_path_length"] = s.average_path_length;
    j["path_length_mode"] = mode_name(s.path_length_mode);
    j["path_length_sources"] = s.path_length_sources;
    return j;
}

// Original-graph statistics are cached beside the outputs; the cache is
// valid only for the same dataset bytes and path-length settings. Any
// problem with the cache file falls back to recomputation.
MetricsSummary original_summary_cached(const Graph& g, const ExperimentConfig& cfg,
                                       const std::string& dataset_name,
                                       std::uint64_t content_hash) {
    const std::filesystem::path cache_path =
        cfg.output_dir / (dataset_name + ".stats-cache.json");

    try {
        std::ifstream in(cache_path, std::ios::binary);
        if (in) {
            ordered_json j = ordered_json::parse(in, nullptr, /*allow_exceptions=*/false);
            if (!j.is_discarded() && j.at("content_hash").get<std::uint64_t>() == content_hash &&
                j.at("exact_path_limit").get<std::uint32_t>() == cfg.exact_path_limit &&
                j.at("path_sources").get<std::uint32_t>() == cfg.path_sources &&
                j.at("base_seed").get<std::uint64_t>() == cfg.base_seed &&
                j.at("nodes").get<std::uint64_t>() == g.node_count() &&
                j.at("edges").get<std::uint64_t>() == g.edge_count()) {
                MetricsSummary s;
                s.nodes = j.at("nodes").get<std::uint64_t>();
                s.edges = j.at("edges").get<std::uint64_t>();
                s.average_degree = j.at("average_degree").get<double>();
                s.average_clustering = j.at("average_clustering").get<double>();
                s.average_path_length = j.at("average_path_length").get<double>();
                s.path_length_mode = j.at("path_length_mode").get<std::string>() == "exact"
                                         ? PathLengthMode::exact
                                         : PathLengthMode::sampled;
                s.path_length_sources = j.at("path_length_sources").get<std::uint32_t>();
                return s;
            }
        }
    } catch (const std::exception&) {
        // stale or corrupt cache: recompute below
    }

    MetricsSummary s = summarize(g, cfg.exact_path_limit, cfg.path_sources,
                                 cfg.base_seed ^ kPathSeedTag);
    try {
        ordered_json j;
        j["content_hash"] = content_hash;
        j["exact_path_limit"] = cfg.exact_path_limit;
        j["path_sources"] = cfg.path_sources;
        j["base_seed"] = cfg.base_seed;
        ordered_json stats = summary_json(s);
        j.insert(stats.begin(), stats.end());
        write_file(cache_path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    } catch (const std::exception&) {
        // cache is an optimization only; failure to write it is not an error
    }
    return s;
}

} // namespace

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::string to_string(Property p) {
    switch (p) {
        case Property::degree: return "degree";
        case Property::clustering: return "clustering";
        case Property::path_length: return "path_length";
    }
    return "?";
}

std::string to_string(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "json";
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "dataset") {
        cfg.dataset_path = value;
    } else if (key == "methods") {
        std::vector<Method> methods;
        for (const std::string& tok : split_list(value)) {
            if (tok.empty()) throw ConfigError("empty entry in methods list");
            methods.push_back(parse_method(upper(tok)));
        }
        cfg.methods = std::move(methods);
    } else if (key == "fractions") {
        std::vector<double> fractions;
        for (const std::string& tok : split_list(value)) {
            if (tok.empty()) throw ConfigError("empty entry in fractions list");
            fractions.push_back(parse_double(tok, key));
        }
        cfg.fractions = std::move(fractions);
    } else if (key == "repetitions") {
        cfg.repetitions = parse_unsigned<std::uint32_t>(value, key);
    } else if (key == "base_seed") {
        cfg.base_seed = parse_unsigned<std::uint64_t>(value, key);
    } else if (key == "phi_dist") {
        cfg.phi_dist = parse_double(value, key);
    } else if (key == "exact_path_limit") {
        cfg.exact_path_limit = parse_unsigned<std::uint32_t>(value, key);
    } else if (key == "path_sources") {
        cfg.path_sources = parse_unsigned<std::uint32_t>(value, key);
    } else if (key == "output_dir") {
        cfg.output_dir = value;
    } else if (key == "format") {
        if (value == "csv")
            cfg.output_format = OutputFormat::csv;
        else if (value == "json")
            cfg.output_format = OutputFormat::json;
        else
            throw ConfigError("unknown output format '" + value + "' (expected csv or json)");
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());

    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + " line " + std::to_string(lineno) +
                              ": expected key=value");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path.string() + " line " + std::to_string(lineno) +
                              ": missing key before '='");
        try {
            apply_config_entry(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(path.string() + " line " + std::to_string(lineno) + ": " +
                              e.what());
        }
    }
    return cfg;
}

Graph load_dataset(const std::filesystem::path& path) {
    return parse_dataset(read_file_bytes(path), path);
}

std::string dataset_name_of(const std::filesystem::path& path) {
    std::string stem = path.stem().string();
    return stem.empty() ? std::string("dataset") : stem;
}

PointStatsReport run_point_statistics(const Graph& g, const std::string& dataset_name,
                                      const ExperimentConfig& cfg,
                                      const MetricsSummary* original) {
    validate_common(cfg);
    if (cfg.fractions.empty()) throw ConfigError("no sampling fractions configured");
    for (double phi : cfg.fractions) check_fraction(phi, g);

    PointStatsReport report;
    report.dataset = dataset_name;
    report.original = original ? *original
                               : summarize(g, cfg.exact_path_limit, cfg.path_sources,
                                           cfg.base_seed ^ kPathSeedTag);
    const std::array<double, 3> orig_vals = {report.original.average_degree,
                                             report.original.average_clustering,
                                             report.original.average_path_length};

    const std::size_t nm = cfg.methods.size();
    const std::size_t nf = cfg.fractions.size();
    const std::size_t nr = cfg.repetitions;
    std::vector<double> vals(nm * nf * 3 * nr, 0.0);
    auto value_at = [&](std::size_t mi, std::size_t fi, std::size_t pi,
                        std::size_t ri) -> double& {
        return vals[((mi * nf + fi) * 3 + pi) * nr + ri];
    };
    report.cells.resize(nm * nf * nr);

    for (std::size_t ri = 0; ri < nr; ++ri) {
        const std::uint64_t seed = cfg.base_seed + ri;
        for (std::size_t fi = 0; fi < nf; ++fi) {
            const double phi = cfg.fractions[fi];
            run_families(g, cfg, seed, phi, [&](std::size_t mi, const Sample& s) {
                Graph sub = sample_subgraph(g, s);
                PropertyValues pv = measure(sub, cfg, seed);
                for (std::size_t pi = 0; pi < 3; ++pi) value_at(mi, fi, pi, ri) = pv.v[pi];
                report.cells[(mi * nf + fi) * nr + ri] =
                    CellInfo{cfg.methods[mi], phi,         static_cast<std::uint32_t>(ri),
                             s.node_ids.size(), s.edge_ids.size(), s.exhausted,
                             pv.mode};
            });
        }
    }

    for (std::size_t mi = 0; mi < nm; ++mi) {
        for (std::size_t pi = 0; pi < 3; ++pi) {
            for (std::size_t fi = 0; fi < nf; ++fi) {
                std::vector<double> ratios(nr);
                for (std::size_t ri = 0; ri < nr; ++ri)
                    ratios[ri] = value_at(mi, fi, pi, ri) / orig_vals[pi];
                PointStatsRow row;
                row.dataset = dataset_name;
                row.method = cfg.methods[mi];
                row.property = kProperties[pi];
                row.phi = cfg.fractions[fi];
                if (nr >= 2) {
                    MeanCi ci = mean_ci(ratios);
                    row.mean_ratio = ci.mean;
                    row.ci_low = ci.lower;
                    row.ci_high = ci.upper;
                    row.ci_defined = true;
                } else {
                    row.mean_ratio = ratios[0];
                    row.ci_low = row.ci_high = ratios[0];
                    row.ci_defined = false;
                }
                report.rows.push_back(std::move(row));
            }

            std::vector<double> orig_rep(nf * nr, orig_vals[pi]);
            std::vector<double> sampled;
            sampled.reserve(nf * nr);
            for (std::size_t fi = 0; fi < nf; ++fi)
                for (std::size_t ri = 0; ri < nr; ++ri)
                    sampled.push_back(value_at(mi, fi, pi, ri));
            report.rmse_rows.push_back(
                {dataset_name, cfg.methods[mi], kProperties[pi], rmse(orig_rep, sampled)});
        }
    }
    return report;
}

PointStatsReport run_point_statistics(const ExperimentConfig& cfg) {
    if (cfg.dataset_path.empty()) throw ConfigError("no dataset configured");
    validate_common(cfg);
    if (cfg.fractions.empty()) throw ConfigError("no sampling fractions configured");
    std::string bytes = read_file_bytes(cfg.dataset_path);
    Graph g = parse_dataset(bytes, cfg.dataset_path);
    for (double phi : cfg.fractions) check_fraction(phi, g);

    std::filesystem::create_directories(cfg.output_dir);
    const std::string name = dataset_name_of(cfg.dataset_path);
    MetricsSummary original = original_summary_cached(g, cfg, name, fnv1a(bytes));
    PointStatsReport report = run_point_statistics(g, name, cfg, &original);
    write_report_files(report, cfg);
    return report;
}

DistributionReport run_distributions(const Graph& g, const std::string& dataset_name,
                                     const ExperimentConfig& cfg) {
    validate_common(cfg);
    check_fraction(cfg.phi_dist, g);

    DistributionReport report;
    report.dataset = dataset_name;
    report.phi = cfg.phi_dist;
    report.original[0] = Ecdf::from_values(degree_values(g));
    report.original[1] = Ecdf::from_values(clustering(g).per_node);
    report.original[2] = ecdf_of(
        path_length_auto(g, cfg.exact_path_limit, cfg.path_sources, cfg.base_seed ^ kPathSeedTag)
            .histogram);

    const std::size_t nm = cfg.methods.size();
    const std::size_t nr = cfg.repetitions;
    std::vector<std::array<double, 3>> ks_sum(nm, {0.0, 0.0, 0.0});
    std::vector<std::array<Ecdf, 3>> first(nm);

    for (std::size_t ri = 0; ri < nr; ++ri) {
        const std::uint64_t seed = cfg.base_seed + ri;
        run_families(g, cfg, seed, cfg.phi_dist, [&](std::size_t mi, const Sample& s) {
            Graph sub = sample_subgraph(g, s);
            std::array<Ecdf, 3> e;
            e[0] = Ecdf::from_values(degree_values(sub));
            e[1] = Ecdf::from_values(clustering(sub).per_node);
            e[2] = ecdf_of(path_length_auto(sub, cfg.exact_path_limit, cfg.path_sources,
                                            seed ^ kPathSeedTag)
                               .histogram);
            for (std::size_t pi = 0; pi < 3; ++pi)
                ks_sum[mi][pi] += ks_distance(report.original[pi], e[pi]);
            if (ri == 0) first[mi] = std::move(e);
        });
    }

    for (std::size_t mi = 0; mi < nm; ++mi) {
        for (std::size_t pi = 0; pi < 3; ++pi) {
            report.ks_rows.push_back({dataset_name, cfg.methods[mi], kProperties[pi],
                                      ks_sum[mi][pi] / static_cast<double>(nr)});
            report.sampled.push_back(
                {cfg.methods[mi], kProperties[pi], std::move(first[mi][pi])});
        }
    }
    return report;
}

DistributionReport run_distributions(const ExperimentConfig& cfg) {
    if (cfg.dataset_path.empty()) throw ConfigError("no dataset configured");
    validate_common(cfg);
    Graph g = load_dataset(cfg.dataset_path);
    DistributionReport report = run_distributions(g, dataset_name_of(cfg.dataset_path), cfg);
    write_report_files(report, cfg);
    return report;
}

void write_metrics_json(std::ostream& out, const MetricsSummary& s) {
    out << summary_json(s).dump(2) << '\n';
}

void write_point_stats_csv(std::ostream& out, const PointStatsReport& r) {
    out << "dataset,method,property,phi,mean_ratio,ci_low,ci_high\n";
    for (const PointStatsRow& row : r.rows)
        out << row.dataset << ',' << to_string(row.method) << ',' << to_string(row.property)
            << ',' << format_double(row.phi) << ',' << format_double(row.mean_ratio) << ','
            << format_double(row.ci_low) << ',' << format_double(row.ci_high) << '\n';
}

void write_rmse_csv(std::ostream& out, const PointStatsReport& r) {
    out << "dataset,method,property,rmse\n";
    for (const RmseRow& row : r.rmse_rows)
        out << row.dataset << ',' << to_string(row.method) << ',' << to_string(row.property)
            << ',' << format_double(row.rmse) << '\n';
}

void write_ks_csv(std::ostream& out, const DistributionReport& r) {
    out << "dataset,method,property,ks_mean\n";
    for (const KsRow& row : r.ks_rows)
        out << row.dataset << ',' << to_string(row.method) << ',' << to_string(row.property)
            << ',' << format_double(row.ks_mean) << '\n';
}

void write_ecdf_csv(std::ostream& out, const Ecdf& e) {
    out << "x,cum_prob\n";
    std::span<const double> xs = e.support();
    std::span<const double> ps = e.cum_prob();
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << format_double(xs[i]) << ',' << format_double(ps[i]) << '\n';
}

void write_point_stats_json(std::ostream& out, const PointStatsReport& r) {
    ordered_json j;
    j["dataset"] = r.dataset;
    j["original"] = summary_json(r.original);
    j["rows"] = ordered_json::array();
    for (const PointStatsRow& row : r.rows) {
        ordered_json o;
        o["dataset"] = row.dataset;
        o["method"] = to_string(row.method);
        o["property"] = to_string(row.property);
        o["phi"] = row.phi;
        o["mean_ratio"] = row.mean_ratio;
        o["ci_low"] = row.ci_low;
        o["ci_high"] = row.ci_high;
        o["ci_defined"] = row.ci_defined;
        j["rows"].push_back(std::move(o));
    }
    j["rmse"] = ordered_json::array();
    for (const RmseRow& row : r.rmse_rows) {
        ordered_json o;
        o["dataset"] = row.dataset;
        o["method"] = to_string(row.method);
        o["property"] = to_string(row.property);
        o["rmse"] = row.rmse;
        j["rmse"].push_back(std::move(o));
    }
    j["cells"] = ordered_json::array();
    for (const CellInfo& c : r.cells) {
        ordered_json o;
        o["method"] = to_string(c.method);
        o["phi"] = c.phi;
        o["repetition"] = c.repetition;
        o["sampled_nodes"] = c.sampled_nodes;
        o["sampled_edges"] = c.sampled_edges;
        o["exhausted"] = c.exhausted;
        o["path_length_mode"] = mode_name(c.path_length_mode);
        j["cells"].push_back(std::move(o));
    }
    out << j.dump(2) << '\n';
}

void write_distributions_json(std::ostream& out, const DistributionReport& r) {
    ordered_json j;
    j["dataset"] = r.dataset;
    j["phi"] = r.phi;
    j["original"] = ordered_json::object();
    for (std::size_t pi = 0; pi < 3; ++pi)
        j["original"][to_string(kProperties[pi])] = ecdf_json(r.original[pi]);
    j["ks"] = ordered_json::array();
    for (const KsRow& row : r.ks_rows) {
        ordered_json o;
        o["dataset"] = row.dataset;
        o["method"] = to_string(row.method);
        o["property"] = to_string(row.property);
        o["ks_mean"] = row.ks_mean;
        j["ks"].push_back(std::move(o));
    }
    j["sampled"] = ordered_json::array();
    for (const EcdfEntry& e : r.sampled) {
        ordered_json o;
        o["method"] = to_string(e.method);
        o["property"] = to_string(e.property);
        ordered_json table = ecdf_json(e.ecdf);
        o.insert(table.begin(), table.end());
        j["sampled"].push_back(std::move(o));
    }
    out << j.dump(2) << '\n';
}

std::vector<std::filesystem::path> write_report_files(const PointStatsReport& r,
                                                      const ExperimentConfig& cfg) {
    std::filesystem::create_directories(cfg.output_dir);
    std::vector<std::filesystem::path> written;
    if (cfg.output_format == OutputFormat::csv) {
        written.push_back(write_file(cfg.output_dir / "point_stats.csv",
                                     [&](std::ostream& o) { write_point_stats_csv(o, r); }));
        written.push_back(write_file(cfg.output_dir / "rmse.csv",
                                     [&](std::ostream& o) { write_rmse_csv(o, r); }));
    } else {
        written.push_back(write_file(cfg.output_dir / "point_stats.json",
                                     [&](std::ostream& o) { write_point_stats_json(o, r); }));
    }
    return written;
}

std::vector<std::filesystem::path> write_report_files(const DistributionReport& r,
                                                      const ExperimentConfig& cfg) {
    std::filesystem::create_directories(cfg.output_dir);
    std::vector<std::filesystem::path> written;
    if (cfg.output_format == OutputFormat::csv) {
        written.push_back(write_file(cfg.output_dir / "ks.csv",
                                     [&](std::ostream& o) { write_ks_csv(o, r); }));
        for (std::size_t pi = 0; pi < 3; ++pi) {
            std::filesystem::path p =
                cfg.output_dir / ("ecdf_original_" + to_string(kProperties[pi]) + ".csv");
            written.push_back(
                write_file(p, [&](std::ostream& o) { write_ecdf_csv(o, r.original[pi]); }));
        }
        for (const EcdfEntry& e : r.sampled) {
            std::filesystem::path p =
                cfg.output_dir /
                ("ecdf_" + to_string(e.method) + "_" + to_string(e.property) + ".csv");
            written.push_back(
                write_file(p, [&](std::ostream& o) { write_ecdf_csv(o, e.ecdf); }));
        }
    } else {
        written.push_back(write_file(cfg.output_dir / "distributions.json",
                                     [&](std::ostream& o) { write_distributions_json(o, r); }));
    }
    return written;
}

} // namespace wes
