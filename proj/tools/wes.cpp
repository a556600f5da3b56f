#include <cctype>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wes/error.hpp"
#include "wes/experiment.hpp"
#include "wes/generators.hpp"
#include "wes/graph.hpp"
#include "wes/metrics.hpp"
#include "wes/rng.hpp"
#include "wes/sampler.hpp"

namespace {

// Writes to stdout when path is "-", else to the file.
void with_output(const std::string& path, auto&& writer) {
    if (path == "-") {
        writer(std::cout);
        std::cout.flush();
        if (!std::cout) throw wes::DataError("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wes::DataError("cannot open output file for writing: " + path);
    writer(out);
    out.flush();
    if (!out) throw wes::DataError("failed writing output file: " + path);
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

struct SampleArgs {
    std::string input;
    std::string method;
    double phi = 0.0;
    std::uint64_t seed = 1;
    std::string output = "-";
};

void run_sample(const SampleArgs& a) {
    wes::Graph g = wes::load_dataset(a.input);
    wes::Method m = wes::parse_method(upper(a.method));
    wes::Rng rng(a.seed);
    wes::Sample s;
    switch (m) {
        case wes::Method::es: s = wes::es_sample(g, a.phi, rng); break;
        case wes::Method::wes: s = wes::wes_sample(g, a.phi, rng); break;
        case wes::Method::ties: s = wes::totally_induce(g, wes::es_sample(g, a.phi, rng)); break;
        case wes::Method::tiwes: s = wes::totally_induce(g, wes::wes_sample(g, a.phi, rng)); break;
    }
    with_output(a.output, [&](std::ostream& out) { wes::write_sample(out, g, s); });
}

struct MetricsArgs {
    std::string input;
    std::uint32_t exact_path_limit = 20000;
    std::uint32_t path_sources = 256;
    std::uint64_t seed = 1;
    std::string output = "-";
};

void run_metrics(const MetricsArgs& a) {
    if (a.path_sources == 0) throw wes::ConfigError("path-sources must be at least 1");
    wes::Graph g = wes::load_dataset(a.input);
    wes::MetricsSummary s = wes::summarize(g, a.exact_path_limit, a.path_sources, a.seed);
    with_output(a.output, [&](std::ostream& out) { wes::write_metrics_json(out, s); });
}

// Shared flag set of point-stats and distributions: a key=value config
// file plus per-key override flags. Flags win over the file.
struct ConfigArgs {
    std::string config_file;
    std::string dataset, methods, fractions, repetitions, base_seed, phi_dist;
    std::string exact_path_limit, path_sources, output_dir, format;
};

void add_config_flags(CLI::App* sub, ConfigArgs& a) {
    sub->add_option("-c,--config", a.config_file, "key=value config file");
    sub->add_option("-d,--dataset", a.dataset, "edge-list file to sample from");
    sub->add_option("--methods", a.methods, "comma list of ES,WES,TIES,TIWES");
    sub->add_option("--fractions", a.fractions, "comma list of sampling fractions");
    sub->add_option("--repetitions", a.repetitions, "repetitions per cell");
    sub->add_option("--base-seed", a.base_seed, "seed of repetition 0 (repetition r uses base+r)");
    sub->add_option("--phi-dist", a.phi_dist, "sampling fraction for distribution reports");
    sub->add_option("--exact-path-limit", a.exact_path_limit,
                    "max node count for exact path length");
    sub->add_option("--path-sources", a.path_sources, "BFS sources beyond the exact limit");
    sub->add_option("--output-dir", a.output_dir, "directory for report files");
    sub->add_option("--format", a.format, "csv or json");
}

wes::ExperimentConfig build_config(const CLI::App* sub, const ConfigArgs& a) {
    wes::ExperimentConfig cfg;
    if (!a.config_file.empty()) cfg = wes::load_config_file(a.config_file);
    auto override_if = [&](const std::string& flag, const std::string& key,
                           const std::string& value) {
        if (sub->count(flag)) wes::apply_config_entry(cfg, key, value);
    };
    override_if("--dataset", "dataset", a.dataset);
    override_if("--methods", "methods", a.methods);
    override_if("--fractions", "fractions", a.fractions);
    override_if("--repetitions", "repetitions", a.repetitions);
    override_if("--base-seed", "base_seed", a.base_seed);
    override_if("--phi-dist", "phi_dist", a.phi_dist);
    override_if("--exact-path-limit", "exact_path_limit", a.exact_path_limit);
    override_if("--path-sources", "path_sources", a.path_sources);
    override_if("--output-dir", "output_dir", a.output_dir);
    override_if("--format", "format", a.format);
    return cfg;
}

struct GenArgs {
    std::string kind;
    std::uint32_t nodes = 1;
    double prob = 0.0;
    std::uint64_t seed = 0;
    std::string output = "-";
};

void run_gen(const GenArgs& a) {
    wes::GraphSpec spec;
    spec.kind = wes::parse_kind(a.kind);
    spec.n = a.nodes;
    spec.p = a.prob;
    spec.seed = a.seed;
    wes::Graph g = wes::make_graph(spec);
    with_output(a.output, [&](std::ostream& out) { wes::write_edge_list(out, g); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-sampling toolkit: ES/WES/TIES/TIWES samplers, graph metrics, "
                 "experiment reports"};
    app.require_subcommand(1);

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand("sample", "draw one sample and print it");
    sample->add_option("-i,--input", sample_args.input, "edge-list file")->required();
    sample->add_option("-m,--method", sample_args.method, "ES, WES, TIES or TIWES")->required();
    sample->add_option("-p,--phi", sample_args.phi, "target node fraction in (0,1]")->required();
    sample->add_option("-s,--seed", sample_args.seed, "RNG seed");
    sample->add_option("-o,--output", sample_args.output, "output file, '-' for stdout");
    sample->callback([&] { run_sample(sample_args); });

    MetricsArgs metrics_args;
    CLI::App* metrics = app.add_subcommand("metrics", "graph point statistics as JSON");
    metrics->add_option("-i,--input", metrics_args.input, "edge-list file")->required();
    metrics->add_option("--exact-path-limit", metrics_args.exact_path_limit,
                        "max node count for exact path length");
    metrics->add_option("--path-sources", metrics_args.path_sources,
                        "BFS sources beyond the exact limit");
    metrics->add_option("-s,--seed", metrics_args.seed, "seed for sampled-mode path length");
    metrics->add_option("-o,--output", metrics_args.output, "output file, '-' for stdout");
    metrics->callback([&] { run_metrics(metrics_args); });

    ConfigArgs point_args;
    CLI::App* point = app.add_subcommand(
        "point-stats", "ratio + CI rows per (method, property, fraction) and RMSE per "
                       "(method, property)");
    add_config_flags(point, point_args);
    point->callback([&] {
        wes::PointStatsReport r = wes::run_point_statistics(build_config(point, point_args));
        std::cout << r.dataset << ": " << r.rows.size() << " point-stat rows, "
                  << r.rmse_rows.size() << " rmse rows\n";
    });

    ConfigArgs dist_args;
    CLI::App* dist = app.add_subcommand(
        "distributions", "ECDF tables and mean KS distances at one sampling fraction");
    add_config_flags(dist, dist_args);
    dist->callback([&] {
        wes::DistributionReport r = wes::run_distributions(build_config(dist, dist_args));
        std::cout << r.dataset << ": " << r.ks_rows.size() << " ks rows, " << r.sampled.size()
                  << " sampled ecdf tables\n";
    });

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "write a synthetic graph as an edge list");
    gen->add_option("-k,--kind", gen_args.kind, "complete, path, star, cycle or er")->required();
    gen->add_option("-n,--nodes", gen_args.nodes, "node count")->required();
    gen->add_option("-p,--prob", gen_args.prob, "edge probability (er only)");
    gen->add_option("-s,--seed", gen_args.seed, "RNG seed (er only)");
    gen->add_option("-o,--output", gen_args.output, "output file, '-' for stdout");
    gen->callback([&] { run_gen(gen_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const wes::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const wes::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
