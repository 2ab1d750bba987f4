// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: run / sweep / haar / stream.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcq/config.hpp"
#include "mcq/mcq.hpp"

namespace {

namespace fs = std::filesystem;

/// results.csv -> results_summary.csv
fs::path summary_path_for(const fs::path &results) {
    fs::path out = results;
    out.replace_filename(results.stem().string() + "_summary" +
                         results.extension().string());
    return out;
}

std::ofstream open_output(const fs::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write output file '" +
                                 path.string() + "'");
    }
    return out;
}

/// Output streams for a run, opened before any simulation so that an
/// unwritable path fails immediately. Empty path means summary to stdout.
class RunOutputs {
  public:
    explicit RunOutputs(const std::string &out_path) {
        if (out_path.empty()) {
            return;
        }
        results_path_ = out_path;
        summary_path_ = summary_path_for(results_path_);
        results_ = open_output(results_path_);
        summary_ = open_output(summary_path_);
    }

    void write(const std::vector<mcq::ExperimentResult> &results) {
        if (!results_) {
            mcq::write_summary_csv(std::cout, results);
            return;
        }
        mcq::write_results_csv(*results_, results);
        mcq::write_summary_csv(*summary_, results);
        if (!results_->flush() || !summary_->flush()) {
            throw std::runtime_error("failed writing results to '" +
                                     results_path_.string() + "'");
        }
        std::cerr << "wrote " << results_path_.string() << " and "
                  << summary_path_.string() << '\n';
    }

  private:
    fs::path results_path_;
    fs::path summary_path_;
    std::optional<std::ofstream> results_;
    std::optional<std::ofstream> summary_;
};

mcq::RunOptions run_options(std::size_t threads, bool quiet) {
    mcq::RunOptions options;
    options.threads = threads;
    if (!quiet) {
        options.on_cell_done = [](const mcq::ExperimentResult &r,
                                  std::size_t done, std::size_t total) {
            std::cerr << '[' << done << '/' << total << "] "
                      << r.cell.describe();
            if (r.id_h) {
                std::cerr << " id_h=" << mcq::format_real(*r.id_h);
            }
            std::cerr << '\n';
        };
    }
    return options;
}

mcq::Architecture architecture_or_throw(const std::string &name) {
    auto arch = mcq::parse_architecture(name);
    if (!arch) {
        throw std::invalid_argument("unknown architecture '" + name + "'");
    }
    return *arch;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Random multicore circuit complexity benchmarks"};
    app.require_subcommand(1);

    std::size_t threads = mcq::default_thread_count();
    bool quiet = false;
    app.add_option("--threads", threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    app.add_flag("-q,--quiet", quiet, "Suppress progress output");

    // run
    auto *run = app.add_subcommand("run", "Execute an experiment config");
    std::string config_path;
    std::string run_out;
    std::optional<std::uint64_t> run_seed;
    std::optional<std::size_t> run_ensemble;
    run->add_option("--config", config_path, "JSON experiment config")
        ->required();
    run->add_option("--out", run_out,
                    "Per-checkpoint CSV; a _summary CSV is written alongside");
    run->add_option("--seed", run_seed, "Override the config seed");
    run->add_option("--ensemble", run_ensemble, "Override ensemble_size");
    run->add_option("--threads", threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    // sweep
    auto *sweep = app.add_subcommand(
        "sweep", "GPC sweep for one architecture and partition");
    std::string sweep_arch;
    std::size_t cores = 0;
    std::size_t qubits_per_core = 0;
    std::vector<std::size_t> gpc_values = mcq::kDefaultGpcGrid;
    std::uint64_t seed = 0;
    std::size_t ensemble = 100;
    std::size_t haar_samples = 1000;
    std::size_t gates = mcq::kDefaultTotalGates;
    std::string sweep_out;
    sweep->add_option("--arch", sweep_arch,
                      "linear, ring, star, full or monolithic")
        ->required();
    sweep->add_option("--cores", cores)->required();
    sweep->add_option("--qubits-per-core", qubits_per_core)->required();
    sweep->add_option("--gpc", gpc_values, "Comma-separated GPC values")
        ->delimiter(',');
    sweep->add_option("--seed", seed);
    sweep->add_option("--ensemble", ensemble);
    sweep->add_option("--haar-samples", haar_samples);
    sweep->add_option("--gates", gates);
    sweep->add_option("--out", sweep_out,
                      "Per-checkpoint CSV; summary goes to stdout if omitted");
    sweep->add_option("--threads", threads)->check(CLI::PositiveNumber);

    // haar
    auto *haar = app.add_subcommand("haar", "Emit a Haar reference curve");
    std::size_t haar_qubits = 0;
    std::string haar_out;
    haar->add_option("--qubits", haar_qubits)->required();
    haar->add_option("--samples", haar_samples);
    haar->add_option("--seed", seed);
    haar->add_option("--out", haar_out);

    // stream
    auto *stream = app.add_subcommand("stream", "Dump a gate stream");
    std::string stream_arch;
    std::size_t stream_gpc = 1;
    std::string stream_out;
    stream->add_option("--arch", stream_arch)->required();
    stream->add_option("--cores", cores)->required();
    stream->add_option("--qubits-per-core", qubits_per_core)->required();
    stream->add_option("--gpc", stream_gpc)->required();
    stream->add_option("--gates", gates);
    stream->add_option("--seed", seed);
    stream->add_option("--out", stream_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            mcq::ExperimentConfig config = mcq::load_config(config_path);
            if (run_seed) {
                config.seed = *run_seed;
            }
            if (run_ensemble) {
                config.ensemble_size = *run_ensemble;
            }
            const std::string out =
                run_out.empty() ? config.output_path : run_out;
            RunOutputs outputs(out);
            outputs.write(
                mcq::run_experiment(config, run_options(threads, quiet)));
        } else if (*sweep) {
            mcq::ExperimentConfig config;
            config.architectures = {architecture_or_throw(sweep_arch)};
            config.partitions = {{cores, qubits_per_core}};
            config.gpc_values = gpc_values;
            config.total_gates = gates;
            if (gates < config.checkpoint_start) {
                config.checkpoint_start = gates;
            }
            config.ensemble_size = ensemble;
            config.haar_samples = haar_samples;
            config.seed = seed;
            RunOutputs outputs(sweep_out);
            outputs.write(
                mcq::run_experiment(config, run_options(threads, quiet)));
        } else if (*haar) {
            const auto curve = mcq::haar_reference(
                haar_qubits, haar_samples, mcq::haar_seed(seed, haar_qubits));
            if (haar_out.empty()) {
                mcq::write_curve_csv(std::cout, curve);
            } else {
                auto out = open_output(haar_out);
                mcq::write_curve_csv(out, curve);
            }
        } else if (*stream) {
            const mcq::CircuitSpec spec{
                mcq::Partition(cores, qubits_per_core),
                architecture_or_throw(stream_arch), stream_gpc, gates, seed};
            const auto events = mcq::generate_stream(spec);
            if (stream_out.empty()) {
                for (const auto &e : events) {
                    mcq::write_event(std::cout, e);
                }
            } else {
                auto out = open_output(stream_out);
                for (const auto &e : events) {
                    mcq::write_event(out, e);
                }
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
