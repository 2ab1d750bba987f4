// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Experiment orchestration: GPC sweeps over architectures and partitions.
 *
 * Every (architecture, partition, gpc) cell runs an ensemble of random
 * circuits. At each checkpoint the ensemble's fluctuation curve is compared
 * with a Haar reference for the same qubit count, giving one D_H per
 * checkpoint and one ID_H per cell.
 *
 * Circuit seeds are derived from the experiment seed and the cell's
 * content (not its position in the config), and results are gathered by
 * circuit index, so output does not depend on the worker count.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "complexity.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "topology.hpp"

namespace mcq {

inline const std::vector<std::size_t> kDefaultGpcGrid = {
    1, 2, 3, 5, 7, 10, 15, 20, 30, 50, 75, 100, 150, 200};

struct PartitionShape {
    std::size_t num_cores;
    std::size_t qubits_per_core;
    friend bool operator==(const PartitionShape &,
                           const PartitionShape &) = default;
};

struct ExperimentConfig {
    std::vector<PartitionShape> partitions{{6, 2}, {4, 3}, {3, 4}, {2, 6}};
    std::vector<Architecture> architectures{
        Architecture::FullyConnected, Architecture::Star, Architecture::Ring,
        Architecture::Linear};
    std::vector<std::size_t> gpc_values{kDefaultGpcGrid};
    std::size_t total_gates{kDefaultTotalGates};
    std::size_t checkpoint_start{200};
    std::size_t checkpoint_step{100};
    /// Overrides start/step when non-empty.
    std::vector<std::size_t> checkpoints{};
    std::size_t ensemble_size{100};
    std::size_t haar_samples{1000};
    std::uint64_t seed{0};
    std::string output_path{};
    /// Adds one single-core cell per distinct qubit count.
    bool include_monolithic{false};
    /// Ceiling on the snapshot storage of one cell plus the largest Haar
    /// reference, in MiB.
    std::size_t memory_budget_mb{4096};

    [[nodiscard]] CheckpointSchedule schedule() const {
        if (!checkpoints.empty()) {
            return {checkpoints, total_gates};
        }
        return CheckpointSchedule::regular(checkpoint_start, checkpoint_step,
                                           total_gates);
    }
};

struct Cell {
    Architecture architecture;
    PartitionShape shape;
    std::size_t gpc;

    [[nodiscard]] std::size_t total_qubits() const {
        return shape.num_cores * shape.qubits_per_core;
    }
    [[nodiscard]] std::string describe() const {
        return std::string(to_string(architecture)) + " (" +
               std::to_string(shape.num_cores) + "," +
               std::to_string(shape.qubits_per_core) +
               ") gpc=" + std::to_string(gpc);
    }
};

struct ExperimentResult {
    Cell cell;
    std::size_t sw;
    double sw_over_gpc;
    std::vector<DhPoint> dh_points;
    /// Absent when the schedule has fewer than two checkpoints.
    std::optional<double> id_h;
};

inline std::vector<Cell> enumerate_cells(const ExperimentConfig &config) {
    std::vector<Cell> cells;
    for (Architecture arch : config.architectures) {
        for (const auto &shape : config.partitions) {
            for (std::size_t gpc : config.gpc_values) {
                cells.push_back({arch, shape, gpc});
            }
        }
    }
    if (config.include_monolithic) {
        std::set<std::size_t> seen;
        for (const auto &shape : config.partitions) {
            const std::size_t n = shape.num_cores * shape.qubits_per_core;
            if (seen.insert(n).second) {
                // gpc is irrelevant without interconnects; one round spans
                // the whole circuit.
                cells.push_back({Architecture::Monolithic, {1, n},
                                 config.total_gates});
            }
        }
    }
    return cells;
}

inline CircuitSpec make_spec(const Cell &cell, std::size_t total_gates,
                             std::uint64_t seed) {
    return {Partition(cell.shape.num_cores, cell.shape.qubits_per_core),
            cell.architecture, cell.gpc, total_gates, seed};
}

inline std::uint64_t circuit_seed(std::uint64_t experiment_seed,
                                  const Cell &cell,
                                  std::size_t circuit_index) {
    return derive_seed(experiment_seed,
                       {static_cast<std::uint64_t>(cell.architecture),
                        cell.shape.num_cores, cell.shape.qubits_per_core,
                        cell.gpc, circuit_index});
}

inline std::uint64_t haar_seed(std::uint64_t experiment_seed,
                               std::size_t num_qubits) {
    constexpr std::uint64_t kHaarTag = 0x4861617252656600ULL;
    return derive_seed(experiment_seed, {kHaarTag, num_qubits});
}

/// Throws std::invalid_argument naming the first offending field or cell.
inline void validate(const ExperimentConfig &config) {
    if (config.partitions.empty() && !config.include_monolithic) {
        throw std::invalid_argument("config lists no partitions");
    }
    if (config.ensemble_size < 2) {
        throw std::invalid_argument("ensemble_size must be at least 2");
    }
    if (config.haar_samples < 2) {
        throw std::invalid_argument("haar_samples must be at least 2");
    }
    if (config.total_gates < 1) {
        throw std::invalid_argument("total_gates must be at least 1");
    }
    for (std::size_t gpc : config.gpc_values) {
        if (gpc < 1) {
            throw std::invalid_argument("gpc values must be at least 1");
        }
    }
    (void)config.schedule();
    for (const Cell &cell : enumerate_cells(config)) {
        try {
            make_spec(cell, config.total_gates, 0).validate();
            if (cell.total_qubits() > kMaxHaarQubits) {
                throw std::invalid_argument("too many qubits");
            }
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("invalid cell " + cell.describe() +
                                        ": " + e.what());
        }
    }
}

inline std::size_t cell_memory_bytes(const ExperimentConfig &config,
                                     std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t snapshots =
        config.schedule().size() * config.ensemble_size;
    return (snapshots + config.haar_samples) * dim * sizeof(double);
}

struct RunOptions {
    std::size_t threads{1};
    /// Called after each cell completes, in cell order.
    std::function<void(const ExperimentResult &, std::size_t done,
                       std::size_t total)>
        on_cell_done{};
};

/// Runs one cell against a precomputed Haar reference.
inline ExperimentResult run_cell(const ExperimentConfig &config,
                                 const Cell &cell,
                                 const FluctuationCurve &haar,
                                 std::size_t threads) {
    const CheckpointSchedule schedule = config.schedule();
    const std::size_t members = config.ensemble_size;
    // curves[checkpoint][circuit]
    std::vector<std::vector<LorenzCurve>> curves(
        schedule.size(), std::vector<LorenzCurve>(members));

    parallel_for(members, threads, [&](std::size_t index) {
        const CircuitSpec spec = make_spec(
            cell, config.total_gates, circuit_seed(config.seed, cell, index));
        run_with_checkpoints<double>(
            spec, schedule,
            [&](std::size_t checkpoint, std::span<const double> probs) {
                std::vector<double> cumulants(probs.begin(), probs.end());
                detail::cumulate_descending(cumulants);
                curves[checkpoint][index] = LorenzCurve(std::move(cumulants));
            });
    });

    ExperimentResult result{cell, 0, 0.0, {}, std::nullopt};
    result.sw = swaps_per_round(cell.architecture, cell.shape.num_cores);
    result.sw_over_gpc =
        static_cast<double>(result.sw) / static_cast<double>(cell.gpc);
    for (std::size_t c = 0; c < schedule.size(); ++c) {
        const FluctuationCurve fc =
            fluctuation_curve(std::span<const LorenzCurve>(curves[c]));
        result.dh_points.push_back(
            {static_cast<double>(schedule.counts()[c]),
             distance_to_haar(fc, haar)});
        curves[c] = {};
    }
    if (result.dh_points.size() >= 2) {
        result.id_h = integrated_dh(result.dh_points);
    }
    return result;
}

/// Haar references keyed by qubit count, one per distinct n in the config.
inline std::map<std::size_t, FluctuationCurve>
haar_references(const ExperimentConfig &config, std::size_t threads) {
    std::vector<std::size_t> sizes;
    for (const Cell &cell : enumerate_cells(config)) {
        if (std::find(sizes.begin(), sizes.end(), cell.total_qubits()) ==
            sizes.end()) {
            sizes.push_back(cell.total_qubits());
        }
    }
    std::vector<FluctuationCurve> computed(sizes.size());
    parallel_for(sizes.size(), threads, [&](std::size_t i) {
        computed[i] = haar_reference(sizes[i], config.haar_samples,
                                     haar_seed(config.seed, sizes[i]));
    });
    std::map<std::size_t, FluctuationCurve> out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out.emplace(sizes[i], std::move(computed[i]));
    }
    return out;
}

inline std::vector<ExperimentResult>
run_experiment(const ExperimentConfig &config, const RunOptions &options = {}) {
    validate(config);
    const std::vector<Cell> cells = enumerate_cells(config);
    const std::size_t budget = config.memory_budget_mb * (std::size_t{1} << 20);
    for (const Cell &cell : cells) {
        if (cell_memory_bytes(config, cell.total_qubits()) > budget) {
            throw std::runtime_error(
                "cell " + cell.describe() + " needs " +
                std::to_string(cell_memory_bytes(config, cell.total_qubits()) >>
                               20) +
                " MiB, over the memory budget of " +
                std::to_string(config.memory_budget_mb) + " MiB");
        }
    }

    const auto haar = haar_references(config, options.threads);
    std::vector<ExperimentResult> results;
    results.reserve(cells.size());
    for (const Cell &cell : cells) {
        try {
            results.push_back(run_cell(config, cell,
                                       haar.at(cell.total_qubits()),
                                       options.threads));
        } catch (const std::exception &e) {
            throw std::runtime_error("cell " + cell.describe() +
                                     " failed: " + e.what());
        }
        if (options.on_cell_done) {
            options.on_cell_done(results.back(), results.size(), cells.size());
        }
    }
    return results;
}

/// 10 significant digits.
inline std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

namespace detail {
inline void write_cell_prefix(std::ostream &os, const ExperimentResult &r) {
    os << to_string(r.cell.architecture) << ',' << r.cell.shape.num_cores
       << ',' << r.cell.shape.qubits_per_core << ',' << r.cell.gpc << ','
       << r.sw << ',' << format_real(r.sw_over_gpc);
}
} // namespace detail

/// One row per checkpoint.
inline void write_results_csv(std::ostream &os,
                              std::span<const ExperimentResult> results) {
    os << "arch,n_cores,qubits_per_core,gpc,sw,sw_over_gpc,gate_count,dh\n";
    for (const auto &r : results) {
        for (const auto &point : r.dh_points) {
            detail::write_cell_prefix(os, r);
            os << ',' << format_real(point.gate_count) << ','
               << format_real(point.dh) << '\n';
        }
    }
}

/// One row per cell; id_h is left empty when the cell is not integrable.
inline void write_summary_csv(std::ostream &os,
                              std::span<const ExperimentResult> results) {
    os << "arch,n_cores,qubits_per_core,gpc,sw,sw_over_gpc,id_h\n";
    for (const auto &r : results) {
        detail::write_cell_prefix(os, r);
        os << ',';
        if (r.id_h) {
            os << format_real(*r.id_h);
        }
        os << '\n';
    }
}

/// Writes a fluctuation curve as `k,std` rows.
inline void write_curve_csv(std::ostream &os, const FluctuationCurve &curve) {
    os << "k,std\n";
    for (std::size_t k = 1; k <= curve.dimension(); ++k) {
        os << k << ',' << format_real(curve.at(k)) << '\n';
    }
}

} // namespace mcq
