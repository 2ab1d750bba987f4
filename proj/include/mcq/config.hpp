// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * JSON loading for ExperimentConfig. Keys mirror the struct's field names;
 * unknown keys are rejected so typos do not silently fall back to defaults.
 *
 *     {
 *       "partitions": [[6, 2], [4, 3]],
 *       "architectures": ["ring", "full"],
 *       "gpc_values": [1, 2, 5, 10],
 *       "total_gates": 2000,
 *       "checkpoint_start": 200,
 *       "checkpoint_step": 100,
 *       "ensemble_size": 100,
 *       "haar_samples": 1000,
 *       "seed": 7,
 *       "output_path": "results.csv",
 *       "include_monolithic": true
 *     }
 */
#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "runner.hpp"

namespace mcq {

inline ExperimentConfig config_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    ExperimentConfig config;
    try {
        for (const auto &[key, value] : doc.items()) {
            if (key == "partitions") {
                config.partitions.clear();
                for (const auto &entry : value) {
                    if (entry.is_array() && entry.size() == 2) {
                        config.partitions.push_back(
                            {entry[0].get<std::size_t>(),
                             entry[1].get<std::size_t>()});
                    } else if (entry.is_object()) {
                        config.partitions.push_back(
                            {entry.at("num_cores").get<std::size_t>(),
                             entry.at("qubits_per_core").get<std::size_t>()});
                    } else {
                        throw std::invalid_argument(
                            "partition entries must be [num_cores, "
                            "qubits_per_core]");
                    }
                }
            } else if (key == "architectures") {
                config.architectures.clear();
                for (const auto &entry : value) {
                    const auto name = entry.get<std::string>();
                    const auto arch = parse_architecture(name);
                    if (!arch) {
                        throw std::invalid_argument("unknown architecture '" +
                                                    name + "'");
                    }
                    config.architectures.push_back(*arch);
                }
            } else if (key == "gpc_values") {
                config.gpc_values = value.get<std::vector<std::size_t>>();
            } else if (key == "total_gates") {
                config.total_gates = value.get<std::size_t>();
            } else if (key == "checkpoint_start") {
                config.checkpoint_start = value.get<std::size_t>();
            } else if (key == "checkpoint_step") {
                config.checkpoint_step = value.get<std::size_t>();
            } else if (key == "checkpoints") {
                config.checkpoints = value.get<std::vector<std::size_t>>();
            } else if (key == "ensemble_size") {
                config.ensemble_size = value.get<std::size_t>();
            } else if (key == "haar_samples") {
                config.haar_samples = value.get<std::size_t>();
            } else if (key == "seed") {
                config.seed = value.get<std::uint64_t>();
            } else if (key == "output_path") {
                config.output_path = value.get<std::string>();
            } else if (key == "include_monolithic") {
                config.include_monolithic = value.get<bool>();
            } else if (key == "memory_budget_mb") {
                config.memory_budget_mb = value.get<std::size_t>();
            } else {
                throw std::invalid_argument("unknown config key '" + key +
                                            "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed config: ") +
                                    e.what());
    }
    return config;
}

inline ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument("config '" + path +
                                    "' is not valid JSON: " + e.what());
    }
    return config_from_json(doc);
}

} // namespace mcq
