// SPDX-License-Identifier: Apache-2.0
//
// Small library walkthrough: a 6-qubit register split into three 2-qubit
// cores on a ring, swept over a handful of GPC values.

#include <iostream>

#include "mcq/mcq.hpp"

int main() {
    mcq::ExperimentConfig config;
    config.partitions = {{3, 2}};
    config.architectures = {mcq::Architecture::Ring};
    config.gpc_values = {1, 3, 10, 40};
    config.total_gates = 400;
    config.checkpoint_start = 50;
    config.checkpoint_step = 50;
    config.ensemble_size = 40;
    config.haar_samples = 400;
    config.seed = 11;

    const auto results = mcq::run_experiment(config);
    for (const auto &r : results) {
        std::cout << r.cell.describe() << "  SW/GPC=" << r.sw_over_gpc
                  << "  ID_H=" << r.id_h.value_or(0.0) << '\n';
    }

    // A single circuit can also be inspected directly.
    const mcq::CircuitSpec spec{mcq::Partition(3, 2), mcq::Architecture::Ring,
                                2, 12, 5};
    for (const auto &event : mcq::generate_stream(spec)) {
        mcq::write_event(std::cout, event);
    }
}
