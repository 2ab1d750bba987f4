// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Core partitions and inter-core edge sets.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "statevector.hpp"

namespace mcq {

enum class Architecture : std::uint8_t {
    Linear,
    Ring,
    Star,
    FullyConnected,
    Monolithic
};

inline constexpr Architecture kAllArchitectures[] = {
    Architecture::Linear, Architecture::Ring, Architecture::Star,
    Architecture::FullyConnected, Architecture::Monolithic};

/// Lowercase name used in configs and CSV output.
inline std::string_view to_string(Architecture arch) {
    switch (arch) {
    case Architecture::Linear:
        return "linear";
    case Architecture::Ring:
        return "ring";
    case Architecture::Star:
        return "star";
    case Architecture::FullyConnected:
        return "full";
    case Architecture::Monolithic:
        return "monolithic";
    }
    return "?";
}

inline std::optional<Architecture> parse_architecture(std::string_view name) {
    for (Architecture arch : kAllArchitectures) {
        if (to_string(arch) == name) {
            return arch;
        }
    }
    return std::nullopt;
}

/// Equal-sized split of the register: core c owns global qubits
/// [c * qubits_per_core, (c + 1) * qubits_per_core).
class Partition {
  public:
    Partition(std::size_t num_cores, std::size_t qubits_per_core)
        : num_cores_{num_cores}, qubits_per_core_{qubits_per_core} {
        if (num_cores < 1) {
            throw std::invalid_argument("partition needs at least one core");
        }
        if (qubits_per_core < 2) {
            throw std::invalid_argument(
                "each core needs at least two qubits, got " +
                std::to_string(qubits_per_core));
        }
    }

    [[nodiscard]] std::size_t num_cores() const { return num_cores_; }
    [[nodiscard]] std::size_t qubits_per_core() const {
        return qubits_per_core_;
    }
    [[nodiscard]] std::size_t total_qubits() const {
        return num_cores_ * qubits_per_core_;
    }

    [[nodiscard]] Qubit first_qubit(std::size_t core) const {
        return static_cast<Qubit>(core * qubits_per_core_);
    }

    [[nodiscard]] std::size_t core_of(Qubit q) const {
        return q / qubits_per_core_;
    }

    friend bool operator==(const Partition &, const Partition &) = default;

  private:
    std::size_t num_cores_;
    std::size_t qubits_per_core_;
};

struct CoreEdge {
    std::size_t a;
    std::size_t b;
    friend bool operator==(const CoreEdge &, const CoreEdge &) = default;
};

/// Inter-core edges in lexicographic order, each with a < b and no
/// duplicates. The star hub is core 0.
inline std::vector<CoreEdge> edges(Architecture arch, std::size_t num_cores) {
    if (num_cores == 0) {
        throw std::invalid_argument("architecture needs at least one core");
    }
    if (arch == Architecture::Monolithic) {
        if (num_cores != 1) {
            throw std::invalid_argument(
                "monolithic architecture requires exactly one core");
        }
        return {};
    }
    if (num_cores == 1) {
        throw std::invalid_argument(std::string(to_string(arch)) +
                                    " architecture requires at least two "
                                    "cores; use monolithic");
    }

    std::vector<CoreEdge> out;
    switch (arch) {
    case Architecture::Linear:
        for (std::size_t c = 0; c + 1 < num_cores; ++c) {
            out.push_back({c, c + 1});
        }
        break;
    case Architecture::Ring:
        out.push_back({0, 1});
        if (num_cores > 2) {
            out.push_back({0, num_cores - 1});
        }
        for (std::size_t c = 1; c + 1 < num_cores; ++c) {
            out.push_back({c, c + 1});
        }
        break;
    case Architecture::Star:
        for (std::size_t c = 1; c < num_cores; ++c) {
            out.push_back({0, c});
        }
        break;
    case Architecture::FullyConnected:
        for (std::size_t a = 0; a < num_cores; ++a) {
            for (std::size_t b = a + 1; b < num_cores; ++b) {
                out.push_back({a, b});
            }
        }
        break;
    case Architecture::Monolithic:
        break;
    }
    return out;
}

/// SW: one SWAP per edge per communication round.
inline std::size_t swaps_per_round(Architecture arch, std::size_t num_cores) {
    return edges(arch, num_cores).size();
}

} // namespace mcq
