// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Random G3 circuits on a partitioned register.
 *
 * A stream is a repetition of rounds. Each round applies `gpc` local gates
 * on core 0, then on core 1, and so on, followed by one SWAP per
 * architecture edge between a random qubit of each endpoint core. Local
 * gates are uniform over {CNOT, H, T}; operands are uniform within the
 * core, and CNOT draws an ordered (control, target) pair. The stream stops
 * after exactly `total_gates` events, possibly mid-round.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "random.hpp"
#include "statevector.hpp"
#include "topology.hpp"

namespace mcq {

inline constexpr std::size_t kDefaultTotalGates = 2000;

struct CircuitSpec {
    Partition partition{1, 2};
    Architecture architecture{Architecture::Monolithic};
    std::size_t gpc{1};
    std::size_t total_gates{kDefaultTotalGates};
    std::uint64_t seed{0};

    /// Throws std::invalid_argument on an inconsistent spec.
    void validate() const {
        if (gpc < 1) {
            throw std::invalid_argument("gates per core must be at least 1");
        }
        if (total_gates < 1) {
            throw std::invalid_argument("total gate count must be at least 1");
        }
        (void)edges(architecture, partition.num_cores());
    }

    [[nodiscard]] std::size_t round_length() const {
        return partition.num_cores() * gpc +
               swaps_per_round(architecture, partition.num_cores());
    }
};

struct GateEvent {
    std::size_t index{0};
    Gate gate{};
    friend bool operator==(const GateEvent &, const GateEvent &) = default;
};

/// Lazily produces the gate stream of a spec. Holds its own engine, so
/// separate streams never share RNG state.
class GateStream {
  public:
    explicit GateStream(const CircuitSpec &spec)
        : spec_{(spec.validate(), spec)},
          edges_{edges(spec.architecture, spec.partition.num_cores())},
          local_length_{spec.partition.num_cores() * spec.gpc},
          engine_{spec.seed} {}

    [[nodiscard]] bool done() const { return emitted_ >= spec_.total_gates; }
    [[nodiscard]] std::size_t emitted() const { return emitted_; }

    GateEvent next() {
        if (done()) {
            throw std::out_of_range("gate stream exhausted");
        }
        Gate gate = round_pos_ < local_length_
                        ? draw_local(round_pos_ / spec_.gpc)
                        : draw_swap(edges_[round_pos_ - local_length_]);
        if (++round_pos_ == local_length_ + edges_.size()) {
            round_pos_ = 0;
        }
        return {emitted_++, gate};
    }

  private:
    Gate draw_local(std::size_t core) {
        const std::uint64_t nq = spec_.partition.qubits_per_core();
        const Qubit base = spec_.partition.first_qubit(core);
        switch (uniform_below(engine_, 3)) {
        case 0: {
            const std::uint64_t pair = uniform_below(engine_, nq * (nq - 1));
            const auto control = static_cast<Qubit>(pair / (nq - 1));
            auto target = static_cast<Qubit>(pair % (nq - 1));
            if (target >= control) {
                ++target;
            }
            return Gate::cnot(base + control, base + target);
        }
        case 1:
            return Gate::h(base +
                           static_cast<Qubit>(uniform_below(engine_, nq)));
        default:
            return Gate::t(base +
                           static_cast<Qubit>(uniform_below(engine_, nq)));
        }
    }

    Gate draw_swap(const CoreEdge &edge) {
        const std::uint64_t nq = spec_.partition.qubits_per_core();
        const Qubit a = spec_.partition.first_qubit(edge.a) +
                        static_cast<Qubit>(uniform_below(engine_, nq));
        const Qubit b = spec_.partition.first_qubit(edge.b) +
                        static_cast<Qubit>(uniform_below(engine_, nq));
        return Gate::swap(a, b);
    }

    CircuitSpec spec_;
    std::vector<CoreEdge> edges_;
    std::size_t local_length_;
    Engine engine_;
    std::size_t round_pos_{0};
    std::size_t emitted_{0};
};

inline std::vector<GateEvent> generate_stream(const CircuitSpec &spec) {
    GateStream stream(spec);
    std::vector<GateEvent> out;
    out.reserve(spec.total_gates);
    while (!stream.done()) {
        out.push_back(stream.next());
    }
    return out;
}

/// `<index> <kind> <qubits...>`
inline void write_event(std::ostream &os, const GateEvent &event) {
    os << event.index << ' ' << gate_name(event.gate.type) << ' '
       << event.gate.first;
    if (event.gate.is_two_qubit()) {
        os << ' ' << event.gate.second;
    }
    os << '\n';
}

/// Strictly increasing gate counts at which probabilities are recorded,
/// ending at the total gate count.
class CheckpointSchedule {
  public:
    CheckpointSchedule(std::vector<std::size_t> counts,
                       std::size_t total_gates)
        : counts_{std::move(counts)} {
        if (counts_.empty()) {
            throw std::invalid_argument("checkpoint schedule is empty");
        }
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (counts_[i] == 0 || (i > 0 && counts_[i] <= counts_[i - 1])) {
                throw std::invalid_argument(
                    "checkpoints must be positive and strictly increasing");
            }
        }
        if (counts_.back() != total_gates) {
            throw std::invalid_argument(
                "last checkpoint must equal the total gate count " +
                std::to_string(total_gates));
        }
    }

    /// start, start + step, ... below total, then total itself.
    static CheckpointSchedule regular(std::size_t start, std::size_t step,
                                      std::size_t total_gates) {
        if (start < 1 || start > total_gates) {
            throw std::invalid_argument(
                "checkpoint start must lie in [1, total gates]");
        }
        if (step < 1) {
            throw std::invalid_argument("checkpoint step must be positive");
        }
        std::vector<std::size_t> counts;
        for (std::size_t g = start; g < total_gates; g += step) {
            counts.push_back(g);
        }
        counts.push_back(total_gates);
        return {std::move(counts), total_gates};
    }

    /// {200, 300, ..., 2000} for the default 2000-gate circuits.
    static CheckpointSchedule standard(std::size_t total_gates =
                                           kDefaultTotalGates) {
        return regular(200, 100, total_gates);
    }

    [[nodiscard]] const std::vector<std::size_t> &counts() const {
        return counts_;
    }
    [[nodiscard]] std::size_t size() const { return counts_.size(); }

  private:
    std::vector<std::size_t> counts_;
};

/// Evolves |0...0> through the stream and hands the probability vector to
/// `visit(checkpoint_index, probabilities)` after each scheduled gate count.
/// The span is only valid for the duration of the call.
template <class Real = double>
void run_with_checkpoints(
    const CircuitSpec &spec, const CheckpointSchedule &schedule,
    const std::function<void(std::size_t, std::span<const Real>)> &visit) {
    if (schedule.counts().back() != spec.total_gates) {
        throw std::invalid_argument(
            "checkpoint schedule does not end at the circuit's gate count");
    }
    GateStream stream(spec);
    auto state = new_zero_state<Real>(spec.partition.total_qubits());
    std::vector<Real> probs(state.dimension());
    std::size_t next = 0;
    while (!stream.done()) {
        state.apply(stream.next().gate);
        if (stream.emitted() == schedule.counts()[next]) {
            state.probabilities_into(probs);
            visit(next, probs);
            ++next;
        }
    }
}

/// One probability vector per checkpoint.
template <class Real = double>
std::vector<std::vector<Real>>
run_with_checkpoints(const CircuitSpec &spec,
                     const CheckpointSchedule &schedule) {
    std::vector<std::vector<Real>> snapshots;
    snapshots.reserve(schedule.size());
    run_with_checkpoints<Real>(
        spec, schedule, [&](std::size_t, std::span<const Real> probs) {
            snapshots.emplace_back(probs.begin(), probs.end());
        });
    return snapshots;
}

/// Same as above for an explicit, already generated event sequence.
template <class Real = double>
std::vector<std::vector<Real>>
run_with_checkpoints(std::size_t num_qubits,
                     std::span<const GateEvent> events,
                     const CheckpointSchedule &schedule) {
    if (schedule.counts().back() != events.size()) {
        throw std::invalid_argument(
            "checkpoint schedule does not end at the stream length");
    }
    auto state = new_zero_state<Real>(num_qubits);
    std::vector<std::vector<Real>> snapshots;
    std::size_t next = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        state.apply(events[i].gate);
        if (i + 1 == schedule.counts()[next]) {
            snapshots.push_back(state.probabilities());
            ++next;
        }
    }
    return snapshots;
}

} // namespace mcq
