// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "mcq/circuit.hpp"
#include "support/dense_oracle.hpp"

namespace {

using mcq::Architecture;
using mcq::CheckpointSchedule;
using mcq::CircuitSpec;
using mcq::Gate;
using mcq::GateEvent;
using mcq::GateType;
using mcq::Partition;

std::string dump(const std::vector<GateEvent> &events) {
    std::ostringstream os;
    for (const auto &e : events) {
        mcq::write_event(os, e);
    }
    return os.str();
}

TEST(Stream, RoundStructureAndTruncation) {
    const CircuitSpec spec{Partition(4, 3), Architecture::Ring, 10, 2000, 1};
    EXPECT_EQ(spec.round_length(), 44u);
    const auto events = mcq::generate_stream(spec);
    ASSERT_EQ(events.size(), 2000u);
    EXPECT_EQ(2000 / 44, 45);
    EXPECT_EQ(2000 - 45 * 44, 20);

    const auto edges = mcq::edges(Architecture::Ring, 4);
    std::size_t swaps = 0;
    for (const auto &e : events) {
        const std::size_t pos = e.index % 44;
        if (pos < 40) {
            ASSERT_NE(e.gate.type, GateType::SWAP) << e.index;
            const std::size_t core = pos / 10;
            EXPECT_EQ(e.gate.first / 3, core);
            if (e.gate.type == GateType::CNOT) {
                EXPECT_EQ(e.gate.second / 3, core);
            }
        } else {
            ASSERT_EQ(e.gate.type, GateType::SWAP) << e.index;
            const auto &edge = edges[pos - 40];
            EXPECT_EQ(e.gate.first / 3, edge.a);
            EXPECT_EQ(e.gate.second / 3, edge.b);
            ++swaps;
        }
    }
    // 45 full rounds of 4 swaps; the partial 46th round ends inside core 1.
    EXPECT_EQ(swaps, 45u * 4);
    EXPECT_EQ(events.back().index, 1999u);
}

TEST(Stream, MonolithicHasNoSwaps) {
    const CircuitSpec spec{Partition(1, 5), Architecture::Monolithic, 7, 300,
                           3};
    EXPECT_EQ(spec.round_length(), 7u);
    std::set<mcq::Qubit> touched;
    for (const auto &e : mcq::generate_stream(spec)) {
        EXPECT_NE(e.gate.type, GateType::SWAP);
        touched.insert(e.gate.first);
    }
    EXPECT_EQ(touched.size(), 5u);
}

TEST(Stream, Determinism) {
    const CircuitSpec spec{Partition(3, 4), Architecture::Star, 5, 500, 77};
    EXPECT_EQ(mcq::generate_stream(spec), mcq::generate_stream(spec));
    CircuitSpec other = spec;
    other.seed = 78;
    EXPECT_NE(mcq::generate_stream(spec), mcq::generate_stream(other));
}

TEST(Stream, GoldenSnapshot) {
    const CircuitSpec spec{Partition(2, 2), Architecture::Linear, 2, 8, 42};
    std::ifstream in(MCQ_GOLDEN_DIR "/stream_linear_2x2_gpc2_g8_seed42.txt",
                     std::ios::binary);
    ASSERT_TRUE(in) << "golden file missing";
    std::stringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(dump(mcq::generate_stream(spec)), golden.str());
}

TEST(Stream, LocalGateDistribution) {
    // Kinds uniform over {CNOT, H, T}; CNOT pairs uniform over the 6 ordered
    // pairs of a 3-qubit core.
    const CircuitSpec spec{Partition(1, 3), Architecture::Monolithic, 1,
                           60000, 9};
    std::array<int, 3> kinds{};
    std::array<int, 9> pairs{};
    for (const auto &e : mcq::generate_stream(spec)) {
        switch (e.gate.type) {
        case GateType::CNOT:
            ++kinds[0];
            ASSERT_NE(e.gate.first, e.gate.second);
            ++pairs[e.gate.first * 3 + e.gate.second];
            break;
        case GateType::H:
            ++kinds[1];
            break;
        case GateType::T:
            ++kinds[2];
            break;
        default:
            FAIL();
        }
    }
    for (int k : kinds) {
        EXPECT_NEAR(k, 20000, 5 * std::sqrt(20000.0 * 2 / 3));
    }
    const double per_pair = kinds[0] / 6.0;
    for (int c = 0; c < 3; ++c) {
        for (int t = 0; t < 3; ++t) {
            if (c == t) {
                EXPECT_EQ(pairs[c * 3 + t], 0);
            } else {
                EXPECT_NEAR(pairs[c * 3 + t], per_pair,
                            5 * std::sqrt(per_pair));
            }
        }
    }
}

TEST(Stream, AccountingAcrossArchitectures) {
    for (Architecture a : {Architecture::Linear, Architecture::Ring,
                           Architecture::Star, Architecture::FullyConnected}) {
        for (std::size_t gpc : {1u, 3u, 50u}) {
            const CircuitSpec spec{Partition(4, 2), a, gpc, 777, gpc};
            const auto events = mcq::generate_stream(spec);
            std::size_t local = 0;
            std::size_t swaps = 0;
            for (const auto &e : events) {
                if (e.gate.type == GateType::SWAP) {
                    ++swaps;
                    EXPECT_NE(e.gate.first / 2, e.gate.second / 2);
                } else {
                    ++local;
                    if (e.gate.type == GateType::CNOT) {
                        EXPECT_EQ(e.gate.first / 2, e.gate.second / 2);
                    }
                }
            }
            EXPECT_EQ(local + swaps, 777u);
        }
    }
}

TEST(Stream, RejectsInvalidSpecs) {
    EXPECT_THROW(mcq::generate_stream(
                     {Partition(2, 2), Architecture::Ring, 0, 10, 0}),
                 std::invalid_argument);
    EXPECT_THROW(mcq::generate_stream(
                     {Partition(2, 2), Architecture::Ring, 1, 0, 0}),
                 std::invalid_argument);
    EXPECT_THROW(mcq::generate_stream(
                     {Partition(3, 2), Architecture::Monolithic, 1, 10, 0}),
                 std::invalid_argument);
}

TEST(Schedule, Defaults) {
    const auto s = CheckpointSchedule::standard();
    ASSERT_EQ(s.size(), 19u);
    EXPECT_EQ(s.counts().front(), 200u);
    EXPECT_EQ(s.counts()[1], 300u);
    EXPECT_EQ(s.counts().back(), 2000u);
    EXPECT_EQ(CheckpointSchedule::regular(200, 100, 450).counts(),
              (std::vector<std::size_t>{200, 300, 400, 450}));
    EXPECT_EQ(CheckpointSchedule::regular(1, 100, 1).counts(),
              (std::vector<std::size_t>{1}));
}

TEST(Schedule, Validation) {
    EXPECT_THROW(CheckpointSchedule({}, 10), std::invalid_argument);
    EXPECT_THROW(CheckpointSchedule({5, 5, 10}, 10), std::invalid_argument);
    EXPECT_THROW(CheckpointSchedule({5, 8}, 10), std::invalid_argument);
    EXPECT_THROW(CheckpointSchedule({0, 10}, 10), std::invalid_argument);
    EXPECT_THROW(CheckpointSchedule::regular(300, 100, 200),
                 std::invalid_argument);
}

TEST(Checkpoints, SingleHadamard) {
    const std::vector<GateEvent> events{{0, Gate::h(0)}};
    const auto snaps = mcq::run_with_checkpoints<double>(
        2, events, CheckpointSchedule({1}, 1));
    ASSERT_EQ(snaps.size(), 1u);
    EXPECT_NEAR(snaps[0][0], 0.5, 1e-12);
    EXPECT_NEAR(snaps[0][1], 0.0, 1e-12);
    EXPECT_NEAR(snaps[0][2], 0.5, 1e-12);
    EXPECT_NEAR(snaps[0][3], 0.0, 1e-12);
}

TEST(Checkpoints, FinalSnapshotMatchesFullEvolution) {
    const CircuitSpec spec{Partition(3, 2), Architecture::Ring, 4, 150, 12};
    const auto snaps =
        mcq::run_with_checkpoints(spec, CheckpointSchedule({150}, 150));
    auto state = mcq::new_zero_state(6);
    for (const auto &e : mcq::generate_stream(spec)) {
        state.apply(e.gate);
    }
    EXPECT_EQ(snaps.at(0), state.probabilities());
}

TEST(Checkpoints, MatchDenseOracle) {
    // Three qubits only admit a single core; rounds of 4 put both
    // checkpoints mid-round.
    const CircuitSpec spec{Partition(1, 3), Architecture::Monolithic, 4, 10,
                           31};
    const auto events = mcq::generate_stream(spec);
    const auto snaps =
        mcq::run_with_checkpoints(spec, CheckpointSchedule({5, 10}, 10));
    ASSERT_EQ(snaps.size(), 2u);
    auto state = mcq::oracle::zero_state(3);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        state = mcq::oracle::multiply(
            mcq::oracle::gate_matrix(3, events[i].gate), state);
        if (i + 1 == 5 || i + 1 == 10) {
            const auto &p = snaps[checked++];
            for (std::size_t k = 0; k < state.size(); ++k) {
                EXPECT_NEAR(p[k], std::norm(state[k]), 1e-12);
            }
        }
    }
    EXPECT_EQ(checked, 2u);
}

TEST(Checkpoints, SnapshotsAreNormalized) {
    const CircuitSpec spec{Partition(4, 3), Architecture::FullyConnected, 3,
                           2000, 8};
    const auto snaps =
        mcq::run_with_checkpoints(spec, CheckpointSchedule::standard());
    ASSERT_EQ(snaps.size(), 19u);
    for (const auto &p : snaps) {
        EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-10);
    }
}

TEST(Checkpoints, ScheduleMustEndAtTotal) {
    const CircuitSpec spec{Partition(2, 2), Architecture::Linear, 2, 20, 1};
    EXPECT_THROW(mcq::run_with_checkpoints(spec, CheckpointSchedule({10}, 10)),
                 std::invalid_argument);
}

} // namespace
