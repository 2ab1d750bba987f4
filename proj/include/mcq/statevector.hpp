// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Dense statevector with in-place H, T, CNOT and SWAP kernels.
 *
 * Qubit q maps to bit (n - 1 - q) of the amplitude index, so qubit 0 is the
 * most significant bit and reads leftmost in a ket label |q0 q1 ... >.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcq {

using Qubit = std::uint32_t;

enum class GateType : std::uint8_t { H, T, CNOT, SWAP };

inline const char *gate_name(GateType type) {
    switch (type) {
    case GateType::H:
        return "H";
    case GateType::T:
        return "T";
    case GateType::CNOT:
        return "CNOT";
    case GateType::SWAP:
        return "SWAP";
    }
    return "?";
}

/// One gate with its operands. For CNOT `first` is the control and
/// `second` the target; single-qubit gates only use `first`.
struct Gate {
    GateType type{GateType::H};
    Qubit first{0};
    Qubit second{0};

    static constexpr Gate h(Qubit target) { return {GateType::H, target, 0}; }
    static constexpr Gate t(Qubit target) { return {GateType::T, target, 0}; }
    static constexpr Gate cnot(Qubit control, Qubit target) {
        return {GateType::CNOT, control, target};
    }
    static constexpr Gate swap(Qubit a, Qubit b) {
        return {GateType::SWAP, a, b};
    }

    [[nodiscard]] constexpr bool is_two_qubit() const {
        return type == GateType::CNOT || type == GateType::SWAP;
    }

    friend constexpr bool operator==(const Gate &, const Gate &) = default;
};

inline constexpr std::size_t kDefaultMaxQubits = 24;

template <class Real = double> class StateVector {
  public:
    using real_type = Real;
    using complex_type = std::complex<Real>;

    /// |0...0> on `num_qubits` qubits. Throws std::invalid_argument when the
    /// count is outside [1, max_qubits].
    explicit StateVector(std::size_t num_qubits,
                         std::size_t max_qubits = kDefaultMaxQubits)
        : num_qubits_{num_qubits} {
        if (num_qubits < 1 || num_qubits > max_qubits) {
            throw std::invalid_argument(
                "qubit count " + std::to_string(num_qubits) +
                " outside supported range [1, " + std::to_string(max_qubits) +
                "]");
        }
        amplitudes_.assign(std::size_t{1} << num_qubits, complex_type{0, 0});
        amplitudes_[0] = complex_type{1, 0};
    }

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const { return amplitudes_.size(); }
    [[nodiscard]] std::span<const complex_type> amplitudes() const {
        return amplitudes_;
    }

    /// Overwrites the amplitudes. Length must be 2^n; normalization is the
    /// caller's business.
    void set_amplitudes(std::span<const complex_type> values) {
        if (values.size() != amplitudes_.size()) {
            throw std::invalid_argument("amplitude vector has wrong length");
        }
        amplitudes_.assign(values.begin(), values.end());
    }

    [[nodiscard]] Real norm() const {
        Real sum = 0;
        for (const auto &a : amplitudes_) {
            sum += std::norm(a);
        }
        return std::sqrt(sum);
    }

    void apply(const Gate &gate) {
        check_operand(gate.first);
        if (gate.is_two_qubit()) {
            check_operand(gate.second);
            if (gate.first == gate.second) {
                throw std::invalid_argument(
                    std::string(gate_name(gate.type)) +
                    " requires two distinct qubits");
            }
        }
        switch (gate.type) {
        case GateType::H:
            apply_hadamard(mask_of(gate.first));
            break;
        case GateType::T:
            apply_t(mask_of(gate.first));
            break;
        case GateType::CNOT:
            apply_cnot(mask_of(gate.first), mask_of(gate.second));
            break;
        case GateType::SWAP:
            apply_swap(mask_of(gate.first), mask_of(gate.second));
            break;
        }
    }

    /// |amplitude_i|^2 for every basis index i.
    [[nodiscard]] std::vector<Real> probabilities() const {
        std::vector<Real> out(amplitudes_.size());
        probabilities_into(out);
        return out;
    }

    void probabilities_into(std::span<Real> out) const {
        if (out.size() != amplitudes_.size()) {
            throw std::invalid_argument("probability buffer has wrong length");
        }
        Real total = 0;
        for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
            out[i] = std::norm(amplitudes_[i]);
            total += out[i];
        }
        if (std::abs(total - Real{1}) > kNormTolerance) {
            throw std::domain_error("state is not normalized (total "
                                    "probability " +
                                    std::to_string(total) + ")");
        }
    }

    static constexpr Real kNormTolerance = Real{1e-8};

  private:
    void check_operand(Qubit q) const {
        if (q >= num_qubits_) {
            throw std::out_of_range("qubit index " + std::to_string(q) +
                                    " out of range for " +
                                    std::to_string(num_qubits_) + " qubits");
        }
    }

    [[nodiscard]] std::size_t mask_of(Qubit q) const {
        return std::size_t{1} << (num_qubits_ - 1 - q);
    }

    void apply_hadamard(std::size_t mask) {
        const Real s = Real{1} / std::numbers::sqrt2_v<Real>;
        const std::size_t dim = amplitudes_.size();
        for (std::size_t block = 0; block < dim; block += 2 * mask) {
            for (std::size_t i = block; i < block + mask; ++i) {
                const complex_type a0 = amplitudes_[i];
                const complex_type a1 = amplitudes_[i + mask];
                amplitudes_[i] = s * (a0 + a1);
                amplitudes_[i + mask] = s * (a0 - a1);
            }
        }
    }

    void apply_t(std::size_t mask) {
        const Real c = Real{1} / std::numbers::sqrt2_v<Real>;
        const complex_type phase{c, c};
        const std::size_t dim = amplitudes_.size();
        for (std::size_t block = mask; block < dim; block += 2 * mask) {
            for (std::size_t i = block; i < block + mask; ++i) {
                amplitudes_[i] *= phase;
            }
        }
    }

    void apply_cnot(std::size_t control, std::size_t target) {
        const std::size_t dim = amplitudes_.size();
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & control) != 0 && (i & target) == 0) {
                std::swap(amplitudes_[i], amplitudes_[i | target]);
            }
        }
    }

    void apply_swap(std::size_t a, std::size_t b) {
        const std::size_t dim = amplitudes_.size();
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & a) != 0 && (i & b) == 0) {
                std::swap(amplitudes_[i], amplitudes_[(i ^ a) | b]);
            }
        }
    }

    std::size_t num_qubits_;
    std::vector<complex_type> amplitudes_;
};

/// |0...0> on n qubits.
template <class Real = double>
StateVector<Real> new_zero_state(std::size_t num_qubits,
                                 std::size_t max_qubits = kDefaultMaxQubits) {
    return StateVector<Real>(num_qubits, max_qubits);
}

} // namespace mcq
