// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Majorization-based complexity metrics.
 *
 * For an ensemble of output distributions, the Lorenz cumulants F(k) (sum
 * of the k largest probabilities) fluctuate from member to member. The
 * per-k population standard deviation of F(k) is the ensemble's
 * fluctuation curve. D_H is the Euclidean distance between a circuit
 * ensemble's curve and the curve of Haar-random states, and ID_H is the
 * trapezoidal integral of D_H over gate count.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "random.hpp"

namespace mcq {

inline constexpr double kNormalizationTolerance = 1e-8;

/// Cumulants F(1..M) of a probability vector sorted in non-increasing
/// order. Element k - 1 holds F(k).
class LorenzCurve {
  public:
    LorenzCurve() = default;
    explicit LorenzCurve(std::vector<double> cumulants)
        : cumulants_{std::move(cumulants)} {}

    [[nodiscard]] std::size_t dimension() const { return cumulants_.size(); }
    [[nodiscard]] std::span<const double> cumulants() const {
        return cumulants_;
    }
    /// F(k) for 1-based k.
    [[nodiscard]] double at(std::size_t k) const { return cumulants_.at(k - 1); }

  private:
    std::vector<double> cumulants_;
};

/// Per-k ensemble standard deviation of F(k). Element k - 1 holds the
/// value for k.
class FluctuationCurve {
  public:
    FluctuationCurve() = default;
    explicit FluctuationCurve(std::vector<double> values)
        : values_{std::move(values)} {}

    [[nodiscard]] std::size_t dimension() const { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] double at(std::size_t k) const { return values_.at(k - 1); }

  private:
    std::vector<double> values_;
};

namespace detail {

inline void check_distribution(std::span<const double> p) {
    if (p.empty()) {
        throw std::invalid_argument("probability vector is empty");
    }
    double total = 0;
    for (double x : p) {
        if (!(x >= 0)) {
            throw std::invalid_argument(
                "probability vector has a negative or NaN entry");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw std::invalid_argument("probability vector sums to " +
                                    std::to_string(total) + ", not 1");
    }
}

/// Sorts `scratch` (a copy of p) in place and overwrites it with cumulants.
inline void cumulate_descending(std::span<double> scratch) {
    std::sort(scratch.begin(), scratch.end(), std::greater<>());
    double running = 0;
    for (double &x : scratch) {
        running += x;
        x = running;
    }
}

} // namespace detail

inline LorenzCurve lorenz(std::span<const double> p) {
    detail::check_distribution(p);
    std::vector<double> cumulants(p.begin(), p.end());
    detail::cumulate_descending(cumulants);
    return LorenzCurve(std::move(cumulants));
}

/// True iff p is majorized by q: every prefix cumulant of q is at least the
/// matching cumulant of p. Both must be normalized, so the k = M terms agree
/// by construction. `slack` absorbs summation rounding.
inline bool majorizes(std::span<const double> q, std::span<const double> p,
                      double slack = 1e-12) {
    if (q.size() != p.size()) {
        throw std::invalid_argument("majorization needs equal lengths");
    }
    const LorenzCurve fq = lorenz(q);
    const LorenzCurve fp = lorenz(p);
    for (std::size_t i = 0; i + 1 < fq.dimension(); ++i) {
        if (fq.cumulants()[i] + slack < fp.cumulants()[i]) {
            return false;
        }
    }
    return true;
}

/// Population standard deviation of F(k) across the ensemble, per k.
///
/// Computed as the root of the mean squared deviation from the mean, which
/// equals sqrt(<F^2> - <F>^2) exactly but does not cancel catastrophically
/// where every F(k) is close to 1.
inline FluctuationCurve fluctuation_curve(std::span<const LorenzCurve> ensemble) {
    if (ensemble.size() < 2) {
        throw std::invalid_argument(
            "fluctuation curve needs an ensemble of at least two members");
    }
    const std::size_t dim = ensemble.front().dimension();
    for (const auto &member : ensemble) {
        if (member.dimension() != dim) {
            throw std::invalid_argument(
                "ensemble members have different dimensions");
        }
    }
    const double count = static_cast<double>(ensemble.size());
    std::vector<double> mean(dim, 0.0);
    for (const auto &member : ensemble) {
        const auto f = member.cumulants();
        for (std::size_t k = 0; k < dim; ++k) {
            mean[k] += f[k];
        }
    }
    for (double &m : mean) {
        m /= count;
    }
    std::vector<double> spread(dim, 0.0);
    for (const auto &member : ensemble) {
        const auto f = member.cumulants();
        for (std::size_t k = 0; k < dim; ++k) {
            const double d = f[k] - mean[k];
            spread[k] += d * d;
        }
    }
    for (double &s : spread) {
        s = std::sqrt(s / count);
    }
    return FluctuationCurve(std::move(spread));
}

inline FluctuationCurve
fluctuation_curve(std::span<const std::vector<double>> ensemble) {
    std::vector<LorenzCurve> curves;
    curves.reserve(ensemble.size());
    for (const auto &p : ensemble) {
        curves.push_back(lorenz(p));
    }
    return fluctuation_curve(std::span<const LorenzCurve>(curves));
}

/// Probabilities of one Haar-random pure state on n qubits: 2^n i.i.d.
/// standard complex Gaussian amplitudes, normalized.
inline std::vector<double> haar_random_probabilities(std::size_t num_qubits,
                                                     Engine &engine) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> probs(std::size_t{1} << num_qubits);
    double total = 0;
    for (double &p : probs) {
        const double re = gauss(engine);
        const double im = gauss(engine);
        p = re * re + im * im;
        total += p;
    }
    for (double &p : probs) {
        p /= total;
    }
    return probs;
}

inline constexpr std::size_t kMaxHaarQubits = 24;

/// Fluctuation curve of `num_samples` Haar-random n-qubit states.
/// Deterministic in `seed` on a given standard library.
inline FluctuationCurve haar_reference(std::size_t num_qubits,
                                       std::size_t num_samples,
                                       std::uint64_t seed) {
    if (num_samples < 2) {
        throw std::invalid_argument(
            "Haar reference needs at least two samples");
    }
    if (num_qubits < 1 || num_qubits > kMaxHaarQubits) {
        throw std::invalid_argument("Haar reference qubit count out of range");
    }
    Engine engine(seed);
    std::vector<LorenzCurve> curves;
    curves.reserve(num_samples);
    for (std::size_t s = 0; s < num_samples; ++s) {
        auto probs = haar_random_probabilities(num_qubits, engine);
        detail::cumulate_descending(probs);
        curves.emplace_back(std::move(probs));
    }
    return fluctuation_curve(std::span<const LorenzCurve>(curves));
}

/// D_H: Euclidean distance between two fluctuation curves.
inline double distance_to_haar(const FluctuationCurve &circuit_curve,
                               const FluctuationCurve &haar_curve) {
    if (circuit_curve.dimension() != haar_curve.dimension()) {
        throw std::invalid_argument(
            "fluctuation curves have different dimensions (" +
            std::to_string(circuit_curve.dimension()) + " vs " +
            std::to_string(haar_curve.dimension()) + ")");
    }
    double sum = 0;
    const auto a = circuit_curve.values();
    const auto b = haar_curve.values();
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

struct DhPoint {
    double gate_count;
    double dh;
};

/// ID_H: trapezoidal integral of D_H over [first, last] gate count.
inline double integrated_dh(std::span<const DhPoint> points) {
    if (points.size() < 2) {
        throw std::invalid_argument(
            "integrated D_H needs at least two points");
    }
    double area = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double width = points[i].gate_count - points[i - 1].gate_count;
        if (!(width > 0)) {
            throw std::invalid_argument(
                "gate counts must be strictly increasing");
        }
        area += 0.5 * width * (points[i].dh + points[i - 1].dh);
    }
    return area;
}

} // namespace mcq
