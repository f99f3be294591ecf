#include "qsha/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "qsha/errors.hpp"
#include "qsha/rng.hpp"

namespace qsha::qsim {

namespace {

constexpr std::int64_t kDenseParallelCutoff = 1 << 14;
constexpr std::uint64_t kShotParallelCutoff = 256;

// Widens k by one zero bit at `pos`, keeping lower bits in place.
constexpr std::uint64_t insert_zero_bit(std::uint64_t k, std::uint32_t pos) {
    const std::uint64_t low_mask = (std::uint64_t(1) << pos) - 1;
    return ((k & ~low_mask) << 1) | (k & low_mask);
}

std::size_t words_for(std::uint32_t num_qubits) { return (num_qubits + 63) / 64; }

bool word_bit(std::span<const std::uint64_t> words, std::uint32_t q) {
    return (words[q / 64] >> (q % 64)) & 1u;
}

void word_flip(std::span<std::uint64_t> words, std::uint32_t q) {
    words[q / 64] ^= std::uint64_t(1) << (q % 64);
}

void validate_noise(const std::optional<NoiseModel>& noise) {
    if (noise && !(noise->cnot_flip_prob >= 0.0 && noise->cnot_flip_prob <= 1.0)) {
        throw contract_violation("cnot_flip_prob must be in [0,1]");
    }
}

// One noisy shot: basis tracking with post-CNOT coin flips. Exact for the
// X/CNOT gate set because bit flips keep basis states basis.
void run_noisy_shot(const Circuit& circuit, double flip_prob, SplitMix64& rng,
                    std::span<std::uint64_t> scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (const GateOp& gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::X:
            word_flip(scratch, gate.target);
            break;
        case GateKind::Cnot:
            if (word_bit(scratch, gate.control)) {
                word_flip(scratch, gate.target);
            }
            if (rng.next_double() < flip_prob) {
                word_flip(scratch, gate.control);
            }
            if (rng.next_double() < flip_prob) {
                word_flip(scratch, gate.target);
            }
            break;
        default:
            throw unsupported_gate_error("unknown gate kind");
        }
    }
}

} // namespace

Circuit::Circuit(std::uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw contract_violation("circuit needs at least one qubit");
    }
}

void Circuit::check_gate_append(std::uint32_t qubit) const {
    if (!measured_.empty()) {
        throw contract_violation("measurement is terminal: cannot append gates after measure");
    }
    if (qubit >= num_qubits_) {
        throw contract_violation("qubit index " + std::to_string(qubit) + " out of range for " +
                                 std::to_string(num_qubits_) + " qubits");
    }
}

Circuit& Circuit::x(std::uint32_t target) {
    check_gate_append(target);
    gates_.push_back({GateKind::X, target, 0});
    return *this;
}

Circuit& Circuit::cnot(std::uint32_t control, std::uint32_t target) {
    check_gate_append(control);
    check_gate_append(target);
    if (control == target) {
        throw contract_violation("cnot control and target must differ");
    }
    gates_.push_back({GateKind::Cnot, target, control});
    return *this;
}

Circuit& Circuit::encode_bits(std::string_view bits, std::uint32_t offset) {
    if (offset + bits.size() > num_qubits_) {
        throw contract_violation("bit window [" + std::to_string(offset) + ", " +
                                 std::to_string(offset + bits.size()) + ") out of range");
    }
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] == '1') {
            x(offset + static_cast<std::uint32_t>(bits.size() - 1 - j));
        } else if (bits[j] != '0') {
            throw contract_violation("bitstring may contain only '0' and '1'");
        }
    }
    return *this;
}

Circuit& Circuit::measure(std::span<const std::uint32_t> qubits) {
    if (qubits.empty()) {
        throw contract_violation("measure needs at least one qubit");
    }
    for (std::uint32_t q : qubits) {
        if (q >= num_qubits_) {
            throw contract_violation("measured qubit " + std::to_string(q) + " out of range");
        }
        auto it = std::lower_bound(measured_.begin(), measured_.end(), q);
        if (it == measured_.end() || *it != q) {
            measured_.insert(it, q);
        }
    }
    return *this;
}

Circuit& Circuit::measure_all() {
    std::vector<std::uint32_t> all(num_qubits_);
    for (std::uint32_t q = 0; q < num_qubits_; ++q) {
        all[q] = q;
    }
    return measure(all);
}

double norm_squared(const StateVector& amplitudes) {
    double sum = 0.0;
    for (const auto& a : amplitudes) {
        sum += std::norm(a);
    }
    return sum;
}

StateVector simulate_dense(const Circuit& circuit, std::uint32_t dense_qubit_cap) {
    const std::uint32_t n = circuit.num_qubits();
    if (n > dense_qubit_cap) {
        throw capacity_error("dense simulation of " + std::to_string(n) +
                             " qubits exceeds the cap of " + std::to_string(dense_qubit_cap));
    }
    const std::int64_t dim = std::int64_t(1) << n;
    StateVector amps(dim);
    amps[0] = 1.0;

    for (const GateOp& gate : circuit.gates()) {
        if (gate.kind == GateKind::X) {
            const std::uint64_t tmask = std::uint64_t(1) << gate.target;
            const std::int64_t pairs = dim >> 1;
#pragma omp parallel for schedule(static) if (pairs >= kDenseParallelCutoff)
            for (std::int64_t k = 0; k < pairs; ++k) {
                const std::uint64_t i0 = insert_zero_bit(k, gate.target);
                std::swap(amps[i0], amps[i0 | tmask]);
            }
        } else {
            const std::uint64_t cmask = std::uint64_t(1) << gate.control;
            const std::uint64_t tmask = std::uint64_t(1) << gate.target;
            const std::uint32_t lo = std::min(gate.control, gate.target);
            const std::uint32_t hi = std::max(gate.control, gate.target);
            const std::int64_t quads = dim >> 2;
#pragma omp parallel for schedule(static) if (quads >= kDenseParallelCutoff)
            for (std::int64_t k = 0; k < quads; ++k) {
                const std::uint64_t base = insert_zero_bit(insert_zero_bit(k, lo), hi) | cmask;
                std::swap(amps[base], amps[base | tmask]);
            }
        }
    }
    return amps;
}

void apply_gates_basis(std::span<const GateOp> gates, std::span<std::uint64_t> bits) {
    for (const GateOp& gate : gates) {
        switch (gate.kind) {
        case GateKind::X:
            word_flip(bits, gate.target);
            break;
        case GateKind::Cnot:
            if (word_bit(bits, gate.control)) {
                word_flip(bits, gate.target);
            }
            break;
        default:
            throw unsupported_gate_error("unknown gate kind");
        }
    }
}

std::uint64_t apply_gates_basis_word(std::span<const GateOp> gates, std::uint64_t bits) {
    for (const GateOp& gate : gates) {
        switch (gate.kind) {
        case GateKind::X:
            bits ^= std::uint64_t(1) << gate.target;
            break;
        case GateKind::Cnot:
            if ((bits >> gate.control) & 1u) {
                bits ^= std::uint64_t(1) << gate.target;
            }
            break;
        default:
            throw unsupported_gate_error("unknown gate kind");
        }
    }
    return bits;
}

std::string simulate_basis(const Circuit& circuit) {
    const std::uint32_t n = circuit.num_qubits();
    std::vector<std::uint64_t> bits(words_for(n), 0);
    apply_gates_basis(circuit.gates(), bits);

    std::string out(n, '0');
    for (std::uint32_t q = 0; q < n; ++q) {
        if (word_bit(bits, q)) {
            out[n - 1 - q] = '1';
        }
    }
    return out;
}

std::string render_measured(const Circuit& circuit, std::uint64_t basis_bits) {
    const auto& measured = circuit.measured_qubits();
    std::string out(measured.size(), '0');
    for (std::size_t j = 0; j < measured.size(); ++j) {
        const std::uint32_t q = measured[measured.size() - 1 - j];
        if ((basis_bits >> q) & 1u) {
            out[j] = '1';
        }
    }
    return out;
}

std::string render_measured(const Circuit& circuit, std::span<const std::uint64_t> basis_words) {
    const auto& measured = circuit.measured_qubits();
    std::string out(measured.size(), '0');
    for (std::size_t j = 0; j < measured.size(); ++j) {
        if (word_bit(basis_words, measured[measured.size() - 1 - j])) {
            out[j] = '1';
        }
    }
    return out;
}

ShotHistogram run(const Circuit& circuit, std::uint64_t shots,
                  const std::optional<NoiseModel>& noise, std::uint64_t seed) {
    if (shots < 1) {
        throw contract_violation("shots must be at least 1");
    }
    if (circuit.measured_qubits().empty()) {
        throw contract_violation("run needs at least one measured qubit");
    }
    validate_noise(noise);

    ShotHistogram hist;
    hist.shots = shots;

    const double flip_prob = noise ? noise->cnot_flip_prob : 0.0;
    if (flip_prob <= 0.0) {
        // The X/CNOT gate set maps the all-zero basis state to one basis
        // state, so every shot lands in the same bin.
        std::vector<std::uint64_t> bits(words_for(circuit.num_qubits()), 0);
        apply_gates_basis(circuit.gates(), bits);
        hist.counts[render_measured(circuit, bits)] = shots;
        return hist;
    }

#pragma omp parallel if (shots >= kShotParallelCutoff)
    {
        std::map<std::string, std::uint64_t> local;
        std::vector<std::uint64_t> scratch(words_for(circuit.num_qubits()));
#pragma omp for schedule(static)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(shots); ++s) {
            SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(s)));
            run_noisy_shot(circuit, flip_prob, rng, scratch);
            ++local[render_measured(circuit, scratch)];
        }
#pragma omp critical
        for (const auto& [outcome, count] : local) {
            hist.counts[outcome] += count;
        }
    }
    return hist;
}

ShotHistogram sample_dense(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed,
                           std::uint32_t dense_qubit_cap) {
    if (shots < 1) {
        throw contract_violation("shots must be at least 1");
    }
    if (circuit.measured_qubits().empty()) {
        throw contract_violation("run needs at least one measured qubit");
    }

    const StateVector amps = simulate_dense(circuit, dense_qubit_cap);
    std::vector<double> cumulative(amps.size());
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        total += std::norm(amps[i]);
        cumulative[i] = total;
    }

    ShotHistogram hist;
    hist.shots = shots;

#pragma omp parallel if (shots >= kShotParallelCutoff)
    {
        std::map<std::string, std::uint64_t> local;
#pragma omp for schedule(static)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(shots); ++s) {
            SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(s)));
            const double u = rng.next_double() * total;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            std::uint64_t index = it == cumulative.end()
                                      ? cumulative.size() - 1
                                      : static_cast<std::uint64_t>(it - cumulative.begin());
            ++local[render_measured(circuit, index)];
        }
#pragma omp critical
        for (const auto& [outcome, count] : local) {
            hist.counts[outcome] += count;
        }
    }
    return hist;
}

} // namespace qsha::qsim
